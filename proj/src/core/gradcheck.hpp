// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "core/param_store.hpp"

namespace seglearn::core {

/// Central-difference gradient oracle.
///
/// The caller populates every parameter's grad buffer with the analytic
/// gradient of `loss`, then calls this. Each scalar parameter element is
/// perturbed by ±h, the loss re-evaluated, and the symmetric relative error
/// |analytic - numeric| / max(1e-8, |analytic| + |numeric|) computed; the
/// worst error over all elements is returned.
///
/// `loss` must be deterministic (dropout off, fixed inputs) and must not
/// touch gradient buffers. Parameter values are restored exactly.
double finite_difference_check(const std::function<double(ParamStore&)>& loss,
                               ParamStore& store, double h);

}  // namespace seglearn::core
