// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "core/gradcheck.hpp"

#include <algorithm>
#include <cmath>

namespace seglearn::core {

double finite_difference_check(const std::function<double(ParamStore&)>& loss,
                               ParamStore& store, double h) {
    double worst = 0.0;
    for (std::size_t pi = 0; pi < store.size(); ++pi) {
        Parameter& p = store.at(pi);
        const int n = p.value.size();
        for (int i = 0; i < n; ++i) {
            const double saved = p.value[i];
            p.value[i] = saved + h;
            const double up = loss(store);
            p.value[i] = saved - h;
            const double down = loss(store);
            p.value[i] = saved;
            const double numeric = (up - down) / (2.0 * h);
            const double analytic = p.grad[i];
            const double denom = std::max(1e-8, std::fabs(analytic) + std::fabs(numeric));
            worst = std::max(worst, std::fabs(analytic - numeric) / denom);
        }
    }
    return worst;
}

}  // namespace seglearn::core
