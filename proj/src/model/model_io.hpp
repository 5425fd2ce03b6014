// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "model/model.hpp"

namespace seglearn::model {

inline constexpr int kModelFormatVersion = 1;

/// Writes the manifest (format version, dimensions, vocabulary in index
/// order, parameter names with shapes) followed by the raw little-endian
/// float32 payload in manifest order. See docs/MODEL_FORMAT.md.
void save_model(const Model& m, const std::string& path);
void save_model(const Model& m, std::ostream& out);

/// Loads a model saved by save_model. Format or version mismatches raise
/// parse errors naming the manifest version.
Model load_model(const std::string& path);
Model load_model(std::istream& in, const std::string& source);

/// Human-readable manifest summary (dimensions, vocabulary size, parameter
/// table, total parameter count).
std::string describe_model(const Model& m);

}  // namespace seglearn::model
