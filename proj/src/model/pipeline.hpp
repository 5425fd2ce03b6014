// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "corpus/corpus.hpp"
#include "model/model.hpp"

namespace seglearn::model {

/// Segments one raw input line: normalization, beam decode, then bakeoff
/// rendering (words joined by two spaces, surfaces de-normalized). Blank
/// lines come back empty. beam/max_word_len of 0 use the model defaults.
/// Thread-safe over a frozen model.
std::string segment_line(const Model& m, const std::string& line, int beam_width = 0,
                         int max_word_len = 0);

/// Parses two segmented files as gold/prediction pairs and scores them.
corpus::PrfResult evaluate_files(const std::string& gold_path, const std::string& pred_path);

/// Per-line listing of imperfect sentences, for error analysis.
std::string format_eval_detail(const corpus::PrfResult& result);

}  // namespace seglearn::model
