// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "scorer/lstm.hpp"

namespace seglearn::scorer {

/// Which terms of the per-word score to use. The ablation modes zero the
/// other term, gradients included.
enum class ScoreMode { both, word_only, link_only };

/// Plausibility of a candidate as a standalone word: u · y.
double word_score(const core::Tensor& word, const LstmParams& params);

/// Coherence of a candidate with the history that produced prediction p:
/// p · y.
double link_score(const core::Tensor& prediction, const core::Tensor& word);

/// Score contribution of appending `word` to a state: word score plus link
/// score, subject to the mode.
double step_score(const core::Tensor& word, const core::Tensor& prediction,
                  const LstmParams& params, ScoreMode mode);

struct SentenceCache {
    std::vector<core::Tensor> words;
    std::vector<PredictCache> predictions;  // one per word
    std::vector<LstmCache> steps;           // words.size() - 1 entries
};

/// Total score of a fixed word-vector sequence: Σ_t (u·y_t + p_t·y_t), with
/// p_1 derived from (h0, c0) and p_{t+1} from the state after consuming y_t.
/// Errors on an empty sequence.
double sentence_score(const std::vector<core::Tensor>& words, const LstmParams& params,
                      ScoreMode mode = ScoreMode::both, SentenceCache* cache = nullptr);

/// Backpropagates dscore through the cached forward pass, accumulating
/// parameter gradients (h0/c0 included) and writing per-word gradients.
void sentence_score_backward(const SentenceCache& cache, LstmParams& params, double dscore,
                             ScoreMode mode, std::vector<core::Tensor>& dwords);

}  // namespace seglearn::scorer
