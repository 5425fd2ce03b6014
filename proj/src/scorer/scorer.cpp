// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "scorer/scorer.hpp"

#include "core/error.hpp"

namespace seglearn::scorer {

double word_score(const core::Tensor& word, const LstmParams& params) {
    return core::dot(params.word_u->value, word);
}

double link_score(const core::Tensor& prediction, const core::Tensor& word) {
    return core::dot(prediction, word);
}

double step_score(const core::Tensor& word, const core::Tensor& prediction,
                  const LstmParams& params, ScoreMode mode) {
    double s = 0.0;
    if (mode != ScoreMode::link_only) s += word_score(word, params);
    if (mode != ScoreMode::word_only) s += link_score(prediction, word);
    return s;
}

double sentence_score(const std::vector<core::Tensor>& words, const LstmParams& params,
                      ScoreMode mode, SentenceCache* cache) {
    if (words.empty()) core::throw_invalid("sentence_score: empty word sequence");
    const std::size_t n = words.size();
    if (cache != nullptr) {
        cache->words = words;
        cache->predictions.resize(n);
        cache->steps.resize(n - 1);
    }

    LstmState state = initial_state(params);
    double score = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        PredictCache local;
        PredictCache* pc = cache != nullptr ? &cache->predictions[t] : &local;
        core::Tensor prediction = predict_next(state, params, pc);
        score += step_score(words[t], prediction, params, mode);
        if (t + 1 < n) {
            // the state after the last word never feeds a score
            state = lstm_step(words[t], state, params, cache != nullptr ? &cache->steps[t] : nullptr);
        }
    }
    return score;
}

void sentence_score_backward(const SentenceCache& cache, LstmParams& params, double dscore,
                             ScoreMode mode, std::vector<core::Tensor>& dwords) {
    const std::size_t n = cache.words.size();
    const int d = params.dim;
    const int H = params.hidden;
    dwords.assign(n, core::Tensor({d}));

    core::Tensor dh({H});
    core::Tensor dc({H});
    for (std::size_t t = n; t-- > 0;) {
        if (t + 1 < n) {
            lstm_step_backward(cache.steps[t], params, dh, dc, &dwords[t]);
        }
        const core::Tensor& word = cache.words[t];
        const core::Tensor& prediction = cache.predictions[t].p;
        if (mode != ScoreMode::link_only) {
            core::add_scaled(dwords[t], params.word_u->value, dscore);
            core::add_scaled(params.word_u->grad, word, dscore);
        }
        if (mode != ScoreMode::word_only) {
            core::add_scaled(dwords[t], prediction, dscore);
            core::Tensor dp({d});
            for (int i = 0; i < d; ++i) dp[i] = dscore * word[i];
            predict_next_backward(cache.predictions[t], params, dp, dh);
        }
    }
    core::add_scaled(params.h0->grad, dh, 1.0);
    core::add_scaled(params.c0->grad, dc, 1.0);
}

}  // namespace seglearn::scorer
