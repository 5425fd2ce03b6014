// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "core/rng.hpp"
#include "decoder/segmentation.hpp"
#include "model/model.hpp"

namespace helpers {

inline std::string fixture_path(const std::string& name) {
    return std::string(SEGLEARN_FIXTURE_DIR) + "/" + name;
}

inline seglearn::emb::CharVocab tiny_vocab(int extra = 8) {
    std::vector<std::string> tokens = {"<UNK>", "<ENG>", "<NUM>"};
    static const char* pool[] = {"一", "二", "三", "四", "五", "六", "七", "八", "九", "十"};
    for (int i = 0; i < extra && i < 10; ++i) tokens.push_back(pool[i]);
    return seglearn::emb::CharVocab::from_tokens(tokens);
}

struct TinyModelOptions {
    int d = 4;
    int H = 4;
    int w_max = 4;
    double init_scale = 0.5;  // wide init keeps test gradients well above fd noise
    bool randomize_state = true;
    seglearn::model::Composition composition = seglearn::model::Composition::gcnn;
    seglearn::model::ScorePartsMode score_parts = seglearn::model::ScorePartsMode::both;
    int vocab_extra = 8;
};

/// Small random model for oracle and decoder tests. Dropout stays off; the
/// trainable initial state is randomized so recurrent gradients are nonzero
/// from the first step.
inline seglearn::model::Model tiny_model(std::uint64_t seed, TinyModelOptions opts = {}) {
    seglearn::model::TrainConfig cfg;
    cfg.d = opts.d;
    cfg.H = opts.H;
    cfg.w_max = opts.w_max;
    cfg.seed = seed;
    cfg.dropout = 0.0;
    cfg.init_scale = opts.init_scale;
    cfg.composition = opts.composition;
    cfg.score_parts = opts.score_parts;
    auto m = seglearn::model::Model::init(tiny_vocab(opts.vocab_extra), cfg);
    if (opts.randomize_state) {
        seglearn::core::Rng rng(seed ^ 0x51ed270b7a9f1234ULL);
        for (double& v : m.lstm.h0->value.data) v = rng.next_symmetric(opts.init_scale);
        for (double& v : m.lstm.c0->value.data) v = rng.next_symmetric(opts.init_scale);
    }
    return m;
}

inline std::vector<int> random_ids(int n, const seglearn::model::Model& m, seglearn::core::Rng& rng) {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ids.push_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m.vocab.size()))));
    }
    return ids;
}

inline std::vector<seglearn::core::Tensor> random_vectors(int count, int dim, double scale,
                                                          seglearn::core::Rng& rng) {
    std::vector<seglearn::core::Tensor> out;
    for (int i = 0; i < count; ++i) {
        seglearn::core::Tensor t({dim});
        for (double& v : t.data) v = rng.next_symmetric(scale);
        out.push_back(std::move(t));
    }
    return out;
}

/// Every segmentation of n characters into words of length <= w.
inline std::vector<seglearn::decoder::Segmentation> all_segmentations(int n, int w) {
    std::vector<seglearn::decoder::Segmentation> out;
    std::vector<int> lengths;
    auto recurse = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            out.push_back(seglearn::decoder::from_word_lengths(lengths));
            return;
        }
        for (int len = 1; len <= std::min(w, n - pos); ++len) {
            lengths.push_back(len);
            self(self, pos + len);
            lengths.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace helpers
