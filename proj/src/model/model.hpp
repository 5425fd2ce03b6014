// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "core/param_store.hpp"
#include "emb/embedding.hpp"
#include "emb/vocab.hpp"
#include "gcnn/gcnn.hpp"
#include "model/config.hpp"
#include "scorer/scorer.hpp"

namespace seglearn::model {

/// The complete parameter set plus vocabulary. gcnn_max_len usually equals
/// cfg.w_max; it is larger when long gold words are scored instead of
/// skipped.
struct Model {
    TrainConfig cfg;
    int gcnn_max_len = 0;
    std::unique_ptr<core::ParamStore> store;
    emb::CharVocab vocab;
    emb::EmbeddingMatrix embedding;
    gcnn::GcnnParams gcnn;
    scorer::LstmParams lstm;

    /// Fresh model with randomly initialized parameters. Registration order
    /// is canonical: embedding table, GCNN per length, LSTM, prediction
    /// head, scoring vector, initial state.
    static Model init(emb::CharVocab vocab, const TrainConfig& cfg, int gcnn_max_len = 0);

    scorer::ScoreMode score_mode() const {
        switch (cfg.score_parts) {
            case ScorePartsMode::word_only: return scorer::ScoreMode::word_only;
            case ScorePartsMode::link_only: return scorer::ScoreMode::link_only;
            default: return scorer::ScoreMode::both;
        }
    }

    /// Token norms -> embedding ids.
    std::vector<int> char_ids(const std::vector<corpus::Token>& tokens) const;
};

/// Records which embedding columns received gradient, for the sparse l2 rule
/// and sparse-update bookkeeping.
struct TouchedColumns {
    std::unordered_set<int> ids;
    void add(int id) { ids.insert(id); }
    void clear() { ids.clear(); }
};

/// One composed word candidate with everything needed to backpropagate
/// through it: the per-character dropout masks and the composition cache.
struct WordCandidate {
    core::Tensor vec;
    std::vector<int> char_ids;
    std::vector<core::Tensor> masks;  // empty when dropout is off
    gcnn::GatedCache gated;
    gcnn::SimpleCache simple;
    bool used_gates = false;
};

/// Bridges characters to word vectors: embedding lookup, input dropout at
/// every consumption point (fresh mask per lookup), then composition.
/// Inference constructs it without an RNG; training passes one.
class Compositor {
public:
    Compositor(const Model& model, bool training, core::Rng* rng)
        : model_(model), training_(training), rng_(rng) {}

    /// Composes the word covering char_ids[begin, end).
    WordCandidate compose(const std::vector<int>& ids, int begin, int end) const;

    /// Pushes the word-vector gradient back through composition, dropout,
    /// and the embedding columns.
    void backward(const WordCandidate& candidate, const core::Tensor& dvec,
                  TouchedColumns* touched) const;

    bool training() const { return training_; }

private:
    const Model& model_;
    bool training_;
    core::Rng* rng_;
};

}  // namespace seglearn::model
