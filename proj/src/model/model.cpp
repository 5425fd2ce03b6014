// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "model/model.hpp"

#include "core/error.hpp"

namespace seglearn::model {

Model Model::init(emb::CharVocab vocab, const TrainConfig& cfg, int gcnn_max_len) {
    cfg.validate();
    Model m;
    m.cfg = cfg;
    m.gcnn_max_len = gcnn_max_len > 0 ? gcnn_max_len : cfg.w_max;
    if (m.gcnn_max_len < cfg.w_max) core::throw_invalid("gcnn_max_len below w_max");
    m.vocab = std::move(vocab);
    m.store = std::make_unique<core::ParamStore>(cfg.seed);

    core::Parameter& table =
        m.store->add("emb.M", {cfg.d, m.vocab.size()}, cfg.init_scale);
    m.embedding = emb::EmbeddingMatrix(&table, cfg.d);
    m.gcnn = gcnn::GcnnParams::create(*m.store, cfg.d, m.gcnn_max_len, cfg.init_scale);
    m.lstm = scorer::LstmParams::create(*m.store, cfg.d, cfg.H, cfg.init_scale);
    return m;
}

std::vector<int> Model::char_ids(const std::vector<corpus::Token>& tokens) const {
    std::vector<int> ids;
    ids.reserve(tokens.size());
    for (const corpus::Token& t : tokens) ids.push_back(vocab.id(t.norm));
    return ids;
}

WordCandidate Compositor::compose(const std::vector<int>& ids, int begin, int end) const {
    const int len = end - begin;
    if (len < 1 || begin < 0 || end > static_cast<int>(ids.size())) {
        core::throw_invalid("compose: bad span");
    }
    WordCandidate cand;
    cand.char_ids.reserve(static_cast<std::size_t>(len));
    std::vector<core::Tensor> chars;
    chars.reserve(static_cast<std::size_t>(len));

    const bool drop = training_ && model_.cfg.dropout > 0.0;
    for (int t = begin; t < end; ++t) {
        int id = ids[static_cast<std::size_t>(t)];
        if (training_ && model_.cfg.stochastic_unk && model_.vocab.frequency(id) == 1 &&
            rng_->next_unit() < 0.1) {
            id = emb::CharVocab::kUnkId;
        }
        cand.char_ids.push_back(id);
        core::Tensor vec = model_.embedding.lookup(id);
        if (drop) {
            core::Tensor mask;
            vec = emb::dropout_input(vec, model_.cfg.dropout, true, *rng_, &mask);
            cand.masks.push_back(std::move(mask));
        }
        chars.push_back(std::move(vec));
    }

    if (model_.cfg.composition == Composition::gcnn) {
        cand.used_gates = true;
        cand.vec = gcnn::compose_gated(chars, model_.gcnn, &cand.gated);
    } else {
        cand.vec = gcnn::compose_simple(chars, model_.gcnn, &cand.simple);
    }
    return cand;
}

void Compositor::backward(const WordCandidate& candidate, const core::Tensor& dvec,
                          TouchedColumns* touched) const {
    std::vector<core::Tensor> dchars;
    // const_cast-free: parameter gradients live behind non-const pointers in
    // GcnnParams, so a copy of the lightweight view is enough
    gcnn::GcnnParams params = model_.gcnn;
    if (candidate.used_gates) {
        gcnn::compose_gated_backward(candidate.gated, dvec, params, &dchars);
    } else {
        gcnn::compose_simple_backward(candidate.simple, dvec, params, &dchars);
    }
    emb::EmbeddingMatrix embedding = model_.embedding;
    for (std::size_t i = 0; i < candidate.char_ids.size(); ++i) {
        if (!candidate.masks.empty()) {
            core::Tensor scaled({model_.cfg.d});
            for (int k = 0; k < model_.cfg.d; ++k) scaled[k] = dchars[i][k] * candidate.masks[i][k];
            embedding.add_column_grad(candidate.char_ids[i], scaled);
        } else {
            embedding.add_column_grad(candidate.char_ids[i], dchars[i]);
        }
        if (touched != nullptr) touched->add(candidate.char_ids[i]);
    }
}

}  // namespace seglearn::model
