// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "train/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace seglearn::train {

double margin_loss(const decoder::Segmentation& gold, const decoder::Segmentation& pred,
                   double mu) {
    const int n = gold.char_count();
    if (n != pred.char_count()) {
        core::throw_invalid("margin_loss: segmentations cover " + std::to_string(n) + " vs " +
                            std::to_string(pred.char_count()) + " characters");
    }
    gold.validate(n);
    pred.validate(n);

    std::vector<decoder::Span> gold_at(static_cast<std::size_t>(n)), pred_at(static_cast<std::size_t>(n));
    for (const auto& s : gold.spans) {
        for (int t = s.first; t < s.second; ++t) gold_at[static_cast<std::size_t>(t)] = s;
    }
    for (const auto& s : pred.spans) {
        for (int t = s.first; t < s.second; ++t) pred_at[static_cast<std::size_t>(t)] = s;
    }
    int mismatched = 0;
    for (int t = 0; t < n; ++t) {
        if (gold_at[static_cast<std::size_t>(t)] != pred_at[static_cast<std::size_t>(t)]) ++mismatched;
    }
    return mu * mismatched;
}

namespace {

/// Forward pass over a fixed segmentation with a training compositor,
/// keeping every cache needed for backprop.
struct FixedPathForward {
    std::vector<model::WordCandidate> candidates;
    scorer::SentenceCache cache;
    double score = 0.0;
};

FixedPathForward score_fixed_path(const std::vector<int>& char_ids,
                                  const decoder::Segmentation& seg, model::Model& m,
                                  const model::Compositor& comp) {
    FixedPathForward fwd;
    std::vector<core::Tensor> words;
    for (const auto& span : seg.spans) {
        model::WordCandidate cand = comp.compose(char_ids, span.first, span.second);
        words.push_back(cand.vec);
        fwd.candidates.push_back(std::move(cand));
    }
    fwd.score = scorer::sentence_score(words, m.lstm, m.score_mode(), &fwd.cache);
    return fwd;
}

void backward_fixed_path(FixedPathForward& fwd, model::Model& m, const model::Compositor& comp,
                         double dscore, model::TouchedColumns* touched) {
    std::vector<core::Tensor> dwords;
    scorer::sentence_score_backward(fwd.cache, m.lstm, dscore, m.score_mode(), dwords);
    for (std::size_t w = 0; w < fwd.candidates.size(); ++w) {
        comp.backward(fwd.candidates[w], dwords[w], touched);
    }
}

}  // namespace

HingeResult hinge_loss_and_grad(const std::vector<int>& char_ids,
                                const decoder::Segmentation& gold, model::Model& m,
                                core::Rng& rng, model::TouchedColumns* touched) {
    HingeResult result;
    const model::TrainConfig& cfg = m.cfg;
    model::Compositor comp(m, /*training=*/true, &rng);

    std::map<decoder::Span, model::WordCandidate> compositions;
    decoder::DecodeOptions extras;
    extras.compositions = &compositions;
    auto ranked = decoder::loss_augmented_beam_search(char_ids, gold, m, comp, cfg.mu, cfg.beam_k,
                                                      cfg.w_max, std::move(extras));
    result.violator = ranked.front();

    if (result.violator.seg == gold) return result;  // no violation, no gradient

    // gold pass draws its own dropout masks
    FixedPathForward gold_fwd = score_fixed_path(char_ids, gold, m, comp);
    result.gold_score = gold_fwd.score;

    // rebuild the violator path from the beam's cached compositions so the
    // gradient matches the exact values the search scored
    FixedPathForward viol_fwd;
    {
        std::vector<core::Tensor> words;
        for (const auto& span : result.violator.seg.spans) {
            auto it = compositions.find(span);
            if (it == compositions.end()) core::throw_internal("violator span missing from beam cache");
            words.push_back(it->second.vec);
            viol_fwd.candidates.push_back(std::move(it->second));
        }
        viol_fwd.score = scorer::sentence_score(words, m.lstm, m.score_mode(), &viol_fwd.cache);
    }

    const double augmented = viol_fwd.score + result.violator.margin_added;
    if (augmented <= gold_fwd.score) return result;

    result.loss = augmented - gold_fwd.score;
    result.violated = true;
    backward_fixed_path(viol_fwd, m, comp, +1.0, touched);
    backward_fixed_path(gold_fwd, m, comp, -1.0, touched);
    return result;
}

corpus::PrfResult evaluate(const model::Model& m, const corpus::Corpus& corpus, int beam_width,
                           int max_word_len) {
    std::vector<decoder::Segmentation> golds, preds;
    for (const auto& sentence : corpus.sentences) {
        if (!sentence.gold) core::throw_invalid("evaluate: corpus has sentences without gold");
        if (sentence.tokens.empty()) continue;
        golds.push_back(*sentence.gold);
        auto ranked = decoder::decode(m.char_ids(sentence.tokens), m, beam_width, max_word_len);
        preds.push_back(ranked.front().seg);
    }
    return corpus::score_prf(golds, preds);
}

namespace {

struct Example {
    std::vector<int> char_ids;
    const decoder::Segmentation* gold;
};

void scale_grads(core::ParamStore& store, double factor) {
    for (std::size_t i = 0; i < store.size(); ++i) {
        for (double& g : store.at(i).grad.data) g *= factor;
    }
}

}  // namespace

TrainResult train(const corpus::Corpus& corpus, const model::TrainConfig& cfg,
                  const EpochCallback& on_epoch) {
    cfg.validate();
    auto [train_part, dev_part] = corpus::split_train_dev(corpus, 1.0 - cfg.dev_fraction);

    emb::CharVocab vocab = emb::CharVocab::build(train_part, cfg.min_count);

    int gcnn_max_len = cfg.w_max;
    if (!cfg.skip_long_gold) {
        gcnn_max_len = std::max(gcnn_max_len, train_part.stats.max_word_len);
    }

    TrainResult out{model::Model::init(std::move(vocab), cfg, gcnn_max_len), {}};
    model::Model& m = out.model;
    TrainReport& report = out.report;

    if (!cfg.pretrained_path.empty()) {
        report.pretrained = emb::load_pretrained(cfg.pretrained_path, m.vocab, m.embedding);
        report.pretrained_loaded = true;
    }

    std::vector<Example> examples;
    for (const auto& sentence : train_part.sentences) {
        if (!sentence.gold) core::throw_invalid("train: corpus has sentences without gold");
        int longest = 0;
        for (const auto& span : sentence.gold->spans) {
            longest = std::max(longest, span.second - span.first);
        }
        if (longest > cfg.w_max && cfg.skip_long_gold) {
            ++report.skipped_long_gold;
            continue;
        }
        examples.push_back({m.char_ids(sentence.tokens), &*sentence.gold});
    }
    report.trained_sentences = static_cast<long>(examples.size());
    if (examples.empty()) core::throw_invalid("train: no usable training sentences");

    // distinct stream from the one that initialized the parameters
    core::Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    core::Parameter& emb_table = m.embedding.parameter();

    std::vector<std::size_t> order(examples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});

    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        const auto started = std::chrono::steady_clock::now();
        core::shuffle(order, rng);

        double hinge_sum = 0.0;
        long violations = 0;
        model::TouchedColumns touched;

        for (std::size_t batch_start = 0; batch_start < order.size();
             batch_start += static_cast<std::size_t>(cfg.batch_size)) {
            const std::size_t batch_end =
                std::min(order.size(), batch_start + static_cast<std::size_t>(cfg.batch_size));
            const auto batch_len = static_cast<double>(batch_end - batch_start);

            m.store->zero_grads();
            touched.clear();
            for (std::size_t b = batch_start; b < batch_end; ++b) {
                const Example& ex = examples[order[b]];
                HingeResult r = hinge_loss_and_grad(ex.char_ids, *ex.gold, m, rng, &touched);
                hinge_sum += r.loss;
                if (r.violated) ++violations;
            }
            scale_grads(*m.store, 1.0 / batch_len);

            // l2 on every non-embedding parameter; embedding columns only
            // when touched this batch, and not at all when frozen
            for (std::size_t pi = 0; pi < m.store->size(); ++pi) {
                core::Parameter& p = m.store->at(pi);
                if (&p == &emb_table) continue;
                core::l2_gradient(p, cfg.lambda);
            }
            if (!cfg.freeze_embeddings) {
                for (int id : touched.ids) {
                    for (int r = 0; r < cfg.d; ++r) {
                        emb_table.grad.at(r, id) += cfg.lambda * emb_table.value.at(r, id);
                    }
                }
            }

            for (std::size_t pi = 0; pi < m.store->size(); ++pi) {
                core::Parameter& p = m.store->at(pi);
                if (cfg.freeze_embeddings && &p == &emb_table) {
                    p.grad.fill(0.0);
                    continue;
                }
                core::adagrad_step(p, cfg.alpha);
            }
        }

        EpochRecord record;
        record.epoch = epoch;
        record.mean_hinge = hinge_sum / static_cast<double>(examples.size());
        record.violation_rate = static_cast<double>(violations) / static_cast<double>(examples.size());
        record.dev = evaluate(m, dev_part, cfg.beam_k, cfg.w_max);
        record.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        report.epochs.push_back(record);
        if (on_epoch) on_epoch(record);
    }

    return out;
}

}  // namespace seglearn::train
