// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "corpus/corpus.hpp"
#include "decoder/beam.hpp"
#include "model/model.hpp"

namespace seglearn::train {

/// Structured margin: mu times the number of characters whose containing
/// word differs between the two segmentations. Symmetric; errors when the
/// segmentations cover different character counts.
double margin_loss(const decoder::Segmentation& gold, const decoder::Segmentation& pred, double mu);

struct HingeResult {
    double loss = 0.0;
    bool violated = false;
    decoder::ScoredSegmentation violator;  // best augmented hypothesis
    double gold_score = 0.0;
};

/// One max-margin example: loss-augmented beam search for the strongest
/// violator, then, if its augmented score beats the gold score, gradients of
/// score(violator) - score(gold) accumulate into the store. Dropout is live
/// inside these forward passes when cfg.dropout > 0.
HingeResult hinge_loss_and_grad(const std::vector<int>& char_ids,
                                const decoder::Segmentation& gold, model::Model& m,
                                core::Rng& rng, model::TouchedColumns* touched);

struct EpochRecord {
    int epoch = 0;             // 1-based
    double mean_hinge = 0.0;   // averaged over all trained sentences
    double violation_rate = 0.0;
    corpus::PrfResult dev;
    double seconds = 0.0;      // wall time; excluded from persisted logs
};

struct TrainReport {
    std::vector<EpochRecord> epochs;
    long trained_sentences = 0;
    long skipped_long_gold = 0;
    bool pretrained_loaded = false;
    emb::PretrainedReport pretrained;
};

using EpochCallback = std::function<void(const EpochRecord&)>;

struct TrainResult {
    model::Model model;
    TrainReport report;
};

/// Full training run: head/tail split for train/dev, vocabulary from the
/// training part, seeded init, then epochs of shuffled minibatches with
/// averaged hinge gradients, l2, and one AdaGrad step per batch. The dev set
/// is decoded after every epoch. Deterministic given the seed.
TrainResult train(const corpus::Corpus& corpus, const model::TrainConfig& cfg,
                  const EpochCallback& on_epoch = nullptr);

/// Decodes every sentence of a gold corpus and scores it.
corpus::PrfResult evaluate(const model::Model& m, const corpus::Corpus& corpus, int beam_width,
                           int max_word_len);

}  // namespace seglearn::train
