// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

#include "decoder/segmentation.hpp"
#include "model/model.hpp"
#include "scorer/scorer.hpp"

namespace seglearn::decoder {

/// Work counters for the complexity contract: compositions are
/// Σ_{i=1..n} min(i, w) per decode and LSTM extensions stay within w·k per
/// position.
struct DecodeCounters {
    long gcnn_compositions = 0;
    long lstm_steps = 0;
};

struct ScoredSegmentation {
    Segmentation seg;
    double score = 0.0;        // model score
    int margin_count = 0;      // incorrectly segmented characters vs gold
    double margin_added = 0.0; // mu * margin_count, 0 in plain decoding
    double total() const { return score + margin_added; }
};

/// One beam entry: running score, LSTM state, the prediction for the next
/// word, and a backpointer into the previous beams.
struct BeamItem {
    double score = 0.0;
    int margin_count = 0;
    scorer::LstmState state;
    core::Tensor prediction;
    int parent_pos = -1;
    int parent_slot = -1;
    Span last_span{-1, -1};
};

/// All beams kept during one decode; beams[i] holds the items after
/// consuming i characters.
struct BeamTrace {
    std::vector<std::vector<BeamItem>> beams;
};

struct DecodeOptions {
    int beam_width = 4;
    int max_word_len = 4;

    /// When set, each appended span adds mu times the number of its
    /// characters whose gold span differs, turning the search into
    /// loss-augmented decoding.
    const Segmentation* gold = nullptr;
    double mu = 0.0;

    DecodeCounters* counters = nullptr;
    BeamTrace* trace = nullptr;

    /// When set, every composed candidate (keyed by span) is saved so
    /// training can backpropagate through the exact forward values.
    std::map<Span, model::WordCandidate>* compositions = nullptr;
};

/// Beam search over segmentations: at each position i every word candidate
/// of length up to w ending at i extends every surviving item, and the k
/// best extensions are kept. Returns at most k complete segmentations,
/// best first. Errors on empty input.
std::vector<ScoredSegmentation> beam_search(const std::vector<int>& char_ids,
                                            const model::Model& m,
                                            const model::Compositor& comp,
                                            const DecodeOptions& opts);

/// Plain decode with an inference compositor.
std::vector<ScoredSegmentation> decode(const std::vector<int>& char_ids, const model::Model& m,
                                       int beam_width, int max_word_len,
                                       DecodeCounters* counters = nullptr);

/// Loss-augmented decode: the ranking score of each hypothesis is its model
/// score plus mu times its margin count against `gold`, which equals
/// s(hypothesis) + Δ(gold, hypothesis) exactly.
std::vector<ScoredSegmentation> loss_augmented_beam_search(const std::vector<int>& char_ids,
                                                           const Segmentation& gold,
                                                           const model::Model& m,
                                                           const model::Compositor& comp,
                                                           double mu, int beam_width,
                                                           int max_word_len,
                                                           DecodeOptions extras = {});

/// Exhaustively scores every segmentation with word lengths <= w, ranked by
/// the same ordering beam_search uses. Guarded: errors when more than 10^6
/// segmentations exist.
std::vector<ScoredSegmentation> enumerate_all(const std::vector<int>& char_ids,
                                              const model::Model& m, int max_word_len);

/// Number of segmentations of n characters with word lengths <= w.
/// Returns -1 if the count exceeds the cap.
long long count_segmentations(int n, int max_word_len, long long cap = 1000000);

/// Shared ranking: score (plus margin) descending, then longer final word,
/// then lexicographically smaller span list.
bool ranks_before(const ScoredSegmentation& a, const ScoredSegmentation& b);

}  // namespace seglearn::decoder
