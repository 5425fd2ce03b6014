// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "decoder/beam.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace seglearn::decoder {

namespace {

Segmentation materialize(const std::vector<std::vector<BeamItem>>& beams, int pos, int slot) {
    std::vector<Span> spans;
    while (pos > 0) {
        const BeamItem& item = beams[static_cast<std::size_t>(pos)][static_cast<std::size_t>(slot)];
        spans.push_back(item.last_span);
        int next_pos = item.parent_pos;
        slot = item.parent_slot;
        pos = next_pos;
    }
    std::reverse(spans.begin(), spans.end());
    return Segmentation(std::move(spans));
}

int span_mismatch_count(const Segmentation& gold, const Span& span,
                        const std::vector<Span>& gold_span_of_char) {
    int count = 0;
    for (int t = span.first; t < span.second; ++t) {
        if (gold_span_of_char[static_cast<std::size_t>(t)] != span) ++count;
    }
    (void)gold;
    return count;
}

}  // namespace

bool ranks_before(const ScoredSegmentation& a, const ScoredSegmentation& b) {
    if (a.total() != b.total()) return a.total() > b.total();
    const int la = a.seg.spans.empty() ? 0 : a.seg.spans.back().second - a.seg.spans.back().first;
    const int lb = b.seg.spans.empty() ? 0 : b.seg.spans.back().second - b.seg.spans.back().first;
    if (la != lb) return la > lb;
    return a.seg.spans < b.seg.spans;
}

std::vector<ScoredSegmentation> beam_search(const std::vector<int>& char_ids,
                                            const model::Model& m,
                                            const model::Compositor& comp,
                                            const DecodeOptions& opts) {
    const int n = static_cast<int>(char_ids.size());
    if (n == 0) core::throw_invalid("beam_search: empty input");
    if (opts.beam_width < 1) core::throw_invalid("beam_search: beam width must be at least 1");
    if (opts.max_word_len < 1) core::throw_invalid("beam_search: max word length must be at least 1");
    if (opts.gold != nullptr) opts.gold->validate(n);

    std::vector<Span> gold_span_of_char;
    if (opts.gold != nullptr) {
        gold_span_of_char.resize(static_cast<std::size_t>(n));
        for (const Span& s : opts.gold->spans) {
            for (int t = s.first; t < s.second; ++t) gold_span_of_char[static_cast<std::size_t>(t)] = s;
        }
    }

    const scorer::ScoreMode mode = m.score_mode();

    std::vector<std::vector<BeamItem>> beams(static_cast<std::size_t>(n) + 1);
    {
        BeamItem root;
        root.state = scorer::initial_state(m.lstm);
        root.prediction = scorer::predict_next(root.state, m.lstm);
        beams[0].push_back(std::move(root));
    }

    for (int i = 1; i <= n; ++i) {
        std::vector<BeamItem> joined;
        const int max_len = std::min(i, opts.max_word_len);
        for (int len = 1; len <= max_len; ++len) {
            const int begin = i - len;
            model::WordCandidate cand = comp.compose(char_ids, begin, i);
            if (opts.counters != nullptr) opts.counters->gcnn_compositions += 1;

            const Span span{begin, i};
            int mismatch = 0;
            if (opts.gold != nullptr) {
                mismatch = span_mismatch_count(*opts.gold, span, gold_span_of_char);
            }

            const auto& parents = beams[static_cast<std::size_t>(begin)];
            for (std::size_t slot = 0; slot < parents.size(); ++slot) {
                const BeamItem& parent = parents[slot];
                BeamItem item;
                item.score = parent.score + scorer::step_score(cand.vec, parent.prediction, m.lstm, mode);
                item.margin_count = parent.margin_count + mismatch;
                item.state = scorer::lstm_step(cand.vec, parent.state, m.lstm);
                if (opts.counters != nullptr) opts.counters->lstm_steps += 1;
                item.prediction = scorer::predict_next(item.state, m.lstm);
                item.parent_pos = begin;
                item.parent_slot = static_cast<int>(slot);
                item.last_span = span;
                joined.push_back(std::move(item));
            }

            if (opts.compositions != nullptr) {
                opts.compositions->emplace(span, std::move(cand));
            }
        }

        auto ranking_key = [&](const BeamItem& item) {
            return item.score + opts.mu * item.margin_count;
        };
        // ties materialize prefixes through the backpointers; with real
        // scores this path is essentially never taken
        std::stable_sort(joined.begin(), joined.end(), [&](const BeamItem& a, const BeamItem& b) {
            const double ka = ranking_key(a), kb = ranking_key(b);
            if (ka != kb) return ka > kb;
            const int la = a.last_span.second - a.last_span.first;
            const int lb = b.last_span.second - b.last_span.first;
            if (la != lb) return la > lb;
            Segmentation sa = materialize(beams, a.parent_pos, a.parent_slot);
            sa.spans.push_back(a.last_span);
            Segmentation sb = materialize(beams, b.parent_pos, b.parent_slot);
            sb.spans.push_back(b.last_span);
            return sa.spans < sb.spans;
        });
        if (static_cast<int>(joined.size()) > opts.beam_width) {
            joined.resize(static_cast<std::size_t>(opts.beam_width));
        }
        beams[static_cast<std::size_t>(i)] = std::move(joined);
    }

    std::vector<ScoredSegmentation> results;
    const auto& finals = beams[static_cast<std::size_t>(n)];
    results.reserve(finals.size());
    for (std::size_t slot = 0; slot < finals.size(); ++slot) {
        ScoredSegmentation out;
        out.seg = materialize(beams, n, static_cast<int>(slot));
        out.score = finals[slot].score;
        out.margin_count = finals[slot].margin_count;
        out.margin_added = opts.mu * finals[slot].margin_count;
        results.push_back(std::move(out));
    }
    if (opts.trace != nullptr) opts.trace->beams = std::move(beams);
    return results;
}

std::vector<ScoredSegmentation> decode(const std::vector<int>& char_ids, const model::Model& m,
                                       int beam_width, int max_word_len, DecodeCounters* counters) {
    model::Compositor comp(m, /*training=*/false, nullptr);
    DecodeOptions opts;
    opts.beam_width = beam_width;
    opts.max_word_len = max_word_len;
    opts.counters = counters;
    return beam_search(char_ids, m, comp, opts);
}

std::vector<ScoredSegmentation> loss_augmented_beam_search(const std::vector<int>& char_ids,
                                                           const Segmentation& gold,
                                                           const model::Model& m,
                                                           const model::Compositor& comp,
                                                           double mu, int beam_width,
                                                           int max_word_len, DecodeOptions extras) {
    extras.beam_width = beam_width;
    extras.max_word_len = max_word_len;
    extras.gold = &gold;
    extras.mu = mu;
    return beam_search(char_ids, m, comp, extras);
}

long long count_segmentations(int n, int max_word_len, long long cap) {
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int i = 1; i <= n; ++i) {
        long long total = 0;
        for (int len = 1; len <= std::min(i, max_word_len); ++len) {
            total += ways[static_cast<std::size_t>(i - len)];
            if (total > cap) return -1;
        }
        ways[static_cast<std::size_t>(i)] = total;
    }
    return ways[static_cast<std::size_t>(n)];
}

std::vector<ScoredSegmentation> enumerate_all(const std::vector<int>& char_ids,
                                              const model::Model& m, int max_word_len) {
    const int n = static_cast<int>(char_ids.size());
    if (n == 0) core::throw_invalid("enumerate_all: empty input");
    const long long count = count_segmentations(n, max_word_len);
    if (count < 0) {
        core::throw_invalid("enumerate_all: more than 10^6 segmentations; use a shorter sentence");
    }

    model::Compositor comp(m, /*training=*/false, nullptr);
    const scorer::ScoreMode mode = m.score_mode();

    // word vectors are span-determined, so compose each span once
    std::map<Span, core::Tensor> word_vecs;
    for (int end = 1; end <= n; ++end) {
        for (int len = 1; len <= std::min(end, max_word_len); ++len) {
            Span span{end - len, end};
            word_vecs.emplace(span, comp.compose(char_ids, span.first, span.second).vec);
        }
    }

    std::vector<ScoredSegmentation> results;
    results.reserve(static_cast<std::size_t>(count));
    std::vector<Span> spans;
    std::vector<core::Tensor> words;

    auto recurse = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            ScoredSegmentation out;
            out.seg = Segmentation(spans);
            out.score = scorer::sentence_score(words, m.lstm, mode);
            results.push_back(std::move(out));
            return;
        }
        for (int len = 1; len <= std::min(n - pos, max_word_len); ++len) {
            Span span{pos, pos + len};
            spans.push_back(span);
            words.push_back(word_vecs.at(span));
            self(self, pos + len);
            spans.pop_back();
            words.pop_back();
        }
    };
    recurse(recurse, 0);

    std::stable_sort(results.begin(), results.end(), ranks_before);
    return results;
}

}  // namespace seglearn::decoder
