// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

namespace seglearn::decoder {

/// Half-open character span [start, end).
using Span = std::pair<int, int>;

/// An ordered list of word spans tiling [0, n): contiguous, non-overlapping,
/// every span at least one character long.
struct Segmentation {
    std::vector<Span> spans;

    Segmentation() = default;
    explicit Segmentation(std::vector<Span> s) : spans(std::move(s)) {}

    int char_count() const { return spans.empty() ? 0 : spans.back().second; }
    int word_count() const { return static_cast<int>(spans.size()); }

    bool operator==(const Segmentation& o) const { return spans == o.spans; }

    /// True iff the spans tile [0, n) exactly.
    bool tiles(int n) const;

    /// Throws invalid_argument if the tiling contract is broken.
    void validate(int n) const;

    /// For each character position, the index of the span containing it.
    std::vector<int> span_of_char() const;
};

/// Builds a segmentation from consecutive word lengths.
Segmentation from_word_lengths(const std::vector<int>& lengths);

}  // namespace seglearn::decoder
