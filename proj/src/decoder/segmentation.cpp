// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "decoder/segmentation.hpp"

#include <string>

#include "core/error.hpp"

namespace seglearn::decoder {

bool Segmentation::tiles(int n) const {
    int pos = 0;
    for (const Span& s : spans) {
        if (s.first != pos || s.second <= s.first) return false;
        pos = s.second;
    }
    return pos == n;
}

void Segmentation::validate(int n) const {
    if (!tiles(n)) {
        core::throw_invalid("segmentation does not tile [0, " + std::to_string(n) + ")");
    }
}

std::vector<int> Segmentation::span_of_char() const {
    std::vector<int> owner(static_cast<std::size_t>(char_count()), -1);
    for (std::size_t w = 0; w < spans.size(); ++w) {
        for (int t = spans[w].first; t < spans[w].second; ++t) {
            owner[static_cast<std::size_t>(t)] = static_cast<int>(w);
        }
    }
    return owner;
}

Segmentation from_word_lengths(const std::vector<int>& lengths) {
    Segmentation seg;
    int pos = 0;
    for (int len : lengths) {
        if (len <= 0) core::throw_invalid("word length must be positive");
        seg.spans.emplace_back(pos, pos + len);
        pos += len;
    }
    return seg;
}

}  // namespace seglearn::decoder
