// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpus/corpus.hpp"

namespace seglearn::emb {

/// Character dictionary. Ids are dense in [0, size); the reserved tokens
/// <UNK>, <ENG>, <NUM> always occupy ids 0..2, and lookups of unseen tokens
/// resolve to <UNK> rather than fail. Immutable once built; lookups are
/// thread-safe.
class CharVocab {
public:
    static constexpr int kUnkId = 0;
    static constexpr int kEngId = 1;
    static constexpr int kNumId = 2;

    /// Counts token frequencies over the corpus and assigns ids to tokens
    /// with count >= min_count, ordered by frequency descending, ties broken
    /// by token bytes ascending; the rest fold into <UNK>. Errors on an
    /// empty corpus.
    static CharVocab build(const corpus::Corpus& corpus, int min_count);

    /// Rebuilds a vocabulary from a serialized token list (model manifest).
    static CharVocab from_tokens(const std::vector<std::string>& tokens);

    int id(std::string_view token) const;
    bool contains(std::string_view token) const;
    const std::string& token(int id) const { return id_to_token_[static_cast<std::size_t>(id)]; }
    int size() const { return static_cast<int>(id_to_token_.size()); }

    /// Training-set frequency of the token (0 for <UNK> fill-ins and loaded
    /// vocabularies without counts).
    long frequency(int id) const { return freq_[static_cast<std::size_t>(id)]; }

    const std::vector<std::string>& tokens() const { return id_to_token_; }

    CharVocab() = default;  // empty placeholder, filled by build()/from_tokens()

private:
    std::vector<std::string> id_to_token_;
    std::vector<long> freq_;
    std::unordered_map<std::string, int> token_to_id_;
};

}  // namespace seglearn::emb
