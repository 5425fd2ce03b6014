// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "emb/vocab.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"

namespace seglearn::emb {

CharVocab CharVocab::build(const corpus::Corpus& corpus, int min_count) {
    if (corpus.sentences.empty()) core::throw_invalid("cannot build vocabulary from empty corpus");
    if (min_count < 1) core::throw_invalid("min_count must be at least 1");

    // std::map keeps the codepoint tie-break deterministic
    std::map<std::string, long> counts;
    for (const auto& sentence : corpus.sentences) {
        for (const auto& tok : sentence.tokens) counts[tok.norm] += 1;
    }

    CharVocab vocab;
    auto reserve = [&vocab, &counts](const char* tok) {
        vocab.token_to_id_.emplace(tok, vocab.size());
        vocab.id_to_token_.emplace_back(tok);
        auto it = counts.find(tok);
        vocab.freq_.push_back(it == counts.end() ? 0 : it->second);
    };
    reserve(corpus::kUnkToken);
    reserve(corpus::kEngToken);
    reserve(corpus::kNumToken);

    std::vector<std::pair<std::string, long>> ranked;
    for (const auto& [tok, count] : counts) {
        if (vocab.token_to_id_.count(tok)) continue;  // specials already placed
        if (count >= min_count) ranked.emplace_back(tok, count);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    for (auto& [tok, count] : ranked) {
        vocab.token_to_id_.emplace(tok, vocab.size());
        vocab.id_to_token_.push_back(tok);
        vocab.freq_.push_back(count);
    }
    return vocab;
}

CharVocab CharVocab::from_tokens(const std::vector<std::string>& tokens) {
    if (tokens.size() < 3 || tokens[0] != corpus::kUnkToken || tokens[1] != corpus::kEngToken ||
        tokens[2] != corpus::kNumToken) {
        core::throw_parse("vocabulary listing must start with the reserved tokens");
    }
    CharVocab vocab;
    for (const std::string& tok : tokens) {
        if (!vocab.token_to_id_.emplace(tok, vocab.size()).second) {
            core::throw_parse("duplicate vocabulary token: " + tok);
        }
        vocab.id_to_token_.push_back(tok);
        vocab.freq_.push_back(0);
    }
    return vocab;
}

int CharVocab::id(std::string_view token) const {
    auto it = token_to_id_.find(std::string(token));
    return it == token_to_id_.end() ? kUnkId : it->second;
}

bool CharVocab::contains(std::string_view token) const {
    return token_to_id_.count(std::string(token)) != 0;
}

}  // namespace seglearn::emb
