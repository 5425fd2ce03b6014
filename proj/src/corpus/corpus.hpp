// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decoder/segmentation.hpp"

namespace seglearn::corpus {

/// Reserved tokens. A real corpus token is a single codepoint (or a
/// normalized run), so these multi-character names cannot collide with it.
inline constexpr const char* kUnkToken = "<UNK>";
inline constexpr const char* kEngToken = "<ENG>";
inline constexpr const char* kNumToken = "<NUM>";

/// One model-level token: the normalized form fed to the vocabulary plus the
/// original surface text, kept so segmented output can be de-normalized.
struct Token {
    std::string norm;     // single codepoint, or <ENG>/<NUM>
    std::string surface;  // original bytes this token covers
};

struct NormalizeOptions {
    /// Collapse letter and digit runs into the same token (<ENG>) instead of
    /// distinguishing <ENG> and <NUM>.
    bool single_token = false;
};

/// Replaces each maximal ASCII-letter run with <ENG> and each maximal digit
/// run (decimals included) with <NUM>; every other character becomes one
/// token. Full-width ASCII forms are folded to ASCII for run detection only;
/// surfaces keep the original bytes. Literal "<ENG>"/"<NUM>"/"<UNK>" in the
/// input are taken as already-normalized tokens, which makes normalization
/// idempotent on its own output.
///
/// `text` must not contain whitespace; line splitting happens in the parser.
std::vector<Token> normalize(std::string_view text, const NormalizeOptions& opts = {});

struct Sentence {
    std::vector<Token> tokens;
    std::optional<decoder::Segmentation> gold;
};

struct CorpusStats {
    long sentences = 0;
    long chars = 0;       // tokens after normalization
    long words = 0;       // gold words (0 for raw corpora)
    long long_words = 0;  // gold words longer than 4 tokens
    int max_word_len = 0;
};

struct Corpus {
    std::vector<Sentence> sentences;
    std::string source;
    CorpusStats stats;
};

/// Reads a UTF-8 bakeoff file, one sentence per nonempty line. With gold,
/// words are whitespace-separated and spans follow the normalized token
/// counts; without, the line is one unsegmented character sequence
/// (whitespace inside raw lines only separates runs and produces no token).
/// Invalid UTF-8 raises a parse error naming the line.
Corpus parse_bakeoff(const std::string& path, bool has_gold,
                     const NormalizeOptions& opts = {});

/// Parses already-loaded text; `source` is used in error messages.
Corpus parse_bakeoff_text(std::string_view text, bool has_gold,
                          const std::string& source, const NormalizeOptions& opts = {});

/// First floor(fraction*N) sentences and the rest, order preserved.
std::pair<Corpus, Corpus> split_train_dev(const Corpus& corpus, double fraction = 0.9);

/// Joins the words of one segmented sentence with two spaces, de-normalizing
/// each token back to its surface form.
std::string render_sentence(const Sentence& sentence, const decoder::Segmentation& seg);

struct PrfSentenceDetail {
    std::size_t index = 0;
    long gold_words = 0;
    long pred_words = 0;
    long correct = 0;
};

struct PrfResult {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    long gold_words = 0;
    long pred_words = 0;
    long correct = 0;
    std::vector<PrfSentenceDetail> details;
};

/// Bakeoff word scoring: a predicted word is correct iff its exact span
/// appears in gold. Inputs must be aligned sentence-by-sentence with equal
/// character counts per pair.
PrfResult score_prf(const std::vector<decoder::Segmentation>& golds,
                    const std::vector<decoder::Segmentation>& preds);

/// UTF-8 helpers shared with vocabulary code.
bool utf8_valid(std::string_view text);
std::vector<std::string> utf8_codepoints(std::string_view text);

}  // namespace seglearn::corpus
