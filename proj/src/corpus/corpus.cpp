// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "corpus/corpus.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace seglearn::corpus {

namespace {

// Decodes one codepoint starting at `pos`; returns its byte length or 0 on
// malformed input.
int decode_utf8(std::string_view text, std::size_t pos, std::uint32_t& cp) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
    unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        cp = b0;
        return 1;
    }
    int len;
    std::uint32_t acc;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        acc = b0 & 0x1Fu;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        acc = b0 & 0x0Fu;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        acc = b0 & 0x07u;
    } else {
        return 0;
    }
    if (pos + static_cast<std::size_t>(len) > text.size()) return 0;
    for (int i = 1; i < len; ++i) {
        unsigned char b = byte(pos + static_cast<std::size_t>(i));
        if ((b & 0xC0) != 0x80) return 0;
        acc = (acc << 6) | (b & 0x3Fu);
    }
    // reject overlong encodings and surrogates
    if ((len == 2 && acc < 0x80) || (len == 3 && acc < 0x800) || (len == 4 && acc < 0x10000)) return 0;
    if (acc >= 0xD800 && acc <= 0xDFFF) return 0;
    if (acc > 0x10FFFF) return 0;
    cp = acc;
    return len;
}

struct Cp {
    std::uint32_t value;
    std::size_t offset;  // byte offset in the source text
    std::size_t bytes;
};

std::vector<Cp> decode_all(std::string_view text) {
    std::vector<Cp> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::uint32_t cp = 0;
        int len = decode_utf8(text, pos, cp);
        if (len == 0) core::throw_parse("invalid UTF-8");
        out.push_back({cp, pos, static_cast<std::size_t>(len)});
        pos += static_cast<std::size_t>(len);
    }
    return out;
}

// Folds full-width ASCII variants for run classification only.
std::uint32_t fold_width(std::uint32_t cp) {
    if (cp >= 0xFF10 && cp <= 0xFF19) return '0' + (cp - 0xFF10);  // ０-９
    if (cp >= 0xFF21 && cp <= 0xFF3A) return 'A' + (cp - 0xFF21);  // Ａ-Ｚ
    if (cp >= 0xFF41 && cp <= 0xFF5A) return 'a' + (cp - 0xFF41);  // ａ-ｚ
    if (cp == 0xFF0E) return '.';                                  // ．
    return cp;
}

bool is_ascii_letter(std::uint32_t cp) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

bool is_ascii_digit(std::uint32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_space_cp(std::uint32_t cp) {
    return cp == ' ' || cp == '\t' || cp == 0x3000;  // ideographic space
}

// Matches one of the reserved token literals at codepoint index i.
const char* match_special(const std::vector<Cp>& cps, std::size_t i) {
    static constexpr const char* kSpecials[] = {kUnkToken, kEngToken, kNumToken};
    for (const char* tok : kSpecials) {
        std::size_t len = 5;  // all specials are 5 ASCII chars
        if (i + len > cps.size()) continue;
        bool ok = true;
        for (std::size_t j = 0; j < len; ++j) {
            if (cps[i + j].value != static_cast<std::uint32_t>(tok[j])) {
                ok = false;
                break;
            }
        }
        if (ok) return tok;
    }
    return nullptr;
}

std::string slice(std::string_view text, const std::vector<Cp>& cps, std::size_t first,
                  std::size_t last /*exclusive*/) {
    std::size_t begin = cps[first].offset;
    std::size_t end = cps[last - 1].offset + cps[last - 1].bytes;
    return std::string(text.substr(begin, end - begin));
}

}  // namespace

bool utf8_valid(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::uint32_t cp = 0;
        int len = decode_utf8(text, pos, cp);
        if (len == 0) return false;
        pos += static_cast<std::size_t>(len);
    }
    return true;
}

std::vector<std::string> utf8_codepoints(std::string_view text) {
    std::vector<std::string> out;
    for (const Cp& cp : decode_all(text)) {
        out.push_back(std::string(text.substr(cp.offset, cp.bytes)));
    }
    return out;
}

std::vector<Token> normalize(std::string_view text, const NormalizeOptions& opts) {
    std::vector<Token> tokens;
    const std::vector<Cp> cps = decode_all(text);
    const char* num_name = opts.single_token ? kEngToken : kNumToken;

    std::size_t i = 0;
    while (i < cps.size()) {
        if (const char* special = match_special(cps, i)) {
            tokens.push_back({special, slice(text, cps, i, i + 5)});
            i += 5;
            continue;
        }
        std::uint32_t folded = fold_width(cps[i].value);
        if (is_ascii_letter(folded)) {
            std::size_t j = i + 1;
            while (j < cps.size() && is_ascii_letter(fold_width(cps[j].value))) ++j;
            tokens.push_back({kEngToken, slice(text, cps, i, j)});
            i = j;
            continue;
        }
        if (is_ascii_digit(folded)) {
            // digits, with '.' kept inside the run only between digits: 3.14
            std::size_t j = i + 1;
            while (j < cps.size()) {
                std::uint32_t f = fold_width(cps[j].value);
                if (is_ascii_digit(f)) {
                    ++j;
                } else if (f == '.' && j + 1 < cps.size() && is_ascii_digit(fold_width(cps[j + 1].value))) {
                    j += 2;
                } else {
                    break;
                }
            }
            tokens.push_back({num_name, slice(text, cps, i, j)});
            i = j;
            continue;
        }
        tokens.push_back({slice(text, cps, i, i + 1), slice(text, cps, i, i + 1)});
        ++i;
    }
    return tokens;
}

namespace {

std::vector<std::string> split_whitespace(std::string_view line) {
    std::vector<std::string> pieces;
    const std::vector<Cp> cps = decode_all(line);
    std::size_t i = 0;
    while (i < cps.size()) {
        while (i < cps.size() && is_space_cp(cps[i].value)) ++i;
        if (i >= cps.size()) break;
        std::size_t j = i;
        while (j < cps.size() && !is_space_cp(cps[j].value)) ++j;
        pieces.push_back(slice(line, cps, i, j));
        i = j;
    }
    return pieces;
}

void account(CorpusStats& stats, const Sentence& sentence) {
    stats.sentences += 1;
    stats.chars += static_cast<long>(sentence.tokens.size());
    if (sentence.gold) {
        for (const auto& span : sentence.gold->spans) {
            int len = span.second - span.first;
            stats.words += 1;
            if (len > 4) stats.long_words += 1;
            if (len > stats.max_word_len) stats.max_word_len = len;
        }
    }
}

}  // namespace

Corpus parse_bakeoff_text(std::string_view text, bool has_gold, const std::string& source,
                          const NormalizeOptions& opts) {
    Corpus corpus;
    corpus.source = source;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!line.empty()) {
            if (!utf8_valid(line)) {
                core::throw_parse(source + ":" + std::to_string(line_no) + ": invalid UTF-8");
            }
            std::vector<std::string> pieces = split_whitespace(line);
            if (!pieces.empty()) {
                Sentence sentence;
                std::vector<int> word_lengths;
                for (const std::string& piece : pieces) {
                    std::vector<Token> toks = normalize(piece, opts);
                    word_lengths.push_back(static_cast<int>(toks.size()));
                    for (auto& t : toks) sentence.tokens.push_back(std::move(t));
                }
                if (has_gold) {
                    sentence.gold = decoder::from_word_lengths(word_lengths);
                    sentence.gold->validate(static_cast<int>(sentence.tokens.size()));
                }
                account(corpus.stats, sentence);
                corpus.sentences.push_back(std::move(sentence));
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return corpus;
}

Corpus parse_bakeoff(const std::string& path, bool has_gold, const NormalizeOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) core::throw_io("cannot open corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bakeoff_text(buf.str(), has_gold, path, opts);
}

std::pair<Corpus, Corpus> split_train_dev(const Corpus& corpus, double fraction) {
    if (fraction <= 0.0 || fraction >= 1.0) {
        core::throw_invalid("split fraction must lie in (0, 1)");
    }
    const std::size_t n = corpus.sentences.size();
    if (n < 2) core::throw_invalid("corpus too small to split: " + std::to_string(n) + " sentence(s)");

    const auto head_count =
        static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n)));
    Corpus head, tail;
    head.source = corpus.source;
    tail.source = corpus.source;
    for (std::size_t i = 0; i < n; ++i) {
        Corpus& part = (i < head_count) ? head : tail;
        account(part.stats, corpus.sentences[i]);
        part.sentences.push_back(corpus.sentences[i]);
    }
    return {std::move(head), std::move(tail)};
}

std::string render_sentence(const Sentence& sentence, const decoder::Segmentation& seg) {
    seg.validate(static_cast<int>(sentence.tokens.size()));
    std::string out;
    for (std::size_t w = 0; w < seg.spans.size(); ++w) {
        if (w > 0) out += "  ";
        for (int t = seg.spans[w].first; t < seg.spans[w].second; ++t) {
            out += sentence.tokens[static_cast<std::size_t>(t)].surface;
        }
    }
    return out;
}

PrfResult score_prf(const std::vector<decoder::Segmentation>& golds,
                    const std::vector<decoder::Segmentation>& preds) {
    if (golds.size() != preds.size()) {
        core::throw_invalid("score_prf: " + std::to_string(golds.size()) + " gold vs " +
                            std::to_string(preds.size()) + " predicted sentences");
    }
    PrfResult result;
    for (std::size_t s = 0; s < golds.size(); ++s) {
        const auto& g = golds[s].spans;
        const auto& p = preds[s].spans;
        if (golds[s].char_count() != preds[s].char_count()) {
            core::throw_invalid("score_prf: sentence " + std::to_string(s + 1) +
                                " character counts differ (" + std::to_string(golds[s].char_count()) +
                                " vs " + std::to_string(preds[s].char_count()) + ")");
        }
        PrfSentenceDetail detail;
        detail.index = s;
        detail.gold_words = static_cast<long>(g.size());
        detail.pred_words = static_cast<long>(p.size());
        std::size_t i = 0, j = 0;
        while (i < g.size() && j < p.size()) {
            if (g[i] == p[j]) {
                ++detail.correct;
                ++i;
                ++j;
            } else if (g[i].second <= p[j].second) {
                ++i;
            } else {
                ++j;
            }
        }
        result.gold_words += detail.gold_words;
        result.pred_words += detail.pred_words;
        result.correct += detail.correct;
        result.details.push_back(detail);
    }
    if (result.gold_words == 0 && result.pred_words == 0) {
        result.precision = result.recall = result.f1 = 1.0;
        return result;
    }
    result.precision = result.pred_words > 0
                           ? static_cast<double>(result.correct) / static_cast<double>(result.pred_words)
                           : 0.0;
    result.recall = result.gold_words > 0
                        ? static_cast<double>(result.correct) / static_cast<double>(result.gold_words)
                        : 0.0;
    const double pr = result.precision + result.recall;
    result.f1 = pr > 0.0 ? 2.0 * result.precision * result.recall / pr : 0.0;
    return result;
}

}  // namespace seglearn::corpus
