// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "corpus/corpus.hpp"
#include "doctest.h"

using namespace seglearn;
using corpus::normalize;
using decoder::Segmentation;
using decoder::Span;

namespace {

std::string norms_joined(const std::vector<corpus::Token>& tokens) {
    std::string out;
    for (const auto& t : tokens) out += t.norm;
    return out;
}

}  // namespace

TEST_CASE("normalize replaces letter and digit runs") {
    auto toks = normalize("x2020y");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0].norm == corpus::kEngToken);
    CHECK(toks[1].norm == corpus::kNumToken);
    CHECK(toks[2].norm == corpus::kEngToken);
    CHECK(toks[0].surface == "x");
    CHECK(toks[1].surface == "2020");
    CHECK(toks[2].surface == "y");
}

TEST_CASE("normalize leaves pure Chinese untouched") {
    auto toks = normalize("花香鸟语");
    REQUIRE(toks.size() == 4);
    CHECK(toks[0].norm == "花");
    CHECK(toks[3].norm == "语");
    for (const auto& t : toks) CHECK(t.norm == t.surface);
}

TEST_CASE("normalize of empty text is empty") {
    CHECK(normalize("").empty());
}

TEST_CASE("normalize keeps decimals in one number run") {
    auto toks = normalize("增3.14倍");
    REQUIRE(toks.size() == 3);
    CHECK(toks[1].norm == corpus::kNumToken);
    CHECK(toks[1].surface == "3.14");
}

TEST_CASE("normalize folds full-width forms for classification only") {
    auto toks = normalize("ＡＢ１２");
    REQUIRE(toks.size() == 2);
    CHECK(toks[0].norm == corpus::kEngToken);
    CHECK(toks[0].surface == "ＡＢ");
    CHECK(toks[1].norm == corpus::kNumToken);
    CHECK(toks[1].surface == "１２");
}

TEST_CASE("normalize is idempotent on its own output") {
    for (const char* text : {"x2020y", "abc得3.5分xyz", "山水", "ＡＢ１２点"}) {
        auto once = normalize(text);
        auto twice = normalize(norms_joined(once));
        REQUIRE(once.size() == twice.size());
        for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i].norm == twice[i].norm);
    }
}

TEST_CASE("single-token mode folds digits into the letter token") {
    corpus::NormalizeOptions opts;
    opts.single_token = true;
    auto toks = normalize("x2020y", opts);
    REQUIRE(toks.size() == 3);
    for (const auto& t : toks) CHECK(t.norm == corpus::kEngToken);
}

TEST_CASE("parse maps words to spans") {
    auto c = corpus::parse_bakeoff_text("天地 人\n", true, "<mem>");
    REQUIRE(c.sentences.size() == 1);
    const auto& s = c.sentences[0];
    REQUIRE(s.tokens.size() == 3);
    REQUIRE(s.gold.has_value());
    CHECK(s.gold->spans == std::vector<Span>{{0, 2}, {2, 3}});
}

TEST_CASE("parse skips empty lines") {
    auto c = corpus::parse_bakeoff_text("天地 人\n\n  \n山 水\n", true, "<mem>");
    CHECK(c.sentences.size() == 2);
}

TEST_CASE("parse normalizes inside words and spans follow token positions") {
    auto c = corpus::parse_bakeoff_text("abc123 之外\n", true, "<mem>");
    REQUIRE(c.sentences.size() == 1);
    const auto& s = c.sentences[0];
    REQUIRE(s.tokens.size() == 4);  // <ENG> <NUM> 之 外
    CHECK(s.tokens[0].norm == corpus::kEngToken);
    CHECK(s.tokens[1].norm == corpus::kNumToken);
    CHECK(s.gold->spans == std::vector<Span>{{0, 2}, {2, 4}});
}

TEST_CASE("parse reports invalid UTF-8 with the line number") {
    std::string bad = "好 好\n\xFF\xFE\n";
    try {
        corpus::parse_bakeoff_text(bad, true, "<mem>");
        FAIL("expected parse error");
    } catch (const core::SegError& e) {
        CHECK(e.kind() == core::ErrorKind::parse);
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
}

TEST_CASE("parse then render then parse reproduces spans") {
    const char* text = "天地 ab12 人\n山 水 火\n";
    auto first = corpus::parse_bakeoff_text(text, true, "<mem>");
    std::string rendered;
    for (const auto& s : first.sentences) {
        rendered += corpus::render_sentence(s, *s.gold);
        rendered += "\n";
    }
    auto second = corpus::parse_bakeoff_text(rendered, true, "<mem>");
    REQUIRE(second.sentences.size() == first.sentences.size());
    for (std::size_t i = 0; i < first.sentences.size(); ++i) {
        CHECK(first.sentences[i].gold->spans == second.sentences[i].gold->spans);
        CHECK(first.sentences[i].tokens.size() == second.sentences[i].tokens.size());
    }
}

TEST_CASE("render de-normalizes surfaces") {
    auto c = corpus::parse_bakeoff_text("abc123 之外\n", true, "<mem>");
    const auto& s = c.sentences[0];
    CHECK(corpus::render_sentence(s, *s.gold) == "abc123  之外");
}

TEST_CASE("split respects floor arithmetic and order") {
    corpus::Corpus c;
    for (int i = 0; i < 10; ++i) {
        corpus::Sentence s;
        s.tokens.push_back({std::to_string(i), std::to_string(i)});
        c.sentences.push_back(s);
    }
    auto [head, tail] = corpus::split_train_dev(c, 0.9);
    CHECK(head.sentences.size() == 9);
    CHECK(tail.sentences.size() == 1);
    CHECK(head.sentences[0].tokens[0].norm == "0");
    CHECK(tail.sentences[0].tokens[0].norm == "9");

    c.sentences.resize(7);
    auto [head7, tail7] = corpus::split_train_dev(c, 0.9);
    CHECK(head7.sentences.size() == 6);
    CHECK(tail7.sentences.size() == 1);
    for (std::size_t i = 0; i < head7.sentences.size(); ++i) {
        CHECK(head7.sentences[i].tokens[0].norm == std::to_string(i));
    }
}

TEST_CASE("split refuses corpora below two sentences") {
    corpus::Corpus c;
    c.sentences.resize(1);
    CHECK_THROWS_AS(corpus::split_train_dev(c, 0.9), core::SegError);
}

TEST_CASE("prf on identical segmentations is perfect") {
    std::vector<Segmentation> golds = {Segmentation({{0, 2}, {2, 3}}), Segmentation({{0, 1}})};
    auto r = corpus::score_prf(golds, golds);
    CHECK(r.precision == doctest::Approx(1.0));
    CHECK(r.recall == doctest::Approx(1.0));
    CHECK(r.f1 == doctest::Approx(1.0));
}

TEST_CASE("prf hand-scored example") {
    std::vector<Segmentation> golds = {Segmentation({{0, 2}, {2, 3}, {3, 4}})};
    std::vector<Segmentation> preds = {Segmentation({{0, 2}, {2, 4}})};
    auto r = corpus::score_prf(golds, preds);
    CHECK(r.correct == 1);
    CHECK(r.precision == doctest::Approx(0.5));
    CHECK(r.recall == doctest::Approx(1.0 / 3.0));
    CHECK(r.f1 == doctest::Approx(0.4));
}

TEST_CASE("prf all-singles against one long word scores zero") {
    std::vector<Segmentation> golds = {Segmentation({{0, 3}})};
    std::vector<Segmentation> preds = {Segmentation({{0, 1}, {1, 2}, {2, 3}})};
    auto r = corpus::score_prf(golds, preds);
    CHECK(r.correct == 0);
    CHECK(r.f1 == doctest::Approx(0.0));
}

TEST_CASE("prf rejects misaligned inputs") {
    std::vector<Segmentation> golds = {Segmentation({{0, 2}})};
    std::vector<Segmentation> preds = {Segmentation({{0, 1}, {1, 3}})};
    CHECK_THROWS_AS(corpus::score_prf(golds, preds), core::SegError);
    std::vector<Segmentation> empty;
    CHECK_THROWS_AS(corpus::score_prf(golds, empty), core::SegError);
}

TEST_CASE("prf f1 stays within the min-side bound on random pairs") {
    seglearn::core::Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(10));
        auto draw = [&]() {
            std::vector<int> lengths;
            int pos = 0;
            while (pos < n) {
                int len = 1 + static_cast<int>(rng.next_below(3));
                len = std::min(len, n - pos);
                lengths.push_back(len);
                pos += len;
            }
            return decoder::from_word_lengths(lengths);
        };
        std::vector<Segmentation> golds = {draw()}, preds = {draw()};
        auto r = corpus::score_prf(golds, preds);
        CHECK(r.precision >= 0.0);
        CHECK(r.precision <= 1.0);
        CHECK(r.recall >= 0.0);
        CHECK(r.recall <= 1.0);
        const double lo = std::min(r.precision, r.recall);
        CHECK(r.f1 <= 2.0 * lo / (1.0 + lo) + 1e-12);
        // direct recomputation
        if (r.precision + r.recall > 0) {
            CHECK(r.f1 == doctest::Approx(2 * r.precision * r.recall / (r.precision + r.recall)));
        }
    }
}
