// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "core/error.hpp"
#include "core/gradcheck.hpp"
#include "doctest.h"
#include "emb/embedding.hpp"
#include "emb/vocab.hpp"
#include "helpers.hpp"

using namespace seglearn;

namespace {

corpus::Corpus mini_corpus(const char* text) {
    return corpus::parse_bakeoff_text(text, true, "<mem>");
}

}  // namespace

TEST_CASE("vocabulary build counts frequencies with deterministic order") {
    auto c = mini_corpus("甲乙 甲\n");
    auto v = emb::CharVocab::build(c, 1);
    CHECK(v.size() == 5);  // specials + 甲 + 乙
    CHECK(v.token(0) == corpus::kUnkToken);
    CHECK(v.token(1) == corpus::kEngToken);
    CHECK(v.token(2) == corpus::kNumToken);
    CHECK(v.token(3) == "甲");  // frequency 2 outranks 乙
    CHECK(v.token(4) == "乙");
    CHECK(v.frequency(3) == 2);
}

TEST_CASE("vocabulary folds rare characters into UNK") {
    auto c = mini_corpus("甲乙 甲\n");
    auto v = emb::CharVocab::build(c, 2);
    CHECK(v.size() == 4);
    CHECK(v.id("乙") == emb::CharVocab::kUnkId);
    CHECK(v.id("甲") == 3);
}

TEST_CASE("vocabulary build rejects an empty corpus") {
    corpus::Corpus empty;
    CHECK_THROWS_AS(emb::CharVocab::build(empty, 1), core::SegError);
}

TEST_CASE("vocabulary build is a pure function of corpus and cutoff") {
    auto c = mini_corpus("城南 旧事\n旧事 重提\n");
    auto a = emb::CharVocab::build(c, 1);
    auto b = emb::CharVocab::build(c, 1);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) CHECK(a.token(i) == b.token(i));
}

TEST_CASE("unseen lookups resolve to UNK and repeated lookups agree") {
    auto m = helpers::tiny_model(3);
    const int unseen = m.vocab.id("龍");
    CHECK(unseen == emb::CharVocab::kUnkId);
    auto a = m.embedding.lookup(m.vocab.id("一"));
    auto b = m.embedding.lookup(m.vocab.id("一"));
    CHECK(a.data == b.data);
    auto u = m.embedding.lookup(unseen);
    CHECK(u.data == m.embedding.lookup(emb::CharVocab::kUnkId).data);
}

TEST_CASE("lookup gradient lands on exactly one column") {
    auto m = helpers::tiny_model(5);
    core::ParamStore& store = *m.store;
    const int col = 4;

    // loss = sum of the looked-up vector
    auto loss = [&](core::ParamStore&) {
        auto v = m.embedding.lookup(col);
        double s = 0.0;
        for (double x : v.data) s += x;
        return s;
    };
    store.zero_grads();
    core::Tensor ones({m.cfg.d});
    ones.fill(1.0);
    m.embedding.add_column_grad(col, ones);

    CHECK(core::finite_difference_check(loss, store, 1e-5) < 1e-8);

    // every other column of the gradient stays zero
    const core::Tensor& grad = m.embedding.parameter().grad;
    for (int r = 0; r < m.cfg.d; ++r) {
        for (int cidx = 0; cidx < m.vocab.size(); ++cidx) {
            if (cidx != col) CHECK(grad.at(r, cidx) == 0.0);
        }
    }
}

TEST_CASE("pretrained loading overwrites matching columns") {
    auto m = helpers::tiny_model(7, {.vocab_extra = 2});  // vocab: specials + 一 + 二
    REQUIRE(m.vocab.size() == 5);

    SUBCASE("full coverage leaves nothing missed") {
        std::string text =
            "5 4\n"
            "<UNK> 1 1 1 1\n<ENG> 2 2 2 2\n<NUM> 3 3 3 3\n一 4 4 4 4\n二 5 5 5 5\n";
        auto report = emb::load_pretrained_text(text, m.vocab, m.embedding, "<mem>");
        CHECK(report.matched == 5);
        CHECK(report.missed == 0);
        CHECK(report.extraneous == 0);
        CHECK(m.embedding.lookup(3)[0] == doctest::Approx(4.0));
    }

    SUBCASE("dimension mismatch is an error") {
        CHECK_THROWS_AS(emb::load_pretrained_text("1 100\n", m.vocab, m.embedding, "<mem>"),
                        core::SegError);
    }

    SUBCASE("partial coverage keeps the random init elsewhere") {
        auto before = m.embedding.lookup(emb::CharVocab::kUnkId);
        std::string text = "3 4\n一 4 4 4 4\n二 5 5 5 5\n外 9 9 9 9\n";
        auto report = emb::load_pretrained_text(text, m.vocab, m.embedding, "<mem>");
        CHECK(report.matched == 2);
        CHECK(report.missed == 3);
        CHECK(report.extraneous == 1);
        CHECK(m.embedding.lookup(emb::CharVocab::kUnkId).data == before.data);
    }

    SUBCASE("malformed line names the line number") {
        try {
            emb::load_pretrained_text("2 4\n一 1 2 3 4\n二 1 2 x 4\n", m.vocab, m.embedding, "<mem>");
            FAIL("expected parse error");
        } catch (const core::SegError& e) {
            CHECK(std::string(e.what()).find(":3") != std::string::npos);
        }
    }
}

TEST_CASE("dropout is the identity at inference and at rate zero") {
    core::Rng rng(1);
    core::Tensor x = core::Tensor::vec({1.0, -2.0, 3.0});
    auto off = emb::dropout_input(x, 0.2, /*training=*/false, rng);
    CHECK(off.data == x.data);
    auto zero = emb::dropout_input(x, 0.0, /*training=*/true, rng);
    CHECK(zero.data == x.data);
}

TEST_CASE("dropout preserves the mean under inverted scaling") {
    core::Rng rng(21);
    const int trials = 100000;
    double sum = 0.0;
    core::Tensor one = core::Tensor::vec({1.0});
    for (int i = 0; i < trials; ++i) {
        sum += emb::dropout_input(one, 0.2, true, rng)[0];
    }
    CHECK(sum / trials == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("dropout mask reports the applied scales") {
    core::Rng rng(33);
    core::Tensor x = core::Tensor::full({64}, 2.0);
    core::Tensor mask;
    auto y = emb::dropout_input(x, 0.5, true, rng, &mask);
    for (int i = 0; i < x.size(); ++i) {
        CHECK(y[i] == doctest::Approx(mask[i] * x[i]));
        CHECK((mask[i] == 0.0 || mask[i] == doctest::Approx(2.0)));
    }
}
