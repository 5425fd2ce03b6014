// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "core/error.hpp"
#include "core/gradcheck.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "scorer/scorer.hpp"

using namespace seglearn;
using core::Tensor;

namespace {

void zero_all(model::Model& m) {
    for (std::size_t i = 0; i < m.store->size(); ++i) m.store->at(i).value.fill(0.0);
}

void zero_lstm_cell(model::Model& m) {
    for (auto* p : {m.lstm.W_input, m.lstm.W_forget, m.lstm.W_output, m.lstm.W_cell,
                    m.lstm.U_input, m.lstm.U_forget, m.lstm.U_output, m.lstm.U_cell,
                    m.lstm.b_input, m.lstm.b_forget, m.lstm.b_output, m.lstm.b_cell}) {
        p->value.fill(0.0);
    }
}

}  // namespace

TEST_CASE("lstm step with zero parameters from a zero state stays at zero") {
    auto m = helpers::tiny_model(1, {.randomize_state = false});
    zero_all(m);
    scorer::LstmState s{Tensor({m.cfg.H}), Tensor({m.cfg.H})};
    core::Rng rng(1);
    auto x = helpers::random_vectors(1, m.cfg.d, 1.0, rng)[0];
    auto next = scorer::lstm_step(x, s, m.lstm);
    for (double v : next.h.data) CHECK(v == doctest::Approx(0.0));
    for (double v : next.c.data) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("lstm step with zero parameters halves the carried cell") {
    auto m = helpers::tiny_model(2, {.randomize_state = false});
    zero_all(m);
    scorer::LstmState s{Tensor({m.cfg.H}), Tensor::full({m.cfg.H}, 1.0)};
    core::Rng rng(2);
    auto x = helpers::random_vectors(1, m.cfg.d, 1.0, rng)[0];
    auto next = scorer::lstm_step(x, s, m.lstm);
    for (int i = 0; i < m.cfg.H; ++i) {
        CHECK(next.c[i] == doctest::Approx(0.5));
        CHECK(next.h[i] == doctest::Approx(0.5 * std::tanh(0.5)));
    }
}

TEST_CASE("hidden state magnitudes stay below one") {
    auto m = helpers::tiny_model(3, {.init_scale = 2.0});
    core::Rng rng(3);
    scorer::LstmState s = scorer::initial_state(m.lstm);
    for (int t = 0; t < 10; ++t) {
        s = scorer::lstm_step(helpers::random_vectors(1, m.cfg.d, 3.0, rng)[0], s, m.lstm);
        for (double v : s.h.data) CHECK(std::fabs(v) < 1.0);
    }
}

TEST_CASE("lstm gradients through three chained steps match finite differences") {
    auto m = helpers::tiny_model(4, {.init_scale = 0.5});
    core::Rng rng(4);
    const auto inputs = helpers::random_vectors(3, m.cfg.d, 0.7, rng);
    core::Tensor probe({m.cfg.H});
    for (double& v : probe.data) v = rng.next_symmetric(1.0);

    auto loss = [&](core::ParamStore&) {
        scorer::LstmState s = scorer::initial_state(m.lstm);
        for (const auto& x : inputs) s = scorer::lstm_step(x, s, m.lstm);
        return core::dot(probe, s.h);
    };

    m.store->zero_grads();
    std::vector<scorer::LstmCache> caches(3);
    scorer::LstmState s = scorer::initial_state(m.lstm);
    for (int t = 0; t < 3; ++t) s = scorer::lstm_step(inputs[static_cast<std::size_t>(t)], s, m.lstm, &caches[static_cast<std::size_t>(t)]);
    core::Tensor dh = probe;
    core::Tensor dc({m.cfg.H});
    for (int t = 2; t >= 0; --t) {
        scorer::lstm_step_backward(caches[static_cast<std::size_t>(t)], m.lstm, dh, dc, nullptr);
    }
    core::add_scaled(m.lstm.h0->grad, dh, 1.0);
    core::add_scaled(m.lstm.c0->grad, dc, 1.0);

    CHECK(core::finite_difference_check(loss, *m.store, 1e-4) < 1e-4);
}

TEST_CASE("prediction vector basics") {
    auto m = helpers::tiny_model(5, {.randomize_state = false});
    SUBCASE("zero parameters predict zero") {
        zero_all(m);
        auto p = scorer::predict_next(scorer::initial_state(m.lstm), m.lstm);
        for (double v : p.data) CHECK(v == 0.0);
    }
    SUBCASE("bias-only prediction is tanh(1)") {
        zero_all(m);
        m.lstm.b_pred->value.fill(1.0);
        auto p = scorer::predict_next(scorer::initial_state(m.lstm), m.lstm);
        for (double v : p.data) CHECK(v == doctest::Approx(std::tanh(1.0)));
    }
    SUBCASE("predictions stay inside (-1, 1)") {
        auto wide = helpers::tiny_model(6, {.init_scale = 3.0});
        core::Rng rng(6);
        scorer::LstmState s = scorer::initial_state(wide.lstm);
        for (int t = 0; t < 5; ++t) {
            auto p = scorer::predict_next(s, wide.lstm);
            for (double v : p.data) CHECK(std::fabs(v) < 1.0);
            s = scorer::lstm_step(helpers::random_vectors(1, wide.cfg.d, 2.0, rng)[0], s, wide.lstm);
        }
    }
}

TEST_CASE("word score is the dot with u") {
    auto m = helpers::tiny_model(7, {.d = 2, .H = 2});
    m.lstm.word_u->value = Tensor::vec({1.0, 2.0});
    CHECK(scorer::word_score(Tensor::vec({3.0, 4.0}), m.lstm) == doctest::Approx(11.0));
    m.lstm.word_u->value.fill(0.0);
    CHECK(scorer::word_score(Tensor::vec({3.0, 4.0}), m.lstm) == 0.0);
    // linearity
    m.lstm.word_u->value = Tensor::vec({0.3, -0.7});
    const double base = scorer::word_score(Tensor::vec({1.0, 2.0}), m.lstm);
    CHECK(scorer::word_score(Tensor::vec({2.5, 5.0}), m.lstm) == doctest::Approx(2.5 * base));
}

TEST_CASE("link score is the dot with the prediction") {
    CHECK(scorer::link_score(Tensor::vec({0.0, 0.0}), Tensor::vec({5.0, -7.0})) == 0.0);
    CHECK(scorer::link_score(Tensor::vec({0.5, 0.5}), Tensor::vec({0.5, 0.5})) == doctest::Approx(0.5));
    CHECK(scorer::link_score(Tensor::vec({0.2, 0.4}), Tensor::vec({-1.0, -2.0})) ==
          doctest::Approx(-scorer::link_score(Tensor::vec({0.2, 0.4}), Tensor::vec({1.0, 2.0}))));
}

TEST_CASE("sentence score of the zero model is zero") {
    auto m = helpers::tiny_model(8, {.randomize_state = false});
    zero_all(m);
    core::Rng rng(8);
    auto words = helpers::random_vectors(5, m.cfg.d, 1.0, rng);
    CHECK(scorer::sentence_score(words, m.lstm) == doctest::Approx(0.0));
}

TEST_CASE("single-word score with zero LSTM and zero initial state is u dot y") {
    auto m = helpers::tiny_model(9, {.randomize_state = false});
    zero_lstm_cell(m);
    m.lstm.b_pred->value.fill(0.0);
    m.lstm.h0->value.fill(0.0);
    m.lstm.c0->value.fill(0.0);
    core::Rng rng(9);
    auto word = helpers::random_vectors(1, m.cfg.d, 1.0, rng);
    const double expected = core::dot(m.lstm.word_u->value, word[0]);
    CHECK(scorer::sentence_score(word, m.lstm) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("sentence score rejects an empty sequence") {
    auto m = helpers::tiny_model(10);
    std::vector<Tensor> none;
    CHECK_THROWS_AS(scorer::sentence_score(none, m.lstm), core::SegError);
}

TEST_CASE("one-pass score equals the per-step decomposition") {
    auto m = helpers::tiny_model(11, {.init_scale = 0.8});
    core::Rng rng(11);
    auto words = helpers::random_vectors(6, m.cfg.d, 0.9, rng);

    const double one_pass = scorer::sentence_score(words, m.lstm);

    double stepwise = 0.0;
    scorer::LstmState s = scorer::initial_state(m.lstm);
    for (std::size_t t = 0; t < words.size(); ++t) {
        auto p = scorer::predict_next(s, m.lstm);
        stepwise += scorer::word_score(words[t], m.lstm) + scorer::link_score(p, words[t]);
        s = scorer::lstm_step(words[t], s, m.lstm);
    }
    CHECK(std::fabs(one_pass - stepwise) < 1e-10);
}

TEST_CASE("predictions are causal in the word sequence") {
    auto m = helpers::tiny_model(12);
    core::Rng rng(12);
    auto words = helpers::random_vectors(5, m.cfg.d, 1.0, rng);

    scorer::SentenceCache a, b;
    scorer::sentence_score(words, m.lstm, scorer::ScoreMode::both, &a);
    auto altered = words;
    altered[3] = helpers::random_vectors(1, m.cfg.d, 1.0, rng)[0];
    scorer::sentence_score(altered, m.lstm, scorer::ScoreMode::both, &b);

    // p_1..p_4 depend only on words before index 3
    for (std::size_t t = 0; t <= 3; ++t) {
        CHECK(a.predictions[t].p.data == b.predictions[t].p.data);
    }
    CHECK(a.predictions[4].p.data != b.predictions[4].p.data);
}

TEST_CASE("score modes zero out the other term") {
    auto m = helpers::tiny_model(13);
    core::Rng rng(13);
    auto words = helpers::random_vectors(4, m.cfg.d, 1.0, rng);
    const double both = scorer::sentence_score(words, m.lstm, scorer::ScoreMode::both);
    const double word_only = scorer::sentence_score(words, m.lstm, scorer::ScoreMode::word_only);
    const double link_only = scorer::sentence_score(words, m.lstm, scorer::ScoreMode::link_only);
    CHECK(both == doctest::Approx(word_only + link_only).epsilon(1e-12));
}

TEST_CASE("sentence score gradients match finite differences") {
    auto m = helpers::tiny_model(14, {.init_scale = 0.5});
    core::Rng rng(14);
    const auto words = helpers::random_vectors(4, m.cfg.d, 0.7, rng);

    for (auto mode : {scorer::ScoreMode::both, scorer::ScoreMode::word_only,
                      scorer::ScoreMode::link_only}) {
        auto loss = [&](core::ParamStore&) { return scorer::sentence_score(words, m.lstm, mode); };
        m.store->zero_grads();
        scorer::SentenceCache cache;
        scorer::sentence_score(words, m.lstm, mode, &cache);
        std::vector<Tensor> dwords;
        scorer::sentence_score_backward(cache, m.lstm, 1.0, mode, dwords);
        CHECK(core::finite_difference_check(loss, *m.store, 1e-4) < 1e-4);
    }
}

TEST_CASE("full path gradients from embeddings through composition and scoring") {
    auto m = helpers::tiny_model(15, {.init_scale = 0.5});
    core::Rng rng(15);
    const auto ids = helpers::random_ids(6, m, rng);
    const auto seg = decoder::from_word_lengths({2, 1, 3});
    model::Compositor comp(m, /*training=*/false, nullptr);

    auto loss = [&](core::ParamStore&) {
        std::vector<Tensor> words;
        for (const auto& span : seg.spans) words.push_back(comp.compose(ids, span.first, span.second).vec);
        return scorer::sentence_score(words, m.lstm);
    };

    m.store->zero_grads();
    std::vector<model::WordCandidate> cands;
    std::vector<Tensor> words;
    for (const auto& span : seg.spans) {
        cands.push_back(comp.compose(ids, span.first, span.second));
        words.push_back(cands.back().vec);
    }
    scorer::SentenceCache cache;
    scorer::sentence_score(words, m.lstm, scorer::ScoreMode::both, &cache);
    std::vector<Tensor> dwords;
    scorer::sentence_score_backward(cache, m.lstm, 1.0, scorer::ScoreMode::both, dwords);
    for (std::size_t w = 0; w < cands.size(); ++w) comp.backward(cands[w], dwords[w], nullptr);

    CHECK(core::finite_difference_check(loss, *m.store, 1e-4) < 1e-4);
}
