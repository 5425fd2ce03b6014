// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "scorer/lstm.hpp"

#include "core/error.hpp"

namespace seglearn::scorer {

LstmParams LstmParams::create(core::ParamStore& store, int dim, int hidden, double init_scale) {
    LstmParams p;
    p.dim = dim;
    p.hidden = hidden;
    p.W_input = &store.add("lstm.W.i", {hidden, dim}, init_scale);
    p.U_input = &store.add("lstm.U.i", {hidden, hidden}, init_scale);
    p.b_input = &store.add("lstm.b.i", {hidden}, init_scale);
    p.W_forget = &store.add("lstm.W.f", {hidden, dim}, init_scale);
    p.U_forget = &store.add("lstm.U.f", {hidden, hidden}, init_scale);
    p.b_forget = &store.add("lstm.b.f", {hidden}, init_scale);
    p.W_output = &store.add("lstm.W.o", {hidden, dim}, init_scale);
    p.U_output = &store.add("lstm.U.o", {hidden, hidden}, init_scale);
    p.b_output = &store.add("lstm.b.o", {hidden}, init_scale);
    p.W_cell = &store.add("lstm.W.c", {hidden, dim}, init_scale);
    p.U_cell = &store.add("lstm.U.c", {hidden, hidden}, init_scale);
    p.b_cell = &store.add("lstm.b.c", {hidden}, init_scale);
    p.W_pred = &store.add("lstm.W.p", {dim, hidden}, init_scale);
    p.b_pred = &store.add("lstm.b.p", {dim}, init_scale);
    p.word_u = &store.add("score.u", {dim}, init_scale);
    p.h0 = &store.add_zeros("lstm.h0", {hidden});
    p.c0 = &store.add_zeros("lstm.c0", {hidden});
    return p;
}

LstmParams LstmParams::bind(core::ParamStore& store, int dim, int hidden) {
    LstmParams p;
    p.dim = dim;
    p.hidden = hidden;
    p.W_input = &store.get("lstm.W.i");
    p.U_input = &store.get("lstm.U.i");
    p.b_input = &store.get("lstm.b.i");
    p.W_forget = &store.get("lstm.W.f");
    p.U_forget = &store.get("lstm.U.f");
    p.b_forget = &store.get("lstm.b.f");
    p.W_output = &store.get("lstm.W.o");
    p.U_output = &store.get("lstm.U.o");
    p.b_output = &store.get("lstm.b.o");
    p.W_cell = &store.get("lstm.W.c");
    p.U_cell = &store.get("lstm.U.c");
    p.b_cell = &store.get("lstm.b.c");
    p.W_pred = &store.get("lstm.W.p");
    p.b_pred = &store.get("lstm.b.p");
    p.word_u = &store.get("score.u");
    p.h0 = &store.get("lstm.h0");
    p.c0 = &store.get("lstm.c0");
    return p;
}

LstmState initial_state(const LstmParams& params) {
    return {params.h0->value, params.c0->value};
}

namespace {

core::Tensor gate_preact(const core::Parameter& W, const core::Parameter& U,
                         const core::Parameter& b, const core::Tensor& x, const core::Tensor& h) {
    core::Tensor pre = core::affine(W.value, x, &b.value);
    const core::Tensor uh = core::affine(U.value, h);
    for (int i = 0; i < pre.size(); ++i) pre[i] += uh[i];
    return pre;
}

}  // namespace

LstmState lstm_step(const core::Tensor& x, const LstmState& state, const LstmParams& params,
                    LstmCache* cache) {
    if (x.size() != params.dim) {
        core::throw_invalid("lstm_step: input " + x.shape_str() + " does not match d=" +
                            std::to_string(params.dim));
    }
    const int H = params.hidden;
    core::Tensor gi = core::elementwise(core::Unary::sigmoid,
                                        gate_preact(*params.W_input, *params.U_input, *params.b_input, x, state.h));
    core::Tensor gf = core::elementwise(core::Unary::sigmoid,
                                        gate_preact(*params.W_forget, *params.U_forget, *params.b_forget, x, state.h));
    core::Tensor go = core::elementwise(core::Unary::sigmoid,
                                        gate_preact(*params.W_output, *params.U_output, *params.b_output, x, state.h));
    core::Tensor gc = core::elementwise(core::Unary::tanh,
                                        gate_preact(*params.W_cell, *params.U_cell, *params.b_cell, x, state.h));

    core::Tensor c_new({H});
    for (int i = 0; i < H; ++i) c_new[i] = gf[i] * state.c[i] + gi[i] * gc[i];
    core::Tensor tc = core::elementwise(core::Unary::tanh, c_new);
    core::Tensor h_new({H});
    for (int i = 0; i < H; ++i) h_new[i] = go[i] * tc[i];

    if (cache != nullptr) {
        cache->x = x;
        cache->h_prev = state.h;
        cache->c_prev = state.c;
        cache->gate_input = std::move(gi);
        cache->gate_forget = std::move(gf);
        cache->gate_output = std::move(go);
        cache->cell_cand = std::move(gc);
        cache->c_new = c_new;
        cache->tanh_c = std::move(tc);
    }
    return {std::move(h_new), std::move(c_new)};
}

namespace {

// accumulates gradients of pre = Wx + Uh + b
void gate_backward(core::Parameter& W, core::Parameter& U, core::Parameter& b,
                   const core::Tensor& x, const core::Tensor& h, const core::Tensor& dpre,
                   core::Tensor* dx, core::Tensor& dh_prev) {
    core::affine_backward(W.value, x, dpre, &W.grad, dx, &b.grad);
    core::affine_backward(U.value, h, dpre, &U.grad, &dh_prev, nullptr);
}

}  // namespace

void lstm_step_backward(const LstmCache& cache, LstmParams& params, core::Tensor& dh,
                        core::Tensor& dc, core::Tensor* dx) {
    const int H = params.hidden;
    const core::Tensor& gi = cache.gate_input;
    const core::Tensor& gf = cache.gate_forget;
    const core::Tensor& go = cache.gate_output;
    const core::Tensor& gc = cache.cell_cand;

    // h = o ⊙ tanh(c)
    core::Tensor dgo_pre({H});
    for (int i = 0; i < H; ++i) {
        dgo_pre[i] = dh[i] * cache.tanh_c[i] * go[i] * (1.0 - go[i]);
        dc[i] += dh[i] * go[i] * (1.0 - cache.tanh_c[i] * cache.tanh_c[i]);
    }

    // c = f ⊙ c_prev + i ⊙ ĉ
    core::Tensor dgi_pre({H}), dgf_pre({H}), dgc_pre({H}), dc_prev({H});
    for (int i = 0; i < H; ++i) {
        dgf_pre[i] = dc[i] * cache.c_prev[i] * gf[i] * (1.0 - gf[i]);
        dgi_pre[i] = dc[i] * gc[i] * gi[i] * (1.0 - gi[i]);
        dgc_pre[i] = dc[i] * gi[i] * (1.0 - gc[i] * gc[i]);
        dc_prev[i] = dc[i] * gf[i];
    }

    core::Tensor dh_prev({H});
    gate_backward(*params.W_input, *params.U_input, *params.b_input, cache.x, cache.h_prev,
                  dgi_pre, dx, dh_prev);
    gate_backward(*params.W_forget, *params.U_forget, *params.b_forget, cache.x, cache.h_prev,
                  dgf_pre, dx, dh_prev);
    gate_backward(*params.W_output, *params.U_output, *params.b_output, cache.x, cache.h_prev,
                  dgo_pre, dx, dh_prev);
    gate_backward(*params.W_cell, *params.U_cell, *params.b_cell, cache.x, cache.h_prev,
                  dgc_pre, dx, dh_prev);

    dh = std::move(dh_prev);
    dc = std::move(dc_prev);
}

core::Tensor predict_next(const LstmState& state, const LstmParams& params, PredictCache* cache) {
    core::Tensor p = core::elementwise(core::Unary::tanh,
                                       core::affine(params.W_pred->value, state.h, &params.b_pred->value));
    if (cache != nullptr) {
        cache->h = state.h;
        cache->p = p;
    }
    return p;
}

void predict_next_backward(const PredictCache& cache, LstmParams& params, const core::Tensor& dp,
                           core::Tensor& dh) {
    core::Tensor dpre({params.dim});
    for (int i = 0; i < params.dim; ++i) dpre[i] = dp[i] * (1.0 - cache.p[i] * cache.p[i]);
    core::affine_backward(params.W_pred->value, cache.h, dpre, &params.W_pred->grad, &dh,
                          &params.b_pred->grad);
}

}  // namespace seglearn::scorer
