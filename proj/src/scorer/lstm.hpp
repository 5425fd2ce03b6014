// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "core/param_store.hpp"
#include "core/tensor.hpp"

namespace seglearn::scorer {

/// LSTM weights plus the prediction head and scoring vector. Input vectors
/// are d-wide word representations; the hidden state is H-wide. h0/c0 are
/// trainable initial-state parameters.
struct LstmParams {
    int dim = 0;     // word-vector size d
    int hidden = 0;  // hidden units H

    core::Parameter* W_input;
    core::Parameter* W_forget;
    core::Parameter* W_output;
    core::Parameter* W_cell;
    core::Parameter* U_input;
    core::Parameter* U_forget;
    core::Parameter* U_output;
    core::Parameter* U_cell;
    core::Parameter* b_input;
    core::Parameter* b_forget;
    core::Parameter* b_output;
    core::Parameter* b_cell;

    core::Parameter* W_pred;  // d x H
    core::Parameter* b_pred;  // d
    core::Parameter* word_u;  // d, scores u·y

    core::Parameter* h0;  // H
    core::Parameter* c0;  // H

    static LstmParams create(core::ParamStore& store, int dim, int hidden, double init_scale);
    static LstmParams bind(core::ParamStore& store, int dim, int hidden);
};

struct LstmState {
    core::Tensor h;
    core::Tensor c;
};

/// Initial state taken from the trainable h0/c0 parameters.
LstmState initial_state(const LstmParams& params);

struct LstmCache {
    core::Tensor x;
    core::Tensor h_prev;
    core::Tensor c_prev;
    core::Tensor gate_input;   // i_t
    core::Tensor gate_forget;  // f_t
    core::Tensor gate_output;  // o_t
    core::Tensor cell_cand;    // ĉ_t
    core::Tensor c_new;        // c_t
    core::Tensor tanh_c;       // tanh(c_t)
};

/// One step of
///   i = σ(Wⁱx + Uⁱh + bⁱ)   f = σ(Wᶠx + Uᶠh + bᶠ)   o = σ(Wᵒx + Uᵒh + bᵒ)
///   ĉ = tanh(Wᶜx + Uᶜh + bᶜ)   c' = f⊙c + i⊙ĉ   h' = o⊙tanh(c')
LstmState lstm_step(const core::Tensor& x, const LstmState& state, const LstmParams& params,
                    LstmCache* cache = nullptr);

/// Backward through one step. dh/dc carry the incoming state gradients and
/// are replaced with the gradients w.r.t. the previous state; the gradient
/// w.r.t. x is accumulated into dx (if non-null) and parameter gradients
/// into the store.
void lstm_step_backward(const LstmCache& cache, LstmParams& params, core::Tensor& dh,
                        core::Tensor& dc, core::Tensor* dx);

struct PredictCache {
    core::Tensor h;
    core::Tensor p;
};

/// Prediction for the next word vector: p = tanh(W_pred h + b_pred).
core::Tensor predict_next(const LstmState& state, const LstmParams& params,
                          PredictCache* cache = nullptr);

/// Accumulates parameter gradients and adds the state gradient into dh.
void predict_next_backward(const PredictCache& cache, LstmParams& params, const core::Tensor& dp,
                           core::Tensor& dh);

}  // namespace seglearn::scorer
