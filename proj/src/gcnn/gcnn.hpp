// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "core/param_store.hpp"
#include "core/tensor.hpp"

namespace seglearn::gcnn {

/// Composition parameters, one set per word length L in 1..max_len:
///   weight[L-1]  d x Ld    shared combination matrix
///   reset[L-1]   Ld x Ld   reset-gate coefficients
///   update[L-1]  (L+1)d x (L+1)d  update-gate coefficients
struct GcnnParams {
    int dim = 0;
    int max_len = 0;
    std::vector<core::Parameter*> weight;
    std::vector<core::Parameter*> reset;
    std::vector<core::Parameter*> update;

    /// Registers all three matrices for every length. The simple composer
    /// uses only `weight`, but reset/update are registered regardless so two
    /// models sharing a seed draw identical initial values in either mode.
    static GcnnParams create(core::ParamStore& store, int dim, int max_len, double init_scale);

    /// Re-binds to parameters already present in a store (model loading).
    static GcnnParams bind(core::ParamStore& store, int dim, int max_len);
};

/// Everything the backward pass needs from one gated composition. The gate
/// blocks of `gates` are laid out [z_new, z_1 .. z_L], each dim wide.
struct GatedCache {
    int len = 0;
    std::vector<core::Tensor> chars;  // inputs c_1..c_L
    core::Tensor concat_chars;        // Ld
    core::Tensor resets;              // Ld, sigmoid outputs r_1..r_L
    core::Tensor gated_chars;         // Ld, r_i ⊙ c_i
    core::Tensor candidate;           // d, ŵ = tanh(W (r ⊙ c))
    core::Tensor gate_input;          // (L+1)d, concat(ŵ, c_1..c_L)
    core::Tensor gates;               // (L+1)d, normalized update gates
    core::Tensor output;              // d
};

struct SimpleCache {
    int len = 0;
    std::vector<core::Tensor> chars;
    core::Tensor concat_chars;
    core::Tensor output;  // d, tanh(W concat)
};

/// Single shared-matrix composition: w = tanh(W_L [c_1; ...; c_L]).
core::Tensor compose_simple(const std::vector<core::Tensor>& chars, const GcnnParams& params,
                            SimpleCache* cache = nullptr);

/// Accumulates parameter gradients and, if `dchars` is non-null, per-input
/// gradients for the simple composition.
void compose_simple_backward(const SimpleCache& cache, const core::Tensor& doutput,
                             GcnnParams& params, std::vector<core::Tensor>* dchars);

/// Gated composition:
///   r = sigmoid(R_L [c_1; ...; c_L])            reset gates, one per character
///   ŵ = tanh(W_L [r_1⊙c_1; ...; r_L⊙c_L])       candidate activation
///   e = U_L [ŵ; c_1; ...; c_L]                   update-gate logits
///   z = per-dimension normalization of exp(e) across the L+1 gate blocks
///   w = z_new ⊙ ŵ + Σ_i z_i ⊙ c_i
/// The normalization runs over all L+1 blocks so that z_new + Σ z_i = 1
/// holds elementwise.
core::Tensor compose_gated(const std::vector<core::Tensor>& chars, const GcnnParams& params,
                           GatedCache* cache = nullptr);

void compose_gated_backward(const GatedCache& cache, const core::Tensor& doutput,
                            GcnnParams& params, std::vector<core::Tensor>* dchars);

}  // namespace seglearn::gcnn
