// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "gcnn/gcnn.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace seglearn::gcnn {

namespace {

std::string name_of(const char* kind, int len) {
    return std::string("gcnn.") + kind + "." + std::to_string(len);
}

void check_len(const GcnnParams& params, std::size_t len) {
    if (len < 1 || static_cast<int>(len) > params.max_len) {
        core::throw_invalid("word length " + std::to_string(len) + " outside 1.." +
                            std::to_string(params.max_len));
    }
}

void check_dims(const GcnnParams& params, const std::vector<core::Tensor>& chars) {
    check_len(params, chars.size());
    for (const core::Tensor& c : chars) {
        if (c.size() != params.dim) {
            core::throw_invalid("character vector " + c.shape_str() + " does not match d=" +
                                std::to_string(params.dim));
        }
    }
}

core::Tensor concat_chars(const std::vector<core::Tensor>& chars) {
    std::vector<const core::Tensor*> parts;
    parts.reserve(chars.size());
    for (const core::Tensor& c : chars) parts.push_back(&c);
    return core::concat(parts);
}

}  // namespace

GcnnParams GcnnParams::create(core::ParamStore& store, int dim, int max_len, double init_scale) {
    GcnnParams p;
    p.dim = dim;
    p.max_len = max_len;
    for (int len = 1; len <= max_len; ++len) {
        p.weight.push_back(&store.add(name_of("W", len), {dim, len * dim}, init_scale));
        p.reset.push_back(&store.add(name_of("R", len), {len * dim, len * dim}, init_scale));
        p.update.push_back(
            &store.add(name_of("U", len), {(len + 1) * dim, (len + 1) * dim}, init_scale));
    }
    return p;
}

GcnnParams GcnnParams::bind(core::ParamStore& store, int dim, int max_len) {
    GcnnParams p;
    p.dim = dim;
    p.max_len = max_len;
    for (int len = 1; len <= max_len; ++len) {
        p.weight.push_back(&store.get(name_of("W", len)));
        p.reset.push_back(&store.get(name_of("R", len)));
        p.update.push_back(&store.get(name_of("U", len)));
    }
    return p;
}

core::Tensor compose_simple(const std::vector<core::Tensor>& chars, const GcnnParams& params,
                            SimpleCache* cache) {
    check_dims(params, chars);
    const int len = static_cast<int>(chars.size());
    core::Tensor cc = concat_chars(chars);
    core::Tensor out = core::elementwise(core::Unary::tanh,
                                         core::affine(params.weight[static_cast<std::size_t>(len - 1)]->value, cc));
    if (cache != nullptr) {
        cache->len = len;
        cache->chars = chars;
        cache->concat_chars = std::move(cc);
        cache->output = out;
    }
    return out;
}

void compose_simple_backward(const SimpleCache& cache, const core::Tensor& doutput,
                             GcnnParams& params, std::vector<core::Tensor>* dchars) {
    const int d = params.dim;
    const int len = cache.len;
    core::Parameter& W = *params.weight[static_cast<std::size_t>(len - 1)];

    core::Tensor dpre({d});
    for (int i = 0; i < d; ++i) dpre[i] = doutput[i] * (1.0 - cache.output[i] * cache.output[i]);

    core::Tensor dcc({len * d});
    core::affine_backward(W.value, cache.concat_chars, dpre, &W.grad, &dcc, nullptr);

    if (dchars != nullptr) {
        dchars->assign(static_cast<std::size_t>(len), core::Tensor({d}));
        for (int i = 0; i < len; ++i) {
            for (int k = 0; k < d; ++k) (*dchars)[static_cast<std::size_t>(i)][k] = dcc[i * d + k];
        }
    }
}

core::Tensor compose_gated(const std::vector<core::Tensor>& chars, const GcnnParams& params,
                           GatedCache* cache) {
    check_dims(params, chars);
    const int d = params.dim;
    const int len = static_cast<int>(chars.size());
    const core::Tensor& W = params.weight[static_cast<std::size_t>(len - 1)]->value;
    const core::Tensor& R = params.reset[static_cast<std::size_t>(len - 1)]->value;
    const core::Tensor& U = params.update[static_cast<std::size_t>(len - 1)]->value;

    core::Tensor cc = concat_chars(chars);
    core::Tensor resets = core::elementwise(core::Unary::sigmoid, core::affine(R, cc));

    core::Tensor gated({len * d});
    for (int i = 0; i < len * d; ++i) gated[i] = resets[i] * cc[i];
    core::Tensor candidate = core::elementwise(core::Unary::tanh, core::affine(W, gated));

    std::vector<const core::Tensor*> gate_parts{&candidate};
    for (const core::Tensor& c : chars) gate_parts.push_back(&c);
    core::Tensor gate_input = core::concat(gate_parts);
    core::Tensor logits = core::affine(U, gate_input);

    // per-dimension normalization across the L+1 gate blocks
    core::Tensor gates({(len + 1) * d});
    for (int k = 0; k < d; ++k) {
        double peak = logits[k];
        for (int b = 1; b <= len; ++b) peak = std::max(peak, logits[b * d + k]);
        double total = 0.0;
        for (int b = 0; b <= len; ++b) {
            double e = core::exp_clamped(logits[b * d + k] - peak);
            gates[b * d + k] = e;
            total += e;
        }
        for (int b = 0; b <= len; ++b) gates[b * d + k] /= total;
    }

    core::Tensor out({d});
    for (int k = 0; k < d; ++k) {
        double acc = gates[k] * candidate[k];
        for (int i = 1; i <= len; ++i) acc += gates[i * d + k] * chars[static_cast<std::size_t>(i - 1)][k];
        out[k] = acc;
    }

    if (cache != nullptr) {
        cache->len = len;
        cache->chars = chars;
        cache->concat_chars = std::move(cc);
        cache->resets = std::move(resets);
        cache->gated_chars = std::move(gated);
        cache->candidate = std::move(candidate);
        cache->gate_input = std::move(gate_input);
        cache->gates = std::move(gates);
        cache->output = out;
    }
    return out;
}

void compose_gated_backward(const GatedCache& cache, const core::Tensor& doutput,
                            GcnnParams& params, std::vector<core::Tensor>* dchars) {
    const int d = params.dim;
    const int len = cache.len;
    core::Parameter& W = *params.weight[static_cast<std::size_t>(len - 1)];
    core::Parameter& R = *params.reset[static_cast<std::size_t>(len - 1)];
    core::Parameter& U = *params.update[static_cast<std::size_t>(len - 1)];

    std::vector<core::Tensor> dc(static_cast<std::size_t>(len), core::Tensor({d}));
    core::Tensor dcandidate({d});
    core::Tensor dgates({(len + 1) * d});

    // w = z_new ⊙ ŵ + Σ z_i ⊙ c_i
    for (int k = 0; k < d; ++k) {
        const double g = doutput[k];
        dgates[k] = g * cache.candidate[k];
        dcandidate[k] = g * cache.gates[k];
        for (int i = 1; i <= len; ++i) {
            dgates[i * d + k] = g * cache.chars[static_cast<std::size_t>(i - 1)][k];
            dc[static_cast<std::size_t>(i - 1)][k] += g * cache.gates[i * d + k];
        }
    }

    // softmax over blocks, independently per dimension
    core::Tensor dlogits({(len + 1) * d});
    for (int k = 0; k < d; ++k) {
        double weighted = 0.0;
        for (int b = 0; b <= len; ++b) weighted += cache.gates[b * d + k] * dgates[b * d + k];
        for (int b = 0; b <= len; ++b) {
            dlogits[b * d + k] = cache.gates[b * d + k] * (dgates[b * d + k] - weighted);
        }
    }

    core::Tensor dgate_input({(len + 1) * d});
    core::affine_backward(U.value, cache.gate_input, dlogits, &U.grad, &dgate_input, nullptr);
    for (int k = 0; k < d; ++k) dcandidate[k] += dgate_input[k];
    for (int i = 1; i <= len; ++i) {
        for (int k = 0; k < d; ++k) dc[static_cast<std::size_t>(i - 1)][k] += dgate_input[i * d + k];
    }

    // candidate path: ŵ = tanh(W (r ⊙ c))
    core::Tensor dcand_pre({d});
    for (int k = 0; k < d; ++k) {
        dcand_pre[k] = dcandidate[k] * (1.0 - cache.candidate[k] * cache.candidate[k]);
    }
    core::Tensor dgated({len * d});
    core::affine_backward(W.value, cache.gated_chars, dcand_pre, &W.grad, &dgated, nullptr);

    // r ⊙ c, then the reset gates r = sigmoid(R c)
    core::Tensor dresets_pre({len * d});
    core::Tensor dcc({len * d});
    for (int i = 0; i < len * d; ++i) {
        const double r = cache.resets[i];
        dresets_pre[i] = dgated[i] * cache.concat_chars[i] * r * (1.0 - r);
        dcc[i] = dgated[i] * r;
    }
    core::affine_backward(R.value, cache.concat_chars, dresets_pre, &R.grad, &dcc, nullptr);

    for (int i = 0; i < len; ++i) {
        for (int k = 0; k < d; ++k) dc[static_cast<std::size_t>(i)][k] += dcc[i * d + k];
    }

    if (dchars != nullptr) *dchars = std::move(dc);
}

}  // namespace seglearn::gcnn
