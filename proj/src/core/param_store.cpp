// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "core/param_store.hpp"

#include <cmath>

#include "core/error.hpp"

namespace seglearn::core {

Parameter& ParamStore::add(const std::string& name, std::vector<int> shape, double init_scale) {
    Parameter& p = add_zeros(name, std::move(shape));
    for (double& v : p.value.data) v = rng_.next_symmetric(init_scale);
    return p;
}

Parameter& ParamStore::add_zeros(const std::string& name, std::vector<int> shape) {
    if (index_.count(name) != 0) throw_invalid("duplicate parameter name: " + name);
    params_.push_back(std::make_unique<Parameter>(name, std::move(shape)));
    Parameter& p = *params_.back();
    index_[name] = &p;
    return p;
}

Parameter& ParamStore::get(const std::string& name) {
    Parameter* p = find(name);
    if (p == nullptr) throw_invalid("unknown parameter: " + name);
    return *p;
}

const Parameter& ParamStore::get(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw_invalid("unknown parameter: " + name);
    return *it->second;
}

Parameter* ParamStore::find(const std::string& name) {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : it->second;
}

void ParamStore::zero_grads() {
    for (auto& p : params_) p->grad.fill(0.0);
}

std::size_t ParamStore::numel() const {
    std::size_t n = 0;
    for (const auto& p : params_) n += p->value.data.size();
    return n;
}

void adagrad_step(Parameter& p, double alpha) {
    constexpr double kEps = 1e-8;
    const int n = p.value.size();
    for (int i = 0; i < n; ++i) {
        double g = p.grad[i];
        if (g != 0.0) {
            p.adagrad_sum[i] += g * g;
            p.value[i] -= alpha * g / std::sqrt(p.adagrad_sum[i] + kEps);
        }
        p.grad[i] = 0.0;
    }
}

void l2_gradient(Parameter& p, double lambda) {
    if (lambda == 0.0) return;
    const int n = p.value.size();
    for (int i = 0; i < n; ++i) p.grad[i] += lambda * p.value[i];
}

void l2_gradient(ParamStore& store, double lambda) {
    for (std::size_t i = 0; i < store.size(); ++i) l2_gradient(store.at(i), lambda);
}

}  // namespace seglearn::core
