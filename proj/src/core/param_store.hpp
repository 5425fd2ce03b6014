// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/rng.hpp"
#include "core/tensor.hpp"

namespace seglearn::core {

/// A named model parameter with its gradient buffer and the running sum of
/// squared gradients used by the diagonal AdaGrad update.
struct Parameter {
    std::string name;
    Tensor value;
    Tensor grad;
    Tensor adagrad_sum;

    Parameter(std::string n, std::vector<int> shape)
        : name(std::move(n)), value(shape), grad(shape), adagrad_sum(std::move(shape)) {}
};

/// Ordered, name-unique collection of parameters. Registration order is the
/// canonical order for serialization, so two stores built by the same
/// sequence of add() calls iterate identically.
///
/// Single writer: training mutates the store from one thread; once frozen,
/// concurrent reads are safe.
class ParamStore {
public:
    explicit ParamStore(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    /// Registers a parameter initialized uniformly in [-init_scale, init_scale]
    /// from the store RNG. Duplicate names are an error.
    Parameter& add(const std::string& name, std::vector<int> shape, double init_scale);

    /// Registers a parameter initialized to zero.
    Parameter& add_zeros(const std::string& name, std::vector<int> shape);

    Parameter& get(const std::string& name);
    const Parameter& get(const std::string& name) const;
    Parameter* find(const std::string& name);

    std::size_t size() const { return params_.size(); }
    Parameter& at(std::size_t i) { return *params_[i]; }
    const Parameter& at(std::size_t i) const { return *params_[i]; }

    std::uint64_t seed() const { return seed_; }

    void zero_grads();

    /// Total number of scalar values across all parameters.
    std::size_t numel() const;

private:
    std::uint64_t seed_;
    Rng rng_;
    std::vector<std::unique_ptr<Parameter>> params_;
    std::unordered_map<std::string, Parameter*> index_;
};

/// One diagonal-AdaGrad update: accumulator += grad², value -= alpha * grad /
/// sqrt(accumulator + 1e-8), then the gradient buffer is cleared. The epsilon
/// sits under the root so a zero history never divides by zero.
void adagrad_step(Parameter& p, double alpha);

/// grad += lambda * value, for every parameter in the store. The sparse
/// embedding exemption is handled by the trainer, which applies the same rule
/// column-wise instead of calling this on the embedding matrix.
void l2_gradient(ParamStore& store, double lambda);

/// grad += lambda * value for a single parameter.
void l2_gradient(Parameter& p, double lambda);

}  // namespace seglearn::core
