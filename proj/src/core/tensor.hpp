// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace seglearn::core {

/// Dense row-major tensor of doubles. Rank 1 and 2 are all the model needs;
/// shape is kept general so parameter files stay self-describing.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s);

    static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }
    static Tensor full(std::vector<int> s, double v);
    static Tensor vec(std::initializer_list<double> values);  // rank-1 literal

    int size() const { return static_cast<int>(data.size()); }
    int rank() const { return static_cast<int>(shape.size()); }
    int rows() const;
    int cols() const;

    double operator[](int i) const { return data[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return data[static_cast<std::size_t>(i)]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols() + c]; }
    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols() + c]; }

    void fill(double v);
    bool same_shape(const Tensor& o) const { return shape == o.shape; }
    bool all_finite() const;
    std::string shape_str() const;
};

/// y = W x (+ b). W is m x n, x has n entries, b (optional) has m.
/// Shape mismatches raise an invalid_argument error naming both shapes.
Tensor affine(const Tensor& W, const Tensor& x, const Tensor* b = nullptr);

/// Accumulates gradients of affine(): dW += dy ⊗ x, dx += Wᵀ dy, db += dy.
/// Any of the gradient sinks may be null.
void affine_backward(const Tensor& W, const Tensor& x, const Tensor& dy,
                     Tensor* dW, Tensor* dx, Tensor* db);

enum class Unary { sigmoid, tanh, exp };

/// Per-element application. sigmoid/exp inputs are clamped to [-50, 50]
/// before evaluation; sigmoid output is additionally nudged off the exact
/// endpoints so it stays strictly inside (0, 1) in double precision.
Tensor elementwise(Unary f, const Tensor& x);

double sigmoid(double x);
double tanh_value(double x);
double exp_clamped(double x);

double dot(const Tensor& a, const Tensor& b);

/// y += alpha * x
void add_scaled(Tensor& y, const Tensor& x, double alpha);

/// out += a ⊙ b
void hadamard_add(Tensor& out, const Tensor& a, const Tensor& b);

Tensor concat(const std::vector<const Tensor*>& parts);

}  // namespace seglearn::core
