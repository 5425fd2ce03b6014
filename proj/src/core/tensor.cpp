// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "core/tensor.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>

#include "core/error.hpp"

namespace seglearn::core {

namespace {

std::size_t checked_numel(const std::vector<int>& shape) {
    std::size_t n = 1;
    for (int d : shape) {
        if (d <= 0) throw_invalid("tensor shape must be positive, got " + std::to_string(d));
        n *= static_cast<std::size_t>(d);
    }
    return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> s) : shape(std::move(s)), data(checked_numel(shape), 0.0) {}

Tensor Tensor::vec(std::initializer_list<double> values) {
    if (values.size() == 0) throw_invalid("rank-1 tensor must not be empty");
    Tensor t;
    t.shape = {static_cast<int>(values.size())};
    t.data = values;
    return t;
}

Tensor Tensor::full(std::vector<int> s, double v) {
    Tensor t(std::move(s));
    t.fill(v);
    return t;
}

int Tensor::rows() const {
    if (rank() != 2) throw_invalid("rows() requires rank-2 tensor, shape " + shape_str());
    return shape[0];
}

int Tensor::cols() const {
    if (rank() != 2) throw_invalid("cols() requires rank-2 tensor, shape " + shape_str());
    return shape[1];
}

void Tensor::fill(double v) {
    for (double& x : data) x = v;
}

bool Tensor::all_finite() const {
    for (double x : data) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

std::string Tensor::shape_str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) out << "x";
        out << shape[i];
    }
    out << "]";
    return out.str();
}

Tensor affine(const Tensor& W, const Tensor& x, const Tensor* b) {
    if (W.rank() != 2 || x.rank() != 1 || W.cols() != x.size()) {
        throw_invalid("affine: W " + W.shape_str() + " does not conform with x " + x.shape_str());
    }
    const int m = W.rows();
    const int n = W.cols();
    if (b != nullptr && (b->rank() != 1 || b->size() != m)) {
        throw_invalid("affine: bias " + b->shape_str() + " does not conform with W " + W.shape_str());
    }
    Tensor y({m});
    for (int i = 0; i < m; ++i) {
        const double* row = W.data.data() + static_cast<std::size_t>(i) * n;
        double acc = b ? (*b)[i] : 0.0;
        for (int j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

void affine_backward(const Tensor& W, const Tensor& x, const Tensor& dy,
                     Tensor* dW, Tensor* dx, Tensor* db) {
    const int m = W.rows();
    const int n = W.cols();
    if (dy.size() != m || x.size() != n) {
        throw_invalid("affine_backward: dy " + dy.shape_str() + " / x " + x.shape_str() +
                      " do not conform with W " + W.shape_str());
    }
    if (dW != nullptr) {
        for (int i = 0; i < m; ++i) {
            double g = dy[i];
            if (g == 0.0) continue;
            double* row = dW->data.data() + static_cast<std::size_t>(i) * n;
            for (int j = 0; j < n; ++j) row[j] += g * x[j];
        }
    }
    if (dx != nullptr) {
        for (int i = 0; i < m; ++i) {
            double g = dy[i];
            if (g == 0.0) continue;
            const double* row = W.data.data() + static_cast<std::size_t>(i) * n;
            for (int j = 0; j < n; ++j) (*dx)[j] += g * row[j];
        }
    }
    if (db != nullptr) {
        for (int i = 0; i < m; ++i) (*db)[i] += dy[i];
    }
}

namespace {
constexpr double kExpClamp = 50.0;
}

double exp_clamped(double x) {
    if (x > kExpClamp) x = kExpClamp;
    if (x < -kExpClamp) x = -kExpClamp;
    return std::exp(x);
}

double sigmoid(double x) {
    if (x > kExpClamp) x = kExpClamp;
    if (x < -kExpClamp) x = -kExpClamp;
    double s = 1.0 / (1.0 + std::exp(-x));
    // keep strictly inside (0,1); at the clamp edge 1/(1+e^-50) rounds to 1.0
    if (s >= 1.0) s = std::nextafter(1.0, 0.0);
    if (s <= 0.0) s = std::numeric_limits<double>::min();
    return s;
}

double tanh_value(double x) { return std::tanh(x); }

Tensor elementwise(Unary f, const Tensor& x) {
    Tensor y = x;
    switch (f) {
        case Unary::sigmoid:
            for (double& v : y.data) v = sigmoid(v);
            break;
        case Unary::tanh:
            for (double& v : y.data) v = std::tanh(v);
            break;
        case Unary::exp:
            for (double& v : y.data) v = exp_clamped(v);
            break;
    }
    return y;
}

double dot(const Tensor& a, const Tensor& b) {
    if (a.size() != b.size()) {
        throw_invalid("dot: " + a.shape_str() + " vs " + b.shape_str());
    }
    double acc = 0.0;
    for (int i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

void add_scaled(Tensor& y, const Tensor& x, double alpha) {
    if (y.size() != x.size()) {
        throw_invalid("add_scaled: " + y.shape_str() + " vs " + x.shape_str());
    }
    for (int i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void hadamard_add(Tensor& out, const Tensor& a, const Tensor& b) {
    if (out.size() != a.size() || a.size() != b.size()) {
        throw_invalid("hadamard_add: size mismatch");
    }
    for (int i = 0; i < a.size(); ++i) out[i] += a[i] * b[i];
}

Tensor concat(const std::vector<const Tensor*>& parts) {
    int total = 0;
    for (const Tensor* p : parts) total += p->size();
    Tensor out({total});
    int pos = 0;
    for (const Tensor* p : parts) {
        for (int i = 0; i < p->size(); ++i) out[pos++] = (*p)[i];
    }
    return out;
}

}  // namespace seglearn::core
