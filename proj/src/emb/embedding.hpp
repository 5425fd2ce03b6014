// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "core/param_store.hpp"
#include "core/rng.hpp"
#include "emb/vocab.hpp"

namespace seglearn::emb {

/// View over the d x |D| embedding table registered in a ParamStore; column
/// id holds the vector for character id.
class EmbeddingMatrix {
public:
    EmbeddingMatrix() = default;
    EmbeddingMatrix(core::Parameter* table, int dim) : table_(table), dim_(dim) {}

    int dim() const { return dim_; }
    int vocab_size() const { return table_->value.cols(); }
    core::Parameter& parameter() { return *table_; }
    const core::Parameter& parameter() const { return *table_; }

    /// Copies column `id` into a fresh vector.
    core::Tensor lookup(int id) const;

    /// Accumulates a gradient into column `id`.
    void add_column_grad(int id, const core::Tensor& g);

    /// Overwrites column `id` with the given values.
    void set_column(int id, const std::vector<double>& values);

private:
    core::Parameter* table_ = nullptr;
    int dim_ = 0;
};

struct PretrainedReport {
    long matched = 0;     // vocabulary entries overwritten from the file
    long missed = 0;      // vocabulary entries absent from the file
    long extraneous = 0;  // file rows for tokens outside the vocabulary
};

/// Loads word2vec text vectors ("count dim" header, then one token plus dim
/// floats per line) into the columns of matching vocabulary entries.
/// Dimension mismatches and malformed lines raise parse errors naming the
/// line number.
PretrainedReport load_pretrained(const std::string& path, const CharVocab& vocab,
                                 EmbeddingMatrix& matrix);

PretrainedReport load_pretrained_text(std::string_view text, const CharVocab& vocab,
                                      EmbeddingMatrix& matrix, const std::string& source);

/// Inverted dropout over one input vector: while training, each element is
/// zeroed with probability `rate` and survivors are scaled by 1/(1-rate);
/// at inference the input passes through untouched. If `mask_out` is given
/// it receives the per-element scale factors applied (needed by backprop).
core::Tensor dropout_input(const core::Tensor& x, double rate, bool training, core::Rng& rng,
                           core::Tensor* mask_out = nullptr);

}  // namespace seglearn::emb
