// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "emb/embedding.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace seglearn::emb {

core::Tensor EmbeddingMatrix::lookup(int id) const {
    const core::Tensor& table = table_->value;
    core::Tensor out({dim_});
    for (int r = 0; r < dim_; ++r) out[r] = table.at(r, id);
    return out;
}

void EmbeddingMatrix::add_column_grad(int id, const core::Tensor& g) {
    core::Tensor& grad = table_->grad;
    for (int r = 0; r < dim_; ++r) grad.at(r, id) += g[r];
}

void EmbeddingMatrix::set_column(int id, const std::vector<double>& values) {
    core::Tensor& table = table_->value;
    for (int r = 0; r < dim_; ++r) table.at(r, id) = values[static_cast<std::size_t>(r)];
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(field);
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

PretrainedReport load_pretrained_text(std::string_view text, const CharVocab& vocab,
                                      EmbeddingMatrix& matrix, const std::string& source) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) core::throw_parse(source + ": empty pretrained vector file");
    ++line_no;
    {
        std::vector<std::string> header = split_fields(line);
        double count = 0, dim = 0;
        if (header.size() != 2 || !parse_double(header[0], count) || !parse_double(header[1], dim)) {
            core::throw_parse(source + ":1: expected header \"count dim\"");
        }
        if (static_cast<int>(dim) != matrix.dim()) {
            core::throw_parse(source + ":1: vector dimension " + header[1] + " does not match d=" +
                              std::to_string(matrix.dim()));
        }
    }

    PretrainedReport report;
    std::vector<bool> seen(static_cast<std::size_t>(vocab.size()), false);
    std::vector<double> values(static_cast<std::size_t>(matrix.dim()));
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields = split_fields(line);
        if (fields.size() != static_cast<std::size_t>(matrix.dim()) + 1) {
            core::throw_parse(source + ":" + std::to_string(line_no) + ": expected token plus " +
                              std::to_string(matrix.dim()) + " values, got " +
                              std::to_string(fields.size()) + " fields");
        }
        for (int i = 0; i < matrix.dim(); ++i) {
            if (!parse_double(fields[static_cast<std::size_t>(i) + 1], values[static_cast<std::size_t>(i)])) {
                core::throw_parse(source + ":" + std::to_string(line_no) + ": bad float \"" +
                                  fields[static_cast<std::size_t>(i) + 1] + "\"");
            }
        }
        if (!vocab.contains(fields[0])) {
            ++report.extraneous;
            continue;
        }
        int id = vocab.id(fields[0]);
        if (!seen[static_cast<std::size_t>(id)]) {
            seen[static_cast<std::size_t>(id)] = true;
            ++report.matched;
        }
        matrix.set_column(id, values);
    }
    report.missed = vocab.size() - report.matched;
    return report;
}

PretrainedReport load_pretrained(const std::string& path, const CharVocab& vocab,
                                 EmbeddingMatrix& matrix) {
    std::ifstream in(path, std::ios::binary);
    if (!in) core::throw_io("cannot open pretrained vector file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_pretrained_text(buf.str(), vocab, matrix, path);
}

core::Tensor dropout_input(const core::Tensor& x, double rate, bool training, core::Rng& rng,
                           core::Tensor* mask_out) {
    if (rate < 0.0 || rate >= 1.0) core::throw_invalid("dropout rate must lie in [0, 1)");
    if (!training || rate == 0.0) {
        if (mask_out != nullptr) *mask_out = core::Tensor::full(x.shape, 1.0);
        return x;
    }
    const double keep_scale = 1.0 / (1.0 - rate);
    core::Tensor out = x;
    core::Tensor mask = core::Tensor::zeros(x.shape);
    for (int i = 0; i < x.size(); ++i) {
        if (rng.next_unit() < rate) {
            out[i] = 0.0;
        } else {
            out[i] *= keep_scale;
            mask[i] = keep_scale;
        }
    }
    if (mask_out != nullptr) *mask_out = std::move(mask);
    return out;
}

}  // namespace seglearn::emb
