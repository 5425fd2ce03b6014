// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "model/model_io.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace seglearn::model {

namespace {

void write_f32_le(std::ostream& out, float v) {
    const auto bits = std::bit_cast<std::uint32_t>(v);
    char bytes[4] = {
        static_cast<char>(bits & 0xFF),
        static_cast<char>((bits >> 8) & 0xFF),
        static_cast<char>((bits >> 16) & 0xFF),
        static_cast<char>((bits >> 24) & 0xFF),
    };
    out.write(bytes, 4);
}

float read_f32_le(std::istream& in, const std::string& source) {
    unsigned char bytes[4];
    if (!in.read(reinterpret_cast<char*>(bytes), 4)) {
        core::throw_parse(source + ": truncated float payload");
    }
    const std::uint32_t bits = static_cast<std::uint32_t>(bytes[0]) |
                               (static_cast<std::uint32_t>(bytes[1]) << 8) |
                               (static_cast<std::uint32_t>(bytes[2]) << 16) |
                               (static_cast<std::uint32_t>(bytes[3]) << 24);
    return std::bit_cast<float>(bits);
}

std::string expect_line(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) core::throw_parse(source + ": truncated manifest");
    return line;
}

long long field_int(const std::string& line, const std::string& key, const std::string& source) {
    std::istringstream fields(line);
    std::string name, value;
    if (!(fields >> name >> value) || name != key) {
        core::throw_parse(source + ": expected \"" + key + " <value>\", got \"" + line + "\"");
    }
    try {
        return std::stoll(value);
    } catch (...) {
        core::throw_parse(source + ": bad integer in \"" + line + "\"");
    }
}

std::string field_word(const std::string& line, const std::string& key, const std::string& source) {
    std::istringstream fields(line);
    std::string name, value;
    if (!(fields >> name >> value) || name != key) {
        core::throw_parse(source + ": expected \"" + key + " <value>\", got \"" + line + "\"");
    }
    return value;
}

}  // namespace

void save_model(const Model& m, std::ostream& out) {
    out << "seglearn-model " << kModelFormatVersion << "\n";
    out << "d " << m.cfg.d << "\n";
    out << "H " << m.cfg.H << "\n";
    out << "w_max " << m.cfg.w_max << "\n";
    out << "gcnn_max_len " << m.gcnn_max_len << "\n";
    out << "beam_k " << m.cfg.beam_k << "\n";
    out << "composition " << to_string(m.cfg.composition) << "\n";
    out << "score_parts " << to_string(m.cfg.score_parts) << "\n";
    out << "single_norm_token " << (m.cfg.single_norm_token ? 1 : 0) << "\n";
    out << "vocab " << m.vocab.size() << "\n";
    for (int i = 0; i < m.vocab.size(); ++i) out << m.vocab.token(i) << "\n";
    out << "params " << m.store->size() << "\n";
    for (std::size_t i = 0; i < m.store->size(); ++i) {
        const core::Parameter& p = m.store->at(i);
        out << p.name << " " << p.value.rank();
        for (int dim : p.value.shape) out << " " << dim;
        out << "\n";
    }
    out << "payload\n";
    for (std::size_t i = 0; i < m.store->size(); ++i) {
        const core::Parameter& p = m.store->at(i);
        for (double v : p.value.data) write_f32_le(out, static_cast<float>(v));
    }
}

void save_model(const Model& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) core::throw_io("cannot write model file: " + path);
    save_model(m, out);
    out.flush();
    if (!out) core::throw_io("failed while writing model file: " + path);
}

Model load_model(std::istream& in, const std::string& source) {
    {
        std::string header = expect_line(in, source);
        std::istringstream fields(header);
        std::string magic;
        int version = -1;
        if (!(fields >> magic >> version) || magic != "seglearn-model") {
            core::throw_parse(source + ": not a seglearn model file");
        }
        if (version != kModelFormatVersion) {
            core::throw_parse(source + ": manifest version " + std::to_string(version) +
                              " unsupported (expected " + std::to_string(kModelFormatVersion) + ")");
        }
    }

    TrainConfig cfg;
    cfg.d = static_cast<int>(field_int(expect_line(in, source), "d", source));
    cfg.H = static_cast<int>(field_int(expect_line(in, source), "H", source));
    cfg.w_max = static_cast<int>(field_int(expect_line(in, source), "w_max", source));
    const int gcnn_max_len =
        static_cast<int>(field_int(expect_line(in, source), "gcnn_max_len", source));
    cfg.beam_k = static_cast<int>(field_int(expect_line(in, source), "beam_k", source));
    cfg.set("composition", field_word(expect_line(in, source), "composition", source));
    cfg.set("score_parts", field_word(expect_line(in, source), "score_parts", source));
    cfg.single_norm_token =
        field_int(expect_line(in, source), "single_norm_token", source) != 0;

    const auto vocab_count = field_int(expect_line(in, source), "vocab", source);
    if (vocab_count < 3) core::throw_parse(source + ": vocabulary too small");
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<std::size_t>(vocab_count));
    for (long long i = 0; i < vocab_count; ++i) tokens.push_back(expect_line(in, source));
    emb::CharVocab vocab = emb::CharVocab::from_tokens(tokens);

    Model m = Model::init(std::move(vocab), cfg, gcnn_max_len);

    const auto param_count = field_int(expect_line(in, source), "params", source);
    if (static_cast<std::size_t>(param_count) != m.store->size()) {
        core::throw_parse(source + ": manifest version " + std::to_string(kModelFormatVersion) +
                          " expects " + std::to_string(m.store->size()) + " parameters, file has " +
                          std::to_string(param_count));
    }
    for (std::size_t i = 0; i < m.store->size(); ++i) {
        const core::Parameter& p = m.store->at(i);
        std::istringstream fields(expect_line(in, source));
        std::string name;
        int rank = 0;
        if (!(fields >> name >> rank) || name != p.name || rank != p.value.rank()) {
            core::throw_parse(source + ": manifest version " + std::to_string(kModelFormatVersion) +
                              " parameter mismatch at " + p.name);
        }
        for (int r = 0; r < rank; ++r) {
            int dim = 0;
            if (!(fields >> dim) || dim != p.value.shape[static_cast<std::size_t>(r)]) {
                core::throw_parse(source + ": shape mismatch for parameter " + p.name);
            }
        }
    }
    if (expect_line(in, source) != "payload") {
        core::throw_parse(source + ": missing payload marker");
    }
    for (std::size_t i = 0; i < m.store->size(); ++i) {
        core::Parameter& p = m.store->at(i);
        for (double& v : p.value.data) v = static_cast<double>(read_f32_le(in, source));
        if (!p.value.all_finite()) {
            core::throw_parse(source + ": non-finite values in parameter " + p.name);
        }
    }
    return m;
}

Model load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) core::throw_io("cannot open model file: " + path);
    return load_model(in, path);
}

std::string describe_model(const Model& m) {
    std::ostringstream out;
    out << "format version  " << kModelFormatVersion << "\n";
    out << "d               " << m.cfg.d << "\n";
    out << "H               " << m.cfg.H << "\n";
    out << "w_max           " << m.cfg.w_max << "\n";
    out << "gcnn_max_len    " << m.gcnn_max_len << "\n";
    out << "beam_k          " << m.cfg.beam_k << "\n";
    out << "composition     " << to_string(m.cfg.composition) << "\n";
    out << "score_parts     " << to_string(m.cfg.score_parts) << "\n";
    out << "vocabulary      " << m.vocab.size() << " tokens\n";
    out << "parameters:\n";
    std::size_t total = 0;
    for (std::size_t i = 0; i < m.store->size(); ++i) {
        const core::Parameter& p = m.store->at(i);
        out << "  " << p.name << "  " << p.value.shape_str() << "  " << p.value.size() << "\n";
        total += p.value.data.size();
    }
    out << "total           " << total << " values (" << total * 4 << " payload bytes)\n";
    return out.str();
}

}  // namespace seglearn::model
