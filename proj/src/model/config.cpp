// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "model/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace seglearn::model {

namespace {

double parse_double_or(const std::string& key, const std::string& value) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        core::throw_parse("config: bad number for " + key + ": \"" + value + "\"");
    }
    return out;
}

long long parse_int_or(const std::string& key, const std::string& value) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        core::throw_parse("config: bad integer for " + key + ": \"" + value + "\"");
    }
    return out;
}

bool parse_bool_or(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    core::throw_parse("config: bad boolean for " + key + ": \"" + value + "\"");
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_string(Composition c) {
    return c == Composition::gcnn ? "gcnn" : "simple";
}

std::string to_string(ScorePartsMode m) {
    switch (m) {
        case ScorePartsMode::both: return "both";
        case ScorePartsMode::word_only: return "word";
        case ScorePartsMode::link_only: return "link";
    }
    return "both";
}

void TrainConfig::validate() const {
    if (d < 1 || H < 1) core::throw_invalid("config: d and H must be positive");
    if (alpha <= 0.0) core::throw_invalid("config: alpha must be positive");
    if (mu <= 0.0) core::throw_invalid("config: mu must be positive");
    if (lambda < 0.0) core::throw_invalid("config: lambda must be nonnegative");
    if (dropout < 0.0 || dropout >= 1.0) core::throw_invalid("config: dropout must lie in [0, 1)");
    if (w_max < 1) core::throw_invalid("config: w_max must be at least 1");
    if (beam_k < 1) core::throw_invalid("config: beam_k must be at least 1");
    if (batch_size < 1) core::throw_invalid("config: batch_size must be at least 1");
    if (epochs < 0) core::throw_invalid("config: epochs must be nonnegative");
    if (dev_fraction <= 0.0 || dev_fraction >= 1.0) {
        core::throw_invalid("config: dev_fraction must lie in (0, 1)");
    }
    if (min_count < 1) core::throw_invalid("config: min_count must be at least 1");
    if (init_scale <= 0.0) core::throw_invalid("config: init_scale must be positive");
}

void TrainConfig::set(const std::string& key, const std::string& value) {
    if (key == "d") d = static_cast<int>(parse_int_or(key, value));
    else if (key == "H") H = static_cast<int>(parse_int_or(key, value));
    else if (key == "alpha") alpha = parse_double_or(key, value);
    else if (key == "mu") mu = parse_double_or(key, value);
    else if (key == "lambda") lambda = parse_double_or(key, value);
    else if (key == "dropout" || key == "p") dropout = parse_double_or(key, value);
    else if (key == "w_max" || key == "w") w_max = static_cast<int>(parse_int_or(key, value));
    else if (key == "beam_k") beam_k = static_cast<int>(parse_int_or(key, value));
    else if (key == "batch_size") batch_size = static_cast<int>(parse_int_or(key, value));
    else if (key == "epochs") epochs = static_cast<int>(parse_int_or(key, value));
    else if (key == "seed") seed = static_cast<std::uint64_t>(parse_int_or(key, value));
    else if (key == "skip_long_gold") skip_long_gold = parse_bool_or(key, value);
    else if (key == "dev_fraction") dev_fraction = parse_double_or(key, value);
    else if (key == "min_count") min_count = static_cast<int>(parse_int_or(key, value));
    else if (key == "init_scale") init_scale = parse_double_or(key, value);
    else if (key == "stochastic_unk") stochastic_unk = parse_bool_or(key, value);
    else if (key == "freeze_embeddings") freeze_embeddings = parse_bool_or(key, value);
    else if (key == "pretrained_path") pretrained_path = value;
    else if (key == "single_norm_token") single_norm_token = parse_bool_or(key, value);
    else if (key == "composition") {
        if (value == "gcnn") composition = Composition::gcnn;
        else if (value == "simple") composition = Composition::simple;
        else core::throw_parse("config: composition must be gcnn or simple, got \"" + value + "\"");
    } else if (key == "score_parts") {
        if (value == "both") score_parts = ScorePartsMode::both;
        else if (value == "word") score_parts = ScorePartsMode::word_only;
        else if (value == "link") score_parts = ScorePartsMode::link_only;
        else core::throw_parse("config: score_parts must be both, word, or link, got \"" + value + "\"");
    } else {
        core::throw_parse("config: unknown key \"" + key + "\"");
    }
}

std::string TrainConfig::get(const std::string& key) const {
    std::ostringstream out;
    if (key == "d") out << d;
    else if (key == "H") out << H;
    else if (key == "alpha") out << alpha;
    else if (key == "mu") out << mu;
    else if (key == "lambda") out << lambda;
    else if (key == "dropout" || key == "p") out << dropout;
    else if (key == "w_max" || key == "w") out << w_max;
    else if (key == "beam_k") out << beam_k;
    else if (key == "batch_size") out << batch_size;
    else if (key == "epochs") out << epochs;
    else if (key == "seed") out << seed;
    else if (key == "skip_long_gold") out << (skip_long_gold ? "true" : "false");
    else if (key == "dev_fraction") out << dev_fraction;
    else if (key == "min_count") out << min_count;
    else if (key == "init_scale") out << init_scale;
    else if (key == "stochastic_unk") out << (stochastic_unk ? "true" : "false");
    else if (key == "freeze_embeddings") out << (freeze_embeddings ? "true" : "false");
    else if (key == "pretrained_path") out << pretrained_path;
    else if (key == "single_norm_token") out << (single_norm_token ? "true" : "false");
    else if (key == "composition") out << to_string(composition);
    else if (key == "score_parts") out << to_string(score_parts);
    else core::throw_parse("config: unknown key \"" + key + "\"");
    return out.str();
}

const std::vector<std::string>& TrainConfig::keys() {
    static const std::vector<std::string> k = {
        "d", "H", "alpha", "mu", "lambda", "dropout", "w_max", "beam_k",
        "batch_size", "epochs", "seed", "skip_long_gold", "dev_fraction",
        "min_count", "init_scale", "stochastic_unk", "freeze_embeddings",
        "pretrained_path", "composition", "score_parts", "single_norm_token",
    };
    return k;
}

std::string TrainConfig::to_text() const {
    std::ostringstream out;
    for (const std::string& key : keys()) out << key << "=" << get(key) << "\n";
    return out.str();
}

TrainConfig parse_config_text(const std::string& text, const std::string& source) {
    TrainConfig config;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            core::throw_parse(source + ":" + std::to_string(line_no) + ": expected key=value");
        }
        try {
            config.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
        } catch (const core::SegError& e) {
            core::throw_parse(source + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    config.validate();
    return config;
}

TrainConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) core::throw_io("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

}  // namespace seglearn::model
