// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace seglearn::model {

enum class Composition { gcnn, simple };
enum class ScorePartsMode { both, word_only, link_only };

/// Every training knob, with the stock hyper-parameter defaults. Loadable
/// from a flat key=value file; unknown keys are an error so typos fail fast.
struct TrainConfig {
    int d = 50;                 // character embedding size
    int H = 50;                 // hidden unit number
    double alpha = 0.2;         // initial learning rate
    double mu = 0.2;            // margin loss discount
    double lambda = 1e-6;       // l2 regularization
    double dropout = 0.2;       // input-layer dropout rate
    int w_max = 4;              // maximum word length (alias key: w)
    int beam_k = 4;             // beam size
    int batch_size = 16;
    int epochs = 30;
    std::uint64_t seed = 42;
    bool skip_long_gold = true;     // drop sentences whose gold words exceed w_max
    double dev_fraction = 0.1;      // tail share held out for development
    int min_count = 1;              // vocabulary frequency cutoff
    double init_scale = 0.05;       // uniform parameter init half-width
    bool stochastic_unk = false;    // train <UNK> by downgrading singletons at 10%
    bool freeze_embeddings = false;
    std::string pretrained_path;    // word2vec text vectors, empty = none
    Composition composition = Composition::gcnn;
    ScorePartsMode score_parts = ScorePartsMode::both;
    bool single_norm_token = false;  // collapse <ENG>/<NUM> into one token

    void validate() const;

    /// Applies one key=value assignment; throws parse errors on unknown keys
    /// or unparsable values.
    void set(const std::string& key, const std::string& value);

    std::string get(const std::string& key) const;

    /// All keys in canonical order, for serialization and introspection.
    static const std::vector<std::string>& keys();

    std::string to_text() const;
};

TrainConfig load_config(const std::string& path);
TrainConfig parse_config_text(const std::string& text, const std::string& source);

std::string to_string(Composition c);
std::string to_string(ScorePartsMode m);

}  // namespace seglearn::model
