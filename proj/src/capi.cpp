// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "seglearn/seglearn.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/error.hpp"
#include "corpus/corpus.hpp"
#include "model/config.hpp"
#include "model/model.hpp"
#include "model/model_io.hpp"
#include "model/pipeline.hpp"
#include "train/trainer.hpp"

using seglearn::core::ErrorKind;
using seglearn::core::SegError;

struct sl_config {
    seglearn::model::TrainConfig cfg;
};

struct sl_corpus {
    seglearn::corpus::Corpus data;
    bool single_norm_token = false;
};

struct sl_model {
    seglearn::model::Model model;
};

namespace {

thread_local std::string g_last_error;

sl_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::io: return SL_ERR_IO;
        case ErrorKind::invalid_argument: return SL_ERR_INVALID;
        case ErrorKind::parse: return SL_ERR_PARSE;
        case ErrorKind::internal: return SL_ERR_INTERNAL;
    }
    return SL_ERR_INTERNAL;
}

sl_status fail(sl_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
sl_status guarded(Fn&& fn) {
    try {
        fn();
        return SL_OK;
    } catch (const SegError& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SL_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SL_ERR_INTERNAL;
    }
}

char* copy_text(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.data(), text.size() + 1);
    return out;
}

sl_prf to_prf(const seglearn::corpus::PrfResult& r) {
    sl_prf out;
    out.precision = r.precision;
    out.recall = r.recall;
    out.f1 = r.f1;
    out.gold_words = r.gold_words;
    out.pred_words = r.pred_words;
    out.correct_words = r.correct;
    return out;
}

}  // namespace

extern "C" {

const char* sl_version(void) { return "1.0.0"; }

const char* sl_last_error(void) { return g_last_error.c_str(); }

sl_status sl_config_create(sl_config** out) {
    if (out == nullptr) return fail(SL_ERR_INVALID, "sl_config_create: out is NULL");
    return guarded([&] { *out = new sl_config(); });
}

sl_status sl_config_load(const char* path, sl_config** out) {
    if (path == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_config_load: NULL argument");
    }
    return guarded([&] {
        auto cfg = seglearn::model::load_config(path);
        *out = new sl_config{std::move(cfg)};
    });
}

sl_status sl_config_set(sl_config* config, const char* key, const char* value) {
    if (config == nullptr || key == nullptr || value == nullptr) {
        return fail(SL_ERR_INVALID, "sl_config_set: NULL argument");
    }
    return guarded([&] { config->cfg.set(key, value); });
}

sl_status sl_config_get(const sl_config* config, const char* key, char** out) {
    if (config == nullptr || key == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_config_get: NULL argument");
    }
    return guarded([&] { *out = copy_text(config->cfg.get(key)); });
}

void sl_config_free(sl_config* config) { delete config; }

sl_status sl_corpus_open(const char* path, int has_gold, int single_norm_token, sl_corpus** out) {
    if (path == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_corpus_open: NULL argument");
    }
    return guarded([&] {
        seglearn::corpus::NormalizeOptions norm;
        norm.single_token = single_norm_token != 0;
        auto corpus = seglearn::corpus::parse_bakeoff(path, has_gold != 0, norm);
        *out = new sl_corpus{std::move(corpus), norm.single_token};
    });
}

size_t sl_corpus_size(const sl_corpus* corpus) {
    return corpus == nullptr ? 0 : corpus->data.sentences.size();
}

sl_status sl_corpus_split(const sl_corpus* corpus, double fraction, sl_corpus** head,
                          sl_corpus** tail) {
    if (corpus == nullptr || head == nullptr || tail == nullptr) {
        return fail(SL_ERR_INVALID, "sl_corpus_split: NULL argument");
    }
    return guarded([&] {
        auto [h, t] = seglearn::corpus::split_train_dev(corpus->data, fraction);
        *head = new sl_corpus{std::move(h), corpus->single_norm_token};
        *tail = new sl_corpus{std::move(t), corpus->single_norm_token};
    });
}

void sl_corpus_free(sl_corpus* corpus) { delete corpus; }

sl_status sl_train(const sl_corpus* corpus, const sl_config* config, sl_epoch_callback on_epoch,
                   void* user, sl_train_summary* summary, sl_model** out) {
    if (corpus == nullptr || config == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_train: NULL argument");
    }
    return guarded([&] {
        seglearn::train::EpochCallback cb;
        if (on_epoch != nullptr) {
            cb = [on_epoch, user](const seglearn::train::EpochRecord& r) {
                sl_epoch_record rec;
                rec.epoch = r.epoch;
                rec.mean_hinge = r.mean_hinge;
                rec.violation_rate = r.violation_rate;
                rec.dev = to_prf(r.dev);
                rec.seconds = r.seconds;
                on_epoch(&rec, user);
            };
        }
        auto result = seglearn::train::train(corpus->data, config->cfg, cb);
        if (summary != nullptr) {
            *summary = sl_train_summary{};
            summary->epochs_run = static_cast<int>(result.report.epochs.size());
            summary->trained_sentences = result.report.trained_sentences;
            summary->skipped_long_gold = result.report.skipped_long_gold;
            summary->pretrained_loaded = result.report.pretrained_loaded ? 1 : 0;
            summary->pretrained_matched = result.report.pretrained.matched;
            summary->pretrained_missed = result.report.pretrained.missed;
            summary->pretrained_extraneous = result.report.pretrained.extraneous;
            if (!result.report.epochs.empty()) {
                summary->final_dev = to_prf(result.report.epochs.back().dev);
            }
        }
        *out = new sl_model{std::move(result.model)};
    });
}

sl_status sl_model_save(const sl_model* model, const char* path) {
    if (model == nullptr || path == nullptr) {
        return fail(SL_ERR_INVALID, "sl_model_save: NULL argument");
    }
    return guarded([&] { seglearn::model::save_model(model->model, path); });
}

sl_status sl_model_load(const char* path, sl_model** out) {
    if (path == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_model_load: NULL argument");
    }
    return guarded([&] { *out = new sl_model{seglearn::model::load_model(path)}; });
}

sl_status sl_model_describe(const sl_model* model, char** out) {
    if (model == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_model_describe: NULL argument");
    }
    return guarded([&] { *out = copy_text(seglearn::model::describe_model(model->model)); });
}

void sl_model_free(sl_model* model) { delete model; }

sl_status sl_segment_line(const sl_model* model, const char* utf8_line, int beam,
                          int max_word_len, char** out) {
    if (model == nullptr || utf8_line == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_segment_line: NULL argument");
    }
    return guarded([&] {
        *out = copy_text(seglearn::model::segment_line(model->model, utf8_line, beam, max_word_len));
    });
}

sl_status sl_eval_model(const sl_model* model, const sl_corpus* gold_corpus, int beam,
                        int max_word_len, sl_prf* out) {
    if (model == nullptr || gold_corpus == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_eval_model: NULL argument");
    }
    return guarded([&] {
        const int k = beam > 0 ? beam : model->model.cfg.beam_k;
        const int w = max_word_len > 0 ? max_word_len : model->model.cfg.w_max;
        *out = to_prf(seglearn::train::evaluate(model->model, gold_corpus->data, k, w));
    });
}

sl_status sl_eval_files(const char* gold_path, const char* pred_path, sl_prf* out, char** detail) {
    if (gold_path == nullptr || pred_path == nullptr || out == nullptr) {
        return fail(SL_ERR_INVALID, "sl_eval_files: NULL argument");
    }
    return guarded([&] {
        auto result = seglearn::model::evaluate_files(gold_path, pred_path);
        *out = to_prf(result);
        if (detail != nullptr) *detail = copy_text(seglearn::model::format_eval_detail(result));
    });
}

void sl_text_free(char* text) { delete[] text; }

}  // extern "C"
