/* Copyright (c) 2026 the seglearn authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Public C API of the seglearn word segmentation library.
 *
 * All objects are opaque handles created and destroyed through these
 * functions. Calls return sl_status; on failure sl_last_error() gives a
 * thread-local description of what went wrong. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * sl_text_free().
 */

#ifndef SEGLEARN_SEGLEARN_H
#define SEGLEARN_SEGLEARN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
    SL_OK = 0,
    SL_ERR_INTERNAL = 1, /* bugs, guard trips */
    SL_ERR_IO = 2,       /* missing or unwritable files */
    SL_ERR_INVALID = 3,  /* bad arguments or contract violations */
    SL_ERR_PARSE = 4     /* malformed corpus, config, or model data */
} sl_status;

typedef struct sl_config sl_config;  /* training configuration */
typedef struct sl_corpus sl_corpus;  /* parsed corpus */
typedef struct sl_model sl_model;    /* trained or loaded model */

typedef struct sl_prf {
    double precision;
    double recall;
    double f1;
    long gold_words;
    long pred_words;
    long correct_words;
} sl_prf;

typedef struct sl_epoch_record {
    int epoch;             /* 1-based */
    double mean_hinge;     /* averaged over trained sentences */
    double violation_rate; /* share of sentences with a margin violation */
    sl_prf dev;            /* development-set scores after this epoch */
    double seconds;        /* wall time of the epoch */
} sl_epoch_record;

typedef struct sl_train_summary {
    int epochs_run;
    long trained_sentences;
    long skipped_long_gold;    /* gold sentences dropped for overlong words */
    int pretrained_loaded;     /* nonzero when vectors were loaded */
    long pretrained_matched;
    long pretrained_missed;
    long pretrained_extraneous;
    sl_prf final_dev;          /* zeroed when epochs_run == 0 */
} sl_train_summary;

/* Called after every epoch during sl_train. May be NULL. */
typedef void (*sl_epoch_callback)(const sl_epoch_record* record, void* user);

const char* sl_version(void);

/* Description of the most recent failure on this thread. Never NULL. */
const char* sl_last_error(void);

/* ---- configuration ------------------------------------------------- */

sl_status sl_config_create(sl_config** out);
sl_status sl_config_load(const char* path, sl_config** out);
/* Keys are the flat key=value names (d, H, alpha, mu, lambda, dropout,
 * w_max, beam_k, batch_size, epochs, seed, ...). */
sl_status sl_config_set(sl_config* config, const char* key, const char* value);
sl_status sl_config_get(const sl_config* config, const char* key, char** out);
void sl_config_free(sl_config* config);

/* ---- corpus -------------------------------------------------------- */

/* Reads a UTF-8 bakeoff file; has_gold nonzero means words are
 * whitespace-separated on each line. single_norm_token collapses letter and
 * digit runs into one token class instead of <ENG>/<NUM>. */
sl_status sl_corpus_open(const char* path, int has_gold, int single_norm_token,
                         sl_corpus** out);
size_t sl_corpus_size(const sl_corpus* corpus);
/* First floor(fraction*N) sentences vs the rest, order preserved. */
sl_status sl_corpus_split(const sl_corpus* corpus, double fraction, sl_corpus** head,
                          sl_corpus** tail);
void sl_corpus_free(sl_corpus* corpus);

/* ---- training ------------------------------------------------------ */

/* Trains a model on a gold corpus. The corpus is split internally into
 * train/dev parts per the config's dev_fraction. summary and callback may
 * be NULL. Deterministic for a fixed config. */
sl_status sl_train(const sl_corpus* corpus, const sl_config* config,
                   sl_epoch_callback on_epoch, void* user, sl_train_summary* summary,
                   sl_model** out);

/* ---- models -------------------------------------------------------- */

sl_status sl_model_save(const sl_model* model, const char* path);
sl_status sl_model_load(const char* path, sl_model** out);
/* Manifest summary: dimensions, vocabulary size, parameter table. */
sl_status sl_model_describe(const sl_model* model, char** out);
void sl_model_free(sl_model* model);

/* ---- inference and evaluation --------------------------------------- */

/* Segments one raw line; the result joins words with two spaces and
 * restores the original surface of normalized runs. beam/max_word_len of 0
 * use the model defaults. Safe to call concurrently on one model. */
sl_status sl_segment_line(const sl_model* model, const char* utf8_line, int beam,
                          int max_word_len, char** out);

/* Decodes every sentence of a gold corpus and scores it. */
sl_status sl_eval_model(const sl_model* model, const sl_corpus* gold_corpus, int beam,
                        int max_word_len, sl_prf* out);

/* Scores a prediction file against a gold file. detail (optional) receives
 * a per-line listing of imperfect sentences. */
sl_status sl_eval_files(const char* gold_path, const char* pred_path, sl_prf* out,
                        char** detail);

void sl_text_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* SEGLEARN_SEGLEARN_H */
