// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#include "model/pipeline.hpp"

#include <sstream>

#include "core/error.hpp"
#include "decoder/beam.hpp"

namespace seglearn::model {

std::string segment_line(const Model& m, const std::string& line, int beam_width,
                         int max_word_len) {
    corpus::NormalizeOptions norm;
    norm.single_token = m.cfg.single_norm_token;
    corpus::Corpus parsed = corpus::parse_bakeoff_text(line, /*has_gold=*/false, "<line>", norm);
    if (parsed.sentences.empty()) return "";
    const corpus::Sentence& sentence = parsed.sentences.front();

    const int k = beam_width > 0 ? beam_width : m.cfg.beam_k;
    const int w = max_word_len > 0 ? max_word_len : m.cfg.w_max;
    auto ranked = decoder::decode(m.char_ids(sentence.tokens), m, k, w);
    return corpus::render_sentence(sentence, ranked.front().seg);
}

corpus::PrfResult evaluate_files(const std::string& gold_path, const std::string& pred_path) {
    corpus::Corpus gold = corpus::parse_bakeoff(gold_path, /*has_gold=*/true);
    corpus::Corpus pred = corpus::parse_bakeoff(pred_path, /*has_gold=*/true);
    if (gold.sentences.size() != pred.sentences.size()) {
        core::throw_invalid("evaluation inputs misaligned: " + std::to_string(gold.sentences.size()) +
                            " gold vs " + std::to_string(pred.sentences.size()) +
                            " predicted sentences");
    }
    std::vector<decoder::Segmentation> golds, preds;
    golds.reserve(gold.sentences.size());
    preds.reserve(pred.sentences.size());
    for (std::size_t i = 0; i < gold.sentences.size(); ++i) {
        if (gold.sentences[i].tokens.size() != pred.sentences[i].tokens.size()) {
            core::throw_invalid("evaluation inputs misaligned at line " + std::to_string(i + 1) +
                                ": " + std::to_string(gold.sentences[i].tokens.size()) + " vs " +
                                std::to_string(pred.sentences[i].tokens.size()) + " characters");
        }
        golds.push_back(*gold.sentences[i].gold);
        preds.push_back(*pred.sentences[i].gold);
    }
    return corpus::score_prf(golds, preds);
}

std::string format_eval_detail(const corpus::PrfResult& result) {
    std::ostringstream out;
    for (const auto& d : result.details) {
        if (d.correct == d.gold_words && d.correct == d.pred_words) continue;
        out << "line " << (d.index + 1) << ": gold " << d.gold_words << " pred " << d.pred_words
            << " correct " << d.correct << "\n";
    }
    return out.str();
}

}  // namespace seglearn::model
