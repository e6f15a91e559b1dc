// Copyright 2026 The voicecomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "voicecomp/eval.hpp"

#include "voicecomp/error.hpp"
#include "voicecomp/metrics.hpp"

namespace voicecomp {
namespace {

std::string missing(std::size_t index, std::string_view field) {
  return "record " + std::to_string(index + 1) + ": missing field '" + std::string(field) + "'";
}

std::vector<PunctClass> project_all(const std::vector<PunctLabel>& labels) {
  std::vector<PunctClass> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(project(l));
  return out;
}

MetricReport asr_report(const std::vector<CorpusRecord>& corpus, const EvalSystem& system) {
  AlignmentOps total;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& rec = corpus[i];
    if (!rec.gold) throw DataError(missing(i, "gold"));
    const auto ref = scoring_words(*rec.gold, system.normalize_wer);
    const auto hyp = system.oracle ? ref : scoring_words(rec.transcript.raw_text(), system.normalize_wer);
    total += align(ref, hyp);
  }
  const auto w = wer_wrr(total);
  MetricTable t{"asr", "Word error rate and word recognition rate", {"WER", "WRR"}, {}};
  t.rows.push_back({system.name, {w.wer, w.wrr}});
  return {{t}};
}

MetricReport disfluency_report(const std::vector<CorpusRecord>& corpus, const EvalSystem& system) {
  const RuleDisfluencyTagger rules;
  const DisfluencyTagger& tagger = system.disfluency ? *system.disfluency : rules;
  std::vector<std::vector<DisfluencyTag>> gold;
  std::vector<std::vector<DisfluencyTag>> pred;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& rec = corpus[i];
    if (!rec.disfluency_tags) throw DataError(missing(i, "disfluency_tags"));
    std::vector<DisfluencyTag> g;
    for (const auto& name : *rec.disfluency_tags) {
      const auto tag = parse_disfluency_tag(name);
      if (!tag) throw DataError("record " + std::to_string(i + 1) + ": unknown disfluency tag '" + name + "'");
      g.push_back(*tag);
    }
    pred.push_back(system.oracle ? g : tagger.tag(rec.transcript.tokens()));
    gold.push_back(std::move(g));
  }
  return {{disfluency_table({{system.name, score_disfluency(gold, pred)}})}};
}

MetricReport punct_report(const std::vector<CorpusRecord>& corpus, const EvalSystem& system) {
  std::vector<std::string> gold;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!corpus[i].gold) throw DataError(missing(i, "gold"));
    gold.push_back(*corpus[i].gold);
  }
  const PunctTaggerModel* model = nullptr;
  if (!system.oracle) model = system.punct_model ? system.punct_model : &default_punct_model();
  return {{punctuation_table({{system.name, score_punctuation(gold, model)}})}};
}

MetricReport compose_report(const std::vector<CorpusRecord>& corpus, const EvalSystem& system) {
  if (!system.oracle && !system.compose) throw ContractError("run_eval: compose stage needs a compose function");
  std::vector<std::vector<Words>> refs;
  std::vector<Words> hyps;
  double r1 = 0.0;
  double r2 = 0.0;
  double rl = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& rec = corpus[i];
    if (!rec.gold) throw DataError(missing(i, "gold"));
    const auto ref = scoring_words(*rec.gold, false);
    const auto hyp = system.oracle ? ref : scoring_words(system.compose(rec), false);
    r1 += rouge(ref, hyp, RougeVariant::kR1).f1;
    r2 += rouge(ref, hyp, RougeVariant::kR2).f1;
    rl += rouge(ref, hyp, RougeVariant::kRL).f1;
    refs.push_back({ref});
    hyps.push_back(hyp);
  }
  const double n = corpus.empty() ? 1.0 : static_cast<double>(corpus.size());
  MetricTable t{"compose", "Composition quality against gold outputs", {"BLEU", "ROUGE-1", "ROUGE-2", "ROUGE-L"}, {}};
  t.rows.push_back({system.name, {corpus.empty() ? 0.0 : corpus_bleu(refs, hyps), r1 / n, r2 / n, rl / n}});
  return {{t}};
}

}  // namespace

std::string_view to_string(EvalStage stage) {
  switch (stage) {
    case EvalStage::kAsr: return "asr";
    case EvalStage::kDisfluency: return "disfluency";
    case EvalStage::kPunct: return "punct";
    case EvalStage::kCompose: return "compose";
  }
  return {};
}

EvalStage parse_eval_stage(std::string_view name) {
  if (name == "asr") return EvalStage::kAsr;
  if (name == "disfluency") return EvalStage::kDisfluency;
  if (name == "punct") return EvalStage::kPunct;
  if (name == "compose") return EvalStage::kCompose;
  throw DataError("unknown evaluation stage '" + std::string(name) + "' (expected asr|disfluency|punct|compose)");
}

MetricReport run_eval(const std::vector<CorpusRecord>& corpus, EvalStage stage, const EvalSystem& system) {
  switch (stage) {
    case EvalStage::kAsr: return asr_report(corpus, system);
    case EvalStage::kDisfluency: return disfluency_report(corpus, system);
    case EvalStage::kPunct: return punct_report(corpus, system);
    case EvalStage::kCompose: return compose_report(corpus, system);
  }
  throw ContractError("run_eval: unknown stage");
}

PunctScores score_punctuation(const std::vector<std::string>& gold_texts, const PunctTaggerModel* model) {
  std::vector<std::vector<PunctClass>> gold;
  std::vector<std::vector<PunctClass>> pred;
  for (const auto& text : gold_texts) {
    const auto ex = extract_punct_labels(text);
    gold.push_back(project_all(ex.labels));
    if (model == nullptr) {
      pred.push_back(gold.back());
    } else {
      pred.push_back(project_all(restore_punctuation(make_tokens(ex.tokens), *model)));
    }
  }
  PunctScores s;
  s.sentence = tag_prf(gold, pred, std::set{PunctClass::kPeriod, PunctClass::kQuestionMark});
  s.comma = tag_prf(gold, pred, std::set{PunctClass::kComma});
  s.period = tag_prf(gold, pred, std::set{PunctClass::kPeriod});
  s.question = tag_prf(gold, pred, std::set{PunctClass::kQuestionMark});
  s.capitalization = tag_prf(gold, pred, std::set{PunctClass::kCapitalization});
  return s;
}

MetricTable punctuation_table(const std::vector<std::pair<std::string, PunctScores>>& rows) {
  MetricTable t{"punctuation", "Punctuation restoration (Precision / Recall / F1)",
                {"Sentence", "Comma", "Period", "Question"}, {}};
  for (const auto& [name, s] : rows) t.rows.push_back({name, {s.sentence, s.comma, s.period, s.question}});
  return t;
}

DisfluencyScores score_disfluency(const std::vector<std::vector<DisfluencyTag>>& gold,
                                  const std::vector<std::vector<DisfluencyTag>>& predicted) {
  using T = DisfluencyTag;
  DisfluencyScores s;
  s.repetition = tag_prf(gold, predicted, std::set{T::kRepetition});
  s.replacement = tag_prf(gold, predicted, std::set{T::kReplacement});
  s.restart = tag_prf(gold, predicted, std::set{T::kRestart});
  s.disfluent = tag_prf(gold, predicted, std::set{T::kRepetition, T::kReplacement, T::kRestart});
  return s;
}

MetricTable disfluency_table(const std::vector<std::pair<std::string, DisfluencyScores>>& rows) {
  MetricTable t{"disfluency", "Disfluency detection (Precision / Recall / F1)",
                {"Repetition", "Replacement", "Restart", "Disfluent"}, {}};
  for (const auto& [name, s] : rows) t.rows.push_back({name, {s.repetition, s.replacement, s.restart, s.disfluent}});
  return t;
}

}  // namespace voicecomp
