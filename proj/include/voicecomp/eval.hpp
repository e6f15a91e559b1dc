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

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/asr.hpp"
#include "voicecomp/disfluency.hpp"
#include "voicecomp/punctuation.hpp"
#include "voicecomp/report.hpp"

namespace voicecomp {

enum class EvalStage { kAsr, kDisfluency, kPunct, kCompose };

std::string_view to_string(EvalStage stage);
EvalStage parse_eval_stage(std::string_view name);  // asr|disfluency|punct|compose

// The system under test. An oracle system answers with the gold
// annotations, which gives the perfect-score rows.
struct EvalSystem {
  std::string name = "voicecomp";
  bool oracle = false;
  const PunctTaggerModel* punct_model = nullptr;  // default model when null
  const DisfluencyTagger* disfluency = nullptr;   // rule tagger when null
  std::function<std::string(const CorpusRecord&)> compose;  // required for the compose stage
  bool normalize_wer = true;                                // lowercase and drop punctuation
};

// ASR: transcript scored against gold (WER, WRR).
// Disfluency: tagger output on the transcript against disfluency_tags.
// Punct: labels predicted for the gold words against the gold punctuation.
// Compose: system.compose output against gold (BLEU, ROUGE-1/2/L).
// A record lacking the gold field a stage needs raises DataError naming it.
MetricReport run_eval(const std::vector<CorpusRecord>& corpus, EvalStage stage, const EvalSystem& system);

struct PunctScores {
  PRF sentence;  // PERIOD and QUESTIONMARK together
  PRF comma;
  PRF period;
  PRF question;
  PRF capitalization;
};

// Oracle scoring when model is null.
PunctScores score_punctuation(const std::vector<std::string>& gold_texts, const PunctTaggerModel* model);
MetricTable punctuation_table(const std::vector<std::pair<std::string, PunctScores>>& rows);

struct DisfluencyScores {
  PRF repetition;
  PRF replacement;
  PRF restart;
  PRF disfluent;  // any non-FLUENT tag
};

DisfluencyScores score_disfluency(const std::vector<std::vector<DisfluencyTag>>& gold,
                                  const std::vector<std::vector<DisfluencyTag>>& predicted);
MetricTable disfluency_table(const std::vector<std::pair<std::string, DisfluencyScores>>& rows);

}  // namespace voicecomp
