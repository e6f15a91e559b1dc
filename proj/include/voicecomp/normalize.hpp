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

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "voicecomp/disfluency.hpp"
#include "voicecomp/gec.hpp"
#include "voicecomp/punctuation.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {

namespace stage {
inline constexpr std::string_view kDisfluency = "disfluency";
inline constexpr std::string_view kGec = "gec";
inline constexpr std::string_view kPunctuation = "punctuation";
inline constexpr std::string_view kIntent = "intent";
inline constexpr std::string_view kInputGate = "input_gate";
inline constexpr std::string_view kRoute = "route";
inline constexpr std::string_view kCompose = "compose";
inline constexpr std::string_view kOutputGate = "output_gate";
}  // namespace stage

struct NormalizeResult {
  std::string text;
  std::vector<StageTrace> traces;
};

// Disfluency filtering, then edit tagging, then punctuation restoration.
// Sentence punctuation already present in the input is discarded and
// re-predicted; word casing is kept.
class Normalizer {
 public:
  explicit Normalizer(const PunctTaggerModel& punct_model,
                      std::shared_ptr<const DisfluencyTagger> disfluency = std::make_shared<RuleDisfluencyTagger>(),
                      std::shared_ptr<const EditTagger> editor = std::make_shared<RuleEditTagger>());

  NormalizeResult run(const Transcript& transcript) const;

 private:
  const PunctTaggerModel* punct_model_;
  std::shared_ptr<const DisfluencyTagger> disfluency_;
  std::shared_ptr<const EditTagger> editor_;
};

std::pair<std::string, std::vector<StageTrace>> normalize(const Transcript& transcript,
                                                          const PunctTaggerModel& punct_model);

}  // namespace voicecomp
