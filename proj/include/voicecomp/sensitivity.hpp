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

#include <string>
#include <string_view>
#include <vector>

namespace voicecomp {

struct SensitivityVerdict {
  double score = 0.0;  // in [0, 1]
  std::vector<std::string> matched_terms;
  bool blocked = false;
};

class SensitivityClassifier {
 public:
  virtual ~SensitivityClassifier() = default;
  virtual std::string name() const = 0;
  virtual SensitivityVerdict assess(std::string_view text) const = 0;
};

enum class SensitivityTier { kScore, kBlock };

struct SensitivityConfig {
  double score_weight = 0.25;
  double block_weight = 1.0;
  double block_threshold = 0.9;
};

// Whole-word, case-insensitive dictionary matcher. Words are maximal runs of
// letters and digits, so "self-harm" and "self harm" are the same term and
// "Scunthorpe" contains no match.
class LexiconSensitivity final : public SensitivityClassifier {
 public:
  struct Term {
    std::string text;
    std::vector<std::string> words;
    SensitivityTier tier = SensitivityTier::kScore;
  };

  // One term per line with an optional ":score" or ":block" suffix.
  static LexiconSensitivity parse(std::string_view lexicon, SensitivityConfig config = {});
  static const LexiconSensitivity& bundled();

  std::string name() const override { return "lexicon-v1"; }
  SensitivityVerdict assess(std::string_view text) const override;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const SensitivityConfig& config() const noexcept { return config_; }

 private:
  std::vector<Term> terms_;
  SensitivityConfig config_;
};

// Lowercase letter/digit runs of text.
std::vector<std::string> boundary_words(std::string_view text);

SensitivityVerdict sensitivity_score(std::string_view text,
                                     const SensitivityClassifier& classifier = LexiconSensitivity::bundled());

}  // namespace voicecomp
