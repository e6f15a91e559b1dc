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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/text.hpp"

namespace voicecomp {

// Punctuation appended after a token. COMMA stands for any of , ; : -
// and QUESTIONMARK for ? or !; rendering always uses , and ?.
enum class AppendClass : std::uint8_t { kNone = 0, kComma = 1, kPeriod = 2, kQuestion = 3 };

// Per-token restoration label: capitalization and appended punctuation
// are independent, so a one-word sentence can be both capitalized and
// period-terminated.
struct PunctLabel {
  bool capitalize = false;
  AppendClass append = AppendClass::kNone;

  static constexpr int kCount = 8;
  int id() const noexcept { return (capitalize ? 4 : 0) + static_cast<int>(append); }
  static PunctLabel from_id(int id) noexcept {
    return {id >= 4, static_cast<AppendClass>(id % 4)};
  }
  friend bool operator==(const PunctLabel&, const PunctLabel&) = default;
};

// The five single-label classes used for evaluation.
enum class PunctClass { kComma, kPeriod, kQuestionMark, kCapitalization, kNone };

// Append classes win; CAPITALIZATION only when nothing is appended.
PunctClass project(PunctLabel label) noexcept;
std::string_view to_string(PunctClass c);
std::string_view to_string(AppendClass c);
std::string to_string(PunctLabel label);

struct PunctExtraction {
  std::vector<std::string> tokens;  // lowercase words, punctuation removed
  std::vector<PunctLabel> labels;
};

// Derives restoration labels from punctuated text. Throws DataError listing
// characters outside letters, digits, apostrophes and . , ; : - ? !
PunctExtraction extract_punct_labels(std::string_view gold_text);

// Capitalizes and appends canonical punctuation; adds a final "." when the
// last label appends nothing.
std::string apply_punct_labels(const std::vector<std::string>& tokens, const std::vector<PunctLabel>& labels);

// Linear sequence tagger over sparse string features, decoded greedily left
// to right with the previous prediction as a feature.
class PunctTaggerModel {
 public:
  using LabelWeights = std::array<double, PunctLabel::kCount>;
  using Weights = std::map<std::string, LabelWeights>;

  PunctTaggerModel() = default;
  PunctTaggerModel(std::string version, Weights weights)
      : version_(std::move(version)), weights_(std::move(weights)) {}

  const std::string& version() const noexcept { return version_; }
  const Weights& weights() const noexcept { return weights_; }
  std::size_t feature_count() const noexcept { return weights_.size(); }

  // Raw predictions for lowercase, punctuation-free tokens.
  std::vector<PunctLabel> predict(const std::vector<std::string>& tokens) const;

  std::string to_json() const;
  static PunctTaggerModel from_json(std::string_view json);
  void save(const std::filesystem::path& path) const;
  static PunctTaggerModel load(const std::filesystem::path& path);

  friend bool operator==(const PunctTaggerModel&, const PunctTaggerModel&) = default;

 private:
  std::string version_;
  Weights weights_;
};

// Running state of the sentence being decoded, derived from earlier
// predictions.
struct SentenceContext {
  std::size_t words_since_boundary = 0;
  std::string first_word;

  // Call once per position, before computing its features.
  void advance(const std::vector<std::string>& tokens, std::size_t i, int prev_label);
};

// Feature strings for position i given the previous predicted label.
std::vector<std::string> punct_features(const std::vector<std::string>& tokens, std::size_t i, int prev_label,
                                        const SentenceContext& context);

// Averaged perceptron over extract_punct_labels pairs. Each corpus entry is
// one gold utterance (one or more sentences). Deterministic in (corpus, seed).
PunctTaggerModel train_punct_tagger(const std::vector<std::string>& corpus, int epochs, std::uint64_t seed);

// Labels for tokens; the first token is always capitalized.
std::vector<PunctLabel> restore_punctuation(const std::vector<Token>& tokens, const PunctTaggerModel& model);

// Joins consecutive sentences into utterances of 1, 2, ..., max_sentences
// sentences (cycling), mimicking multi-sentence dictation.
std::vector<std::string> chunk_utterances(const std::vector<std::string>& sentences, std::size_t max_sentences);

// Trained on the bundled corpus with fixed settings; built once per process.
const PunctTaggerModel& default_punct_model();

}  // namespace voicecomp
