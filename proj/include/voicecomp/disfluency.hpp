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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/text.hpp"

namespace voicecomp {

enum class DisfluencyTag { kFluent, kRepetition, kReplacement, kRestart };

std::string_view to_string(DisfluencyTag tag);
std::optional<DisfluencyTag> parse_disfluency_tag(std::string_view name);

struct DisfluencyConfig {
  std::size_t max_repeat_ngram = 4;
  // Restart fragments are shorter than max_restart_fragment + 1 tokens.
  std::size_t max_restart_fragment = 3;
  std::size_t max_replacement_width = 4;
  // Editing cues; weak cues need a typed or identical slot match.
  std::vector<std::vector<std::string>> strong_cues = {{"i", "mean"}, {"sorry"}, {"no", "wait"}};
  std::vector<std::vector<std::string>> weak_cues = {{"rather"}};
  // Filled pauses ("uh", "um", ...) and "you know" are tagged RESTART.
  bool tag_fillers = true;
};

class DisfluencyTagger {
 public:
  virtual ~DisfluencyTagger() = default;
  virtual std::string name() const = 0;
  virtual std::vector<DisfluencyTag> tag(const std::vector<Token>& tokens) const = 0;
};

class RuleDisfluencyTagger final : public DisfluencyTagger {
 public:
  explicit RuleDisfluencyTagger(DisfluencyConfig config = {}) : config_(std::move(config)) {}
  std::string name() const override { return "rules-v1"; }
  std::vector<DisfluencyTag> tag(const std::vector<Token>& tokens) const override;
  const DisfluencyConfig& config() const noexcept { return config_; }

 private:
  DisfluencyConfig config_;
};

std::vector<DisfluencyTag> tag_disfluencies(const std::vector<Token>& tokens,
                                            const DisfluencyConfig& config = {});

// Drops every non-FLUENT token; survivors are re-indexed. Never inserts or
// substitutes.
std::vector<Token> filter_disfluencies(const std::vector<Token>& tokens,
                                       const std::vector<DisfluencyTag>& tags);

}  // namespace voicecomp
