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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "voicecomp/intent.hpp"
#include "voicecomp/sensitivity.hpp"

namespace voicecomp {

enum class Model { kFt, kLlm };

std::string_view to_string(Model model);  // "FT" | "LLM"
Model parse_model(std::string_view name);

struct Route {
  Model model = Model::kFt;
  double score = 0.0;  // LLM propensity in [0, 1]
  std::string reason;
};

inline constexpr std::size_t kRouterFeatureCount = 6;
inline constexpr std::array<std::string_view, kRouterFeatureCount> kRouterFeatureNames = {
    "bias", "open", "creativity", "instruction", "length", "entity_density"};

using RouterFeatures = std::array<double, kRouterFeatureCount>;

RouterFeatures router_features(const TextAnalysis& analysis, const Intent& intent);

// margin = w . f - sensitivity_penalty * sensitivity.score. The request goes
// to the LLM iff margin > threshold and the sensitivity gate passes; the
// reported score is logistic(margin - threshold).
struct RouterWeights {
  std::string version = "linear-v1";
  RouterFeatures weights = {-1.0, 0.8, 1.0, 0.3, 0.15, -1.0};
  double sensitivity_penalty = 5.0;
  double threshold = 0.0;

  // Scales weights, penalty and threshold together.
  RouterWeights scaled(double factor) const;

  nlohmann::ordered_json to_json() const;
  static RouterWeights from_json(const nlohmann::json& j);
};

double router_margin(const RouterFeatures& features, const RouterWeights& weights, double sensitivity_score);

Route route(const TextAnalysis& analysis, const Intent& intent, const SensitivityVerdict& sensitivity,
            const RouterWeights& weights = {});
Route route(std::string_view text, const Intent& intent, const SensitivityVerdict& sensitivity,
            const RouterWeights& weights = {});

struct RouterExample {
  std::string text;
  Model label = Model::kFt;
};

// JSONL with {"text": ..., "label": "FT"|"LLM"} per line.
std::vector<RouterExample> parse_router_dataset(std::string_view jsonl);
std::vector<RouterExample> bundled_router_dataset();

// Averaged perceptron over router_features; the sensitivity penalty and
// threshold are carried over from `init`.
RouterWeights train_router(const std::vector<RouterExample>& examples, int epochs, std::uint64_t seed,
                           const RouterWeights& init = {});

double router_accuracy(const std::vector<RouterExample>& examples, const RouterWeights& weights);

}  // namespace voicecomp
