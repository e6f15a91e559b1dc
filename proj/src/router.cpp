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

#include "voicecomp/router.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "voicecomp/error.hpp"
#include "voicecomp/resources.hpp"
#include "voicecomp/rng.hpp"

namespace voicecomp {

std::string_view to_string(Model model) { return model == Model::kLlm ? "LLM" : "FT"; }

Model parse_model(std::string_view name) {
  if (name == "FT") return Model::kFt;
  if (name == "LLM") return Model::kLlm;
  throw DataError("unknown model label '" + std::string(name) + "' (expected FT or LLM)");
}

RouterFeatures router_features(const TextAnalysis& analysis, const Intent& intent) {
  return {
      1.0,
      intent.endedness == Endedness::kOpen ? 1.0 : 0.0,
      analysis.creativity_cue ? 1.0 : 0.0,
      intent.input_type == InputType::kInstruction ? 1.0 : 0.0,
      std::min(1.0, static_cast<double>(analysis.word_count) / 100.0),
      analysis.entity_density,
  };
}

RouterWeights RouterWeights::scaled(double factor) const {
  if (!(factor > 0.0)) throw ContractError("router weights can only be scaled by a positive factor");
  RouterWeights out = *this;
  for (auto& w : out.weights) w *= factor;
  out.sensitivity_penalty *= factor;
  out.threshold *= factor;
  return out;
}

nlohmann::ordered_json RouterWeights::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = version;
  nlohmann::ordered_json w;
  for (std::size_t i = 0; i < kRouterFeatureCount; ++i) w[std::string(kRouterFeatureNames[i])] = weights[i];
  j["weights"] = w;
  j["sensitivity_penalty"] = sensitivity_penalty;
  j["threshold"] = threshold;
  return j;
}

RouterWeights RouterWeights::from_json(const nlohmann::json& j) {
  RouterWeights out;
  try {
    out.version = j.value("version", out.version);
    out.sensitivity_penalty = j.value("sensitivity_penalty", out.sensitivity_penalty);
    out.threshold = j.value("threshold", out.threshold);
    if (j.contains("weights")) {
      for (const auto& [name, value] : j.at("weights").items()) {
        const auto it = std::find(kRouterFeatureNames.begin(), kRouterFeatureNames.end(), name);
        if (it == kRouterFeatureNames.end()) throw DataError("router: unknown feature '" + name + "'");
        out.weights[static_cast<std::size_t>(it - kRouterFeatureNames.begin())] = value.get<double>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("router weights: ") + e.what());
  }
  if (out.sensitivity_penalty < 0.0) throw DataError("router: sensitivity_penalty must be >= 0");
  return out;
}

double router_margin(const RouterFeatures& features, const RouterWeights& weights, double sensitivity_score) {
  double m = 0.0;
  for (std::size_t i = 0; i < kRouterFeatureCount; ++i) m += weights.weights[i] * features[i];
  return m - weights.sensitivity_penalty * sensitivity_score;
}

Route route(const TextAnalysis& analysis, const Intent& intent, const SensitivityVerdict& sensitivity,
            const RouterWeights& weights) {
  const double margin = router_margin(router_features(analysis, intent), weights, sensitivity.score);
  Route r;
  r.score = 1.0 / (1.0 + std::exp(-(margin - weights.threshold)));
  const bool llm = margin > weights.threshold;
  std::ostringstream reason;
  reason.precision(3);
  if (sensitivity.blocked) {
    r.model = Model::kFt;
    reason << "input blocked by sensitivity gate";
  } else if (llm) {
    r.model = Model::kLlm;
    reason << "margin " << margin << " above threshold " << weights.threshold;
  } else {
    r.model = Model::kFt;
    reason << "margin " << margin << " at or below threshold " << weights.threshold;
    if (sensitivity.score > 0.0) reason << " (sensitivity " << sensitivity.score << ")";
  }
  r.reason = reason.str();
  return r;
}

Route route(std::string_view text, const Intent& intent, const SensitivityVerdict& sensitivity,
            const RouterWeights& weights) {
  return route(analyze_text(text), intent, sensitivity, weights);
}

std::vector<RouterExample> parse_router_dataset(std::string_view jsonl) {
  std::vector<RouterExample> out;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= jsonl.size()) {
    auto end = jsonl.find('\n', begin);
    if (end == std::string_view::npos) end = jsonl.size();
    const auto line = jsonl.substr(begin, end - begin);
    ++line_no;
    begin = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      out.push_back({j.at("text").get<std::string>(), parse_model(j.at("label").get<std::string>())});
    } catch (const nlohmann::json::exception& e) {
      throw DataError("router dataset line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<RouterExample> bundled_router_dataset() { return parse_router_dataset(embedded::router_dataset()); }

RouterWeights train_router(const std::vector<RouterExample>& examples, int epochs, std::uint64_t seed,
                           const RouterWeights& init) {
  if (examples.empty()) throw ContractError("train_router: empty dataset");
  if (epochs <= 0) throw ContractError("train_router: epochs must be positive");
  std::vector<RouterFeatures> features;
  features.reserve(examples.size());
  for (const auto& ex : examples) {
    const auto analysis = analyze_text(ex.text);
    features.push_back(router_features(analysis, classify_intent(analysis)));
  }
  RouterFeatures w{};
  RouterFeatures sum{};
  std::size_t steps = 0;
  std::vector<std::size_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    Rng rng(seed, "router.epoch." + std::to_string(epoch));
    rng.shuffle(order.begin(), order.end());
    for (const auto idx : order) {
      const auto& f = features[idx];
      double m = -init.threshold;
      for (std::size_t k = 0; k < kRouterFeatureCount; ++k) m += w[k] * f[k];
      const double y = examples[idx].label == Model::kLlm ? 1.0 : -1.0;
      if (y * m <= 0.0) {
        for (std::size_t k = 0; k < kRouterFeatureCount; ++k) w[k] += y * f[k];
      }
      for (std::size_t k = 0; k < kRouterFeatureCount; ++k) sum[k] += w[k];
      ++steps;
    }
  }
  RouterWeights out = init;
  out.version = "perceptron-v1";
  for (std::size_t k = 0; k < kRouterFeatureCount; ++k) out.weights[k] = sum[k] / static_cast<double>(steps);
  return out;
}

double router_accuracy(const std::vector<RouterExample>& examples, const RouterWeights& weights) {
  if (examples.empty()) return 0.0;
  std::size_t correct = 0;
  const SensitivityVerdict clean;
  for (const auto& ex : examples) {
    const auto analysis = analyze_text(ex.text);
    if (route(analysis, classify_intent(analysis), clean, weights).model == ex.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(examples.size());
}

}  // namespace voicecomp
