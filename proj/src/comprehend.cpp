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

#include "voicecomp/comprehend.hpp"

#include <chrono>
#include <sstream>

#include "voicecomp/error.hpp"
#include "voicecomp/normalize.hpp"

namespace voicecomp {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::string> verdict_labels(const SensitivityVerdict& v) {
  std::ostringstream score;
  score << "score=" << v.score;
  std::vector<std::string> labels = {v.blocked ? "BLOCKED" : "PASS", score.str()};
  for (const auto& t : v.matched_terms) labels.push_back("term=" + t);
  return labels;
}

}  // namespace

ComprehendResult comprehend(std::string_view text, std::optional<ContentType> content_hint,
                            const ComprehendAdapters& adapters, const ComprehendConfig& config,
                            std::uint64_t seed) {
  const SensitivityClassifier& gate =
      adapters.sensitivity ? *adapters.sensitivity : static_cast<const SensitivityClassifier&>(LexiconSensitivity::bundled());
  ComprehendResult r;

  auto t0 = Clock::now();
  const auto analysis = analyze_text(text);
  r.intent = classify_intent(analysis);
  if (content_hint) r.intent.content_type = *content_hint;
  r.traces.push_back({std::string(stage::kIntent), std::string(text),
                      std::vector<std::string>{std::string(to_string(r.intent.input_type)),
                                               std::string(to_string(r.intent.content_type)),
                                               std::string(to_string(r.intent.endedness))},
                      ms_since(t0)});

  t0 = Clock::now();
  r.input_verdict = gate.assess(text);
  r.traces.push_back({std::string(stage::kInputGate), std::string(text), verdict_labels(r.input_verdict), ms_since(t0)});

  t0 = Clock::now();
  r.route = route(analysis, r.intent, r.input_verdict, config.router);
  {
    std::ostringstream score;
    score << "score=" << r.route.score;
    r.traces.push_back({std::string(stage::kRoute), std::string(text),
                        std::vector<std::string>{std::string(to_string(r.route.model)), score.str()}, ms_since(t0)});
  }
  if (r.input_verdict.blocked) {
    r.blocked = true;
    r.output = config.refusal_notice;
    return r;
  }

  t0 = Clock::now();
  std::string composed;
  std::string composer_name;
  if (r.route.model == Model::kLlm) {
    if (adapters.llm == nullptr) throw AdapterError("llm", "no LLM adapter configured");
    composer_name = adapters.llm->name();
    const auto prompt = build_llm_prompt(text, r.intent, config.prompt_version);
    try {
      composed = adapters.llm->complete(prompt, seed);
    } catch (const std::exception& e) {
      throw AdapterError(composer_name, e.what());
    }
  } else {
    composer_name = "template-ft";
    // Open-ended dictation reaches the template composer as well; it is
    // treated as closed for composition purposes.
    Intent ft_intent = r.intent;
    if (ft_intent.input_type == InputType::kDictation) ft_intent.endedness = Endedness::kClosed;
    if (ft_intent.input_type == InputType::kInstruction && ft_intent.endedness == Endedness::kOpen) {
      // Only reachable when a sensitivity penalty forced the FT route.
      ft_intent.endedness = Endedness::kClosed;
    }
    composed = render(compose_ft(text, ft_intent, config.composer));
  }
  r.traces.push_back({std::string(stage::kCompose), composed, std::vector<std::string>{composer_name}, ms_since(t0)});

  t0 = Clock::now();
  r.output_verdict = gate.assess(composed);
  if (r.output_verdict->blocked) {
    r.blocked = true;
    r.output = config.refusal_notice;
  } else {
    r.output = std::move(composed);
  }
  r.traces.push_back({std::string(stage::kOutputGate), r.output, verdict_labels(*r.output_verdict), ms_since(t0)});
  return r;
}

}  // namespace voicecomp
