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

#include "voicecomp/normalize.hpp"

#include <chrono>

namespace voicecomp {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class T, class F>
std::vector<std::string> label_strings(const std::vector<T>& labels, F&& name) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.emplace_back(name(l));
  return out;
}

}  // namespace

Normalizer::Normalizer(const PunctTaggerModel& punct_model, std::shared_ptr<const DisfluencyTagger> disfluency,
                       std::shared_ptr<const EditTagger> editor)
    : punct_model_(&punct_model), disfluency_(std::move(disfluency)), editor_(std::move(editor)) {}

NormalizeResult Normalizer::run(const Transcript& transcript) const {
  NormalizeResult result;
  std::vector<Token> tokens;
  for (const auto& t : transcript.tokens()) {
    if (!is_punctuation_token(t.text)) tokens.push_back(t);
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].index = i;

  auto start = Clock::now();
  const auto disfluency_tags = disfluency_->tag(tokens);
  tokens = filter_disfluencies(tokens, disfluency_tags);
  result.traces.push_back({std::string(stage::kDisfluency), detokenize(tokens),
                           label_strings(disfluency_tags, [](DisfluencyTag t) { return to_string(t); }),
                           ms_since(start)});

  start = Clock::now();
  const auto edit_tags = editor_->tag(tokens);
  tokens = apply_edit_tags(tokens, edit_tags);
  result.traces.push_back({std::string(stage::kGec), detokenize(tokens),
                           label_strings(edit_tags, [](const EditTag& t) { return to_string(t); }),
                           ms_since(start)});

  start = Clock::now();
  const auto punct_labels = restore_punctuation(tokens, *punct_model_);
  result.text = apply_punct_labels(token_texts(tokens), punct_labels);
  result.traces.push_back({std::string(stage::kPunctuation), result.text,
                           label_strings(punct_labels, [](PunctLabel l) { return to_string(l); }),
                           ms_since(start)});
  return result;
}

std::pair<std::string, std::vector<StageTrace>> normalize(const Transcript& transcript,
                                                          const PunctTaggerModel& punct_model) {
  auto r = Normalizer(punct_model).run(transcript);
  return {std::move(r.text), std::move(r.traces)};
}

}  // namespace voicecomp
