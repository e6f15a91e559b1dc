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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/composer.hpp"
#include "voicecomp/intent.hpp"
#include "voicecomp/llm.hpp"
#include "voicecomp/router.hpp"
#include "voicecomp/sensitivity.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {

struct ComprehendConfig {
  RouterWeights router;
  ComposerConfig composer;
  std::string prompt_version{kPromptVersion};
  std::string refusal_notice = "This request can't be completed because it contains sensitive content.";
};

// Borrowed; must outlive the call.
struct ComprehendAdapters {
  const LlmAdapter* llm = nullptr;
  const SensitivityClassifier* sensitivity = nullptr;  // bundled lexicon when null
};

struct ComprehendResult {
  std::string output;
  Intent intent;
  Route route;
  bool blocked = false;
  SensitivityVerdict input_verdict;
  std::optional<SensitivityVerdict> output_verdict;
  std::vector<StageTrace> traces;
};

// intent -> input gate -> route -> compose -> output gate. A blocked input
// or output yields the refusal notice; adapter failures throw AdapterError.
ComprehendResult comprehend(std::string_view text, std::optional<ContentType> content_hint,
                            const ComprehendAdapters& adapters, const ComprehendConfig& config,
                            std::uint64_t seed);

}  // namespace voicecomp
