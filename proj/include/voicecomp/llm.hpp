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
#include <string>
#include <string_view>

#include "voicecomp/intent.hpp"

namespace voicecomp {

// Chat-model integration point. Implementations must be safe to call
// concurrently and report failures by throwing.
class LlmAdapter {
 public:
  virtual ~LlmAdapter() = default;
  virtual std::string name() const = 0;
  virtual std::string complete(const std::string& prompt, std::uint64_t seed) const = 0;
};

inline constexpr std::string_view kPromptVersion = "prompt-v1";

// The user text is placed verbatim between "<input>" and "</input>" lines.
std::string build_llm_prompt(std::string_view text, const Intent& intent,
                             std::string_view version = kPromptVersion);

// Stateless stand-in: echoes the prompt's input block behind one of a few
// fixed openers chosen from (prompt, seed). Consecutive seeds always pick
// different openers.
class MockLlm final : public LlmAdapter {
 public:
  std::string name() const override { return "mock-llm"; }
  std::string complete(const std::string& prompt, std::uint64_t seed) const override;
};

}  // namespace voicecomp
