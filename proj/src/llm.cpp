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

#include "voicecomp/llm.hpp"

#include <array>

#include "voicecomp/error.hpp"
#include "voicecomp/rng.hpp"

namespace voicecomp {
namespace {

constexpr std::string_view kInputOpen = "<input>\n";
constexpr std::string_view kInputClose = "\n</input>";

std::string_view format_instruction(ContentType type) {
  switch (type) {
    case ContentType::kEmail:
      return "Write it as an email: a greeting line, short paragraphs, and a sign-off.";
    case ContentType::kMessage:
      return "Write it as a short chat message: one paragraph, no greeting line or sign-off.";
    case ContentType::kNotes:
      return "Write it as notes: one line per point.";
  }
  return {};
}

std::string_view noun(ContentType type) {
  switch (type) {
    case ContentType::kEmail: return "email";
    case ContentType::kMessage: return "message";
    case ContentType::kNotes: return "note";
  }
  return {};
}

}  // namespace

std::string build_llm_prompt(std::string_view text, const Intent& intent, std::string_view version) {
  if (version != kPromptVersion) throw ContractError("unknown prompt template '" + std::string(version) + "'");
  std::string p;
  p += "[";
  p += kPromptVersion;
  p += "]\nYou turn spoken input into a polished ";
  p += noun(intent.content_type);
  p += ".\nUse only the facts given in the input and do not invent names, dates or numbers.\n";
  if (intent.endedness == Endedness::kOpen) {
    p += "Where the input asks for new content, keep additions brief and consistent with the input.\n";
  } else {
    p += "Keep the wording close to the input.\n";
  }
  p += format_instruction(intent.content_type);
  p += "\nBe concise.\nInput type: ";
  p += to_string(intent.input_type);
  p += "\n";
  p += kInputOpen;
  p += text;
  p += kInputClose;
  p += "\n";
  return p;
}

std::string MockLlm::complete(const std::string& prompt, std::uint64_t seed) const {
  static constexpr std::array<std::string_view, 4> kOpeners = {
      "Here is a draft.", "Draft ready.", "Sure, here it is.", "Here you go."};
  std::string_view input;
  const auto open = prompt.find(kInputOpen);
  const auto close = prompt.rfind(kInputClose);
  if (open != std::string::npos && close != std::string::npos && close >= open + kInputOpen.size()) {
    input = std::string_view(prompt).substr(open + kInputOpen.size(), close - open - kInputOpen.size());
  }
  const auto pick = (fnv1a(prompt) + seed) % kOpeners.size();
  std::string out(kOpeners[pick]);
  if (!input.empty()) {
    out += "\n\n";
    out += input;
  }
  return out;
}

}  // namespace voicecomp
