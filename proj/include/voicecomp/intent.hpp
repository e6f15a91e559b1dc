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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/resources.hpp"
#include "voicecomp/taxonomy.hpp"

namespace voicecomp {

struct Intent {
  InputType input_type = InputType::kDictation;
  ContentType content_type = ContentType::kNotes;
  Endedness endedness = Endedness::kClosed;

  friend bool operator==(const Intent&, const Intent&) = default;
};

// How the text names its recipient, if it does.
struct Addressing {
  enum class Kind {
    kNone,
    kDictationHeader,    // "Email Sam, we met ..."
    kInstructionHeader,  // "Send an email to Joe." / "Text Ana that ..."
    kGreeting,           // "Hey John, ..." / "Dear Ms Lee, ..."
  };
  Kind kind = Kind::kNone;
  std::optional<std::string> recipient;
  std::optional<ContentType> channel;
  std::size_t header_tokens = 0;  // leading tokens that make up the header
};

// Surface features shared by intent classification, routing and the
// template composer.
struct TextAnalysis {
  std::vector<std::string> tokens;  // tokenizer output, original casing
  Addressing addressing;
  bool imperative = false;        // leading imperative verb
  bool creativity_cue = false;    // outside the header
  bool note_style = false;        // addressed dictation written as comma-joined notes
  std::optional<ContentType> cue_content_type;
  std::size_t word_count = 0;
  double entity_density = 0.0;    // capitalized (non-initial) or numeric words per word
};

TextAnalysis analyze_text(std::string_view text, const Lexicons& lexicons = Lexicons::bundled());

Intent classify_intent(const TextAnalysis& analysis);
Intent classify_intent(std::string_view text);
Intent classify_intent(std::string_view text, std::optional<ContentType> content_override);

// Splits a token sequence after each sentence-final '.', '?' or '!'.
std::vector<std::vector<std::string>> split_sentences(const std::vector<std::string>& tokens);

}  // namespace voicecomp
