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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/intent.hpp"

namespace voicecomp {

struct ComposerConfig {
  std::string greeting = "Hi";
  std::string signoff = "Best regards";
};

struct Composition {
  ContentType content_type = ContentType::kNotes;
  std::optional<std::string> recipient;
  std::optional<std::string> salutation;
  std::vector<std::vector<std::string>> body;  // paragraphs of sentences
  std::optional<std::string> signoff;

  std::size_t sentence_count() const;
};

// Deterministic template composer for closed-ended input and for dictation.
// Throws ContractError for open-ended instructions.
Composition compose_ft(std::string_view text, const Intent& intent, const ComposerConfig& config = {});

std::string render(const Composition& composition);

// Lowercase content words (non-function, non-stopword) in text order.
std::vector<std::string> content_words(std::string_view text);

// Words the composer may emit that are not copied from the input: template
// greeting and signoff plus the outputs of the pronoun table.
std::set<std::string> template_boilerplate(const ComposerConfig& config = {});

}  // namespace voicecomp
