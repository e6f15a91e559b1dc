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

#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/text.hpp"

namespace voicecomp {

// Token-level edit. APPEND and REPLACE carry exactly one word.
struct EditTag {
  enum class Kind { kKeep, kDelete, kAppend, kReplace, kCaseCapital };

  Kind kind = Kind::kKeep;
  std::string word;

  static EditTag keep() { return {}; }
  static EditTag remove() { return {Kind::kDelete, {}}; }
  static EditTag append(std::string w) { return {Kind::kAppend, std::move(w)}; }
  static EditTag replace(std::string w) { return {Kind::kReplace, std::move(w)}; }
  static EditTag case_capital() { return {Kind::kCaseCapital, {}}; }

  friend bool operator==(const EditTag&, const EditTag&) = default;
};

// "KEEP", "DELETE", "APPEND(w)", "REPLACE(w)", "CASE_CAPITAL".
std::string to_string(const EditTag& tag);

class EditTagger {
 public:
  virtual ~EditTagger() = default;
  virtual std::string name() const = 0;
  virtual std::vector<EditTag> tag(const std::vector<Token>& tokens) const = 0;
};

// a/an agreement, capital "I", doubled function words.
class RuleEditTagger final : public EditTagger {
 public:
  std::string name() const override { return "rules-v1"; }
  std::vector<EditTag> tag(const std::vector<Token>& tokens) const override;
};

std::vector<EditTag> gec_tag(const std::vector<Token>& tokens);

// Single left-to-right pass.
std::vector<Token> apply_edit_tags(const std::vector<Token>& tokens, const std::vector<EditTag>& tags);

}  // namespace voicecomp
