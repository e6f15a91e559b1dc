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

#include "voicecomp/gec.hpp"

#include <array>

#include "voicecomp/error.hpp"
#include "voicecomp/lexical.hpp"

namespace voicecomp {
namespace {

// Spelling-vs-sound exceptions for the article rule.
constexpr std::array<std::string_view, 8> kVowelSoundConsonantSpelling = {
    "hour", "hours", "honest", "honor", "honour", "heir", "herb", "hourly"};
constexpr std::array<std::string_view, 12> kConsonantSoundVowelSpelling = {
    "one", "once", "university", "unique", "unit", "united", "user", "usual", "useful",
    "european", "uniform", "union"};

template <std::size_t N>
bool in(const std::array<std::string_view, N>& set, std::string_view w) {
  for (auto s : set) {
    if (s == w) return true;
  }
  return false;
}

bool vowel_sound(std::string_view lower) {
  if (lower.empty()) return false;
  if (in(kVowelSoundConsonantSpelling, lower)) return true;
  if (in(kConsonantSoundVowelSpelling, lower)) return false;
  return std::string_view("aeiou").find(lower.front()) != std::string_view::npos;
}

bool is_capital_i(std::string_view lower) {
  return lower == "i" || lower == "i'm" || lower == "i'll" || lower == "i've" || lower == "i'd";
}

std::string match_case(std::string_view like, std::string word) {
  return starts_upper(like) ? capitalize_first(word) : word;
}

}  // namespace

std::string to_string(const EditTag& tag) {
  switch (tag.kind) {
    case EditTag::Kind::kKeep: return "KEEP";
    case EditTag::Kind::kDelete: return "DELETE";
    case EditTag::Kind::kAppend: return "APPEND(" + tag.word + ")";
    case EditTag::Kind::kReplace: return "REPLACE(" + tag.word + ")";
    case EditTag::Kind::kCaseCapital: return "CASE_CAPITAL";
  }
  return "KEEP";
}

std::vector<EditTag> RuleEditTagger::tag(const std::vector<Token>& tokens) const {
  std::vector<EditTag> tags(tokens.size());
  std::vector<std::string> lower;
  lower.reserve(tokens.size());
  for (const auto& t : tokens) lower.push_back(to_lower(t.text));

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& w = lower[i];
    const std::string_view next = i + 1 < tokens.size() ? std::string_view(lower[i + 1]) : std::string_view();
    if (!next.empty() && !is_punctuation_token(next) && w == next && lexical::is_function_word(w)) {
      tags[i] = EditTag::remove();
    } else if (w == "a" && !next.empty() && !is_punctuation_token(next) && vowel_sound(next)) {
      tags[i] = EditTag::replace(match_case(tokens[i].text, "an"));
    } else if (w == "an" && !next.empty() && !is_punctuation_token(next) && !vowel_sound(next) &&
               !lexical::is_number_word(next)) {
      tags[i] = EditTag::replace(match_case(tokens[i].text, "a"));
    } else if (is_capital_i(w) && tokens[i].text[0] == 'i') {
      tags[i] = EditTag::case_capital();
    }
  }
  return tags;
}

std::vector<EditTag> gec_tag(const std::vector<Token>& tokens) { return RuleEditTagger().tag(tokens); }

std::vector<Token> apply_edit_tags(const std::vector<Token>& tokens, const std::vector<EditTag>& tags) {
  if (tokens.size() != tags.size()) {
    throw ContractError("apply_edit_tags: " + std::to_string(tokens.size()) + " tokens but " +
                        std::to_string(tags.size()) + " tags");
  }
  std::vector<Token> out;
  auto push = [&](std::string text) { out.push_back(Token{std::move(text), out.size(), std::nullopt}); };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tag = tags[i];
    switch (tag.kind) {
      case EditTag::Kind::kKeep: {
        Token t = tokens[i];
        t.index = out.size();
        out.push_back(std::move(t));
        break;
      }
      case EditTag::Kind::kDelete: break;
      case EditTag::Kind::kAppend: {
        if (tag.word.empty()) throw ContractError("APPEND tag needs a word");
        Token t = tokens[i];
        t.index = out.size();
        out.push_back(std::move(t));
        push(tag.word);
        break;
      }
      case EditTag::Kind::kReplace:
        if (tag.word.empty()) throw ContractError("REPLACE tag needs a word");
        push(tag.word);
        break;
      case EditTag::Kind::kCaseCapital: push(capitalize_first(tokens[i].text)); break;
    }
  }
  return out;
}

}  // namespace voicecomp
