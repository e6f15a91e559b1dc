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

namespace voicecomp {

// Half-open [start, end) range of code point offsets into a source string.
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct Token {
  std::string text;
  std::size_t index = 0;
  std::optional<CharSpan> span;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class Source { kAsr, kFile, kTyped, kSynthetic };

std::string_view to_string(Source source);

// A token sequence plus the text it was produced from. Immutable once built.
class Transcript {
 public:
  Transcript() = default;
  Transcript(std::string raw_text, Source source);
  Transcript(std::vector<Token> tokens, std::string raw_text, Source source);

  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  const std::string& raw_text() const noexcept { return raw_text_; }
  Source source() const noexcept { return source_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  std::vector<std::string> words() const;

 private:
  std::vector<Token> tokens_;
  std::string raw_text_;
  Source source_ = Source::kTyped;
};

// One executed pipeline sub-stage.
struct StageTrace {
  std::string stage_name;
  std::string text_after;
  std::optional<std::vector<std::string>> labels_applied;
  double elapsed_ms = 0.0;
};

// Punctuation characters split off word edges by the tokenizer.
inline constexpr std::string_view kSplitPunctuation = ".,;:-?!";
// Punctuation that attaches to the previous token when detokenizing.
inline constexpr std::string_view kAttachedPunctuation = ".,;:?!";

bool is_punctuation_token(std::string_view token);

std::vector<Token> tokenize(std::string_view text);
std::string detokenize(const std::vector<Token>& tokens);
std::string detokenize(const std::vector<std::string>& words);

std::vector<std::string> token_texts(const std::vector<Token>& tokens);
// Builds span-less tokens with sequential indices.
std::vector<Token> make_tokens(const std::vector<std::string>& words);

// Unicode helpers. All strings are UTF-8.
std::string nfc(std::string_view text);
std::string to_lower(std::string_view text);
std::string capitalize_first(std::string_view word);
bool starts_upper(std::string_view word);
bool has_upper(std::string_view text);
std::size_t code_point_count(std::string_view text);
std::string slice_chars(std::string_view text, CharSpan span);
// Collapses runs of whitespace to single spaces and trims both ends.
std::string normalize_whitespace(std::string_view text);
bool is_all_digits(std::string_view word);

}  // namespace voicecomp
