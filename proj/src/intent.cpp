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

#include "voicecomp/intent.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "voicecomp/lexical.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {
namespace {

using Words = std::vector<std::string>;

bool in(std::string_view w, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool is_sentence_end(std::string_view t) { return t == "." || t == "?" || t == "!"; }

const std::unordered_set<std::string>& known_names(const Lexicons& lex) {
  // Only the bundled lexicons are cached; custom ones are rebuilt per call.
  static const std::unordered_set<std::string> bundled = [] {
    std::unordered_set<std::string> s;
    const auto& b = Lexicons::bundled();
    for (const auto& n : b.western_names) s.insert(to_lower(n));
    for (const auto& n : b.nonwestern_names) s.insert(to_lower(n));
    return s;
  }();
  if (&lex == &Lexicons::bundled()) return bundled;
  thread_local std::unordered_set<std::string> custom;
  custom.clear();
  for (const auto& n : lex.western_names) custom.insert(to_lower(n));
  for (const auto& n : lex.nonwestern_names) custom.insert(to_lower(n));
  return custom;
}

bool alphabetic(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](unsigned char c) {
    return std::isalpha(c) || c == '\'' || c == '-' || c >= 0x80;
  });
}

class Scanner {
 public:
  Scanner(const Words& tokens, const Lexicons& lex) : tokens_(tokens), names_(known_names(lex)) {
    lower_.reserve(tokens.size());
    for (const auto& t : tokens) lower_.push_back(to_lower(t));
  }

  std::size_t size() const { return tokens_.size(); }
  const std::string& low(std::size_t i) const {
    static const std::string empty;
    return i < lower_.size() ? lower_[i] : empty;
  }
  const std::string& raw(std::size_t i) const { return tokens_[i]; }

  bool known_name(std::size_t i) const { return names_.count(low(i)) > 0; }

  // A plausible person name: a known name, or a capitalized content word.
  bool name_like(std::size_t i) const {
    if (i >= size()) return false;
    const auto& w = low(i);
    if (!alphabetic(w) || lexical::is_function_word(w) || lexical::is_stopword(w)) return false;
    if (in(w, {"me", "you", "everyone", "everybody", "someone", "them", "us", "all", "team"})) return false;
    return known_name(i) || starts_upper(raw(i));
  }

 private:
  const Words& tokens_;
  Words lower_;
  const std::unordered_set<std::string>& names_;
};

std::optional<ContentType> channel_of(std::string_view noun) {
  if (noun == "email" || noun == "e-mail" || noun == "mail") return ContentType::kEmail;
  if (noun == "message" || noun == "text" || noun == "note" || noun == "dm") return ContentType::kMessage;
  return std::nullopt;
}

// Extends a header over a trailing connector and sentence end.
std::size_t absorb_connectors(const Scanner& s, std::size_t i) {
  if (in(s.low(i), {"that", "saying"})) ++i;
  if (i < s.size() && (s.low(i) == "," || s.low(i) == ":")) ++i;
  if (i < s.size() && is_sentence_end(s.low(i))) ++i;
  return i;
}

Addressing detect_addressing(const Scanner& s) {
  Addressing a;
  if (s.size() < 2) return a;
  std::size_t i = 0;
  if (s.low(0) == "please") i = 1;

  const auto& verb = s.low(i);
  // "Email Sam, we met ..." is the speaker dictating the email itself.
  if (i == 0 && in(verb, {"email", "text", "message"}) && s.name_like(1) &&
      (s.low(2) == "," || (s.known_name(1) && lexical::is_subject_pronoun(s.low(2))))) {
    a.kind = Addressing::Kind::kDictationHeader;
    a.recipient = capitalize_first(s.raw(1));
    a.channel = channel_of(verb);
    a.header_tokens = s.low(2) == "," ? 3 : 2;
    return a;
  }

  if (in(verb, {"send", "write", "draft", "compose"})) {
    std::size_t j = i + 1;
    // send Joe an email
    if (s.name_like(j) && in(s.low(j + 1), {"a", "an"}) && channel_of(s.low(j + 2))) {
      a.kind = Addressing::Kind::kInstructionHeader;
      a.recipient = capitalize_first(s.raw(j));
      a.channel = channel_of(s.low(j + 2));
      a.header_tokens = absorb_connectors(s, j + 3);
      return a;
    }
    // send a (quick|short) email to Joe
    if (in(s.low(j), {"a", "an"})) ++j;
    if (in(s.low(j), {"quick", "short", "brief"})) ++j;
    if (channel_of(s.low(j)) && s.low(j + 1) == "to" && s.name_like(j + 2)) {
      a.kind = Addressing::Kind::kInstructionHeader;
      a.recipient = capitalize_first(s.raw(j + 2));
      a.channel = channel_of(s.low(j));
      a.header_tokens = absorb_connectors(s, j + 3);
      return a;
    }
    return a;
  }

  // email Ana that ... / text Joe saying ...
  if (in(verb, {"email", "text", "message"}) && s.name_like(i + 1)) {
    a.kind = Addressing::Kind::kInstructionHeader;
    a.recipient = capitalize_first(s.raw(i + 1));
    a.channel = channel_of(verb);
    a.header_tokens = absorb_connectors(s, i + 2);
    return a;
  }

  if (verb == "reply" && s.low(i + 1) == "to" && s.name_like(i + 2)) {
    a.kind = Addressing::Kind::kInstructionHeader;
    a.recipient = capitalize_first(s.raw(i + 2));
    a.header_tokens = absorb_connectors(s, i + 3);
    return a;
  }

  if (i == 0 && in(verb, {"hey", "hi", "hello", "dear"}) && s.name_like(1)) {
    a.kind = Addressing::Kind::kGreeting;
    a.recipient = capitalize_first(s.raw(1));
    if (verb == "dear") a.channel = ContentType::kEmail;
    if (verb == "hey") a.channel = ContentType::kMessage;
    a.header_tokens = s.low(2) == "," ? 3 : 2;
  }
  return a;
}

constexpr std::array<std::array<std::string_view, 2>, 17> kCreativityBigrams = {{
    {"write", "a"}, {"write", "an"}, {"write", "me"}, {"write", "some"}, {"write", "something"},
    {"make", "it"}, {"make", "the"}, {"make", "this"}, {"make", "them"}, {"come", "up"},
    {"compose", "a"}, {"draft", "a"}, {"create", "a"}, {"the", "perspective"}, {"in", "the"},
    {"tell", "a"}, {"a", "poem"},
}};

bool creativity_at(const Scanner& s, std::size_t i) {
  const auto& w = s.low(i);
  if (in(w, {"witty", "funny", "thoughtful", "creative", "heartfelt", "catchy", "poetic", "persuasive",
             "humorous", "inspiring", "playful", "whimsical", "eloquent", "engaging", "touching", "clever",
             "sarcastic", "brainstorm", "imagine", "poem", "story", "essay"})) {
    return true;
  }
  for (const auto& [a, b] : kCreativityBigrams) {
    if (w != a || s.low(i + 1) != b) continue;
    // "in the" only as part of "in the style of"
    if (a == "in") return s.low(i + 2) == "style";
    return true;
  }
  return false;
}

// Comma-separated note fragments of at least three words each.
bool comma_notes(const Words& lower, std::size_t begin) {
  std::size_t segments = 0;
  std::size_t words = 0;
  for (std::size_t i = begin; i < lower.size(); ++i) {
    const auto& t = lower[i];
    if (t == "," || is_sentence_end(t)) {
      if (words < 3) return false;
      ++segments;
      words = 0;
      if (is_sentence_end(t)) break;
      continue;
    }
    if (words == 0 && segments > 0 && lexical::is_conjunction(t)) return false;
    if (!is_punctuation_token(t)) ++words;
  }
  if (words >= 3) ++segments;
  return segments >= 3;
}

}  // namespace

std::vector<std::vector<std::string>> split_sentences(const std::vector<std::string>& tokens) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  for (const auto& t : tokens) {
    current.push_back(t);
    if (is_sentence_end(t)) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

TextAnalysis analyze_text(std::string_view text, const Lexicons& lexicons) {
  TextAnalysis out;
  out.tokens = token_texts(tokenize(text));
  const Scanner s(out.tokens, lexicons);
  out.addressing = detect_addressing(s);

  std::size_t first = s.low(0) == "please" ? 1 : 0;
  if (in(s.low(0), {"can", "could", "would"}) && s.low(1) == "you") first = 2;
  if (s.low(first) == "please") ++first;
  out.imperative = lexical::is_imperative_verb(s.low(first)) &&
                   out.addressing.kind != Addressing::Kind::kDictationHeader;

  const std::size_t body = out.addressing.kind == Addressing::Kind::kInstructionHeader ? out.addressing.header_tokens : 0;
  bool email_cue = false;
  bool message_cue = false;
  bool sentence_start = true;
  std::size_t entities = 0;
  bool has_you = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& w = s.low(i);
    if (is_punctuation_token(w)) {
      if (w == "?" && has_you) message_cue = true;
      if (is_sentence_end(w)) {
        sentence_start = true;
        has_you = false;
      }
      continue;
    }
    ++out.word_count;
    if (i >= body && creativity_at(s, i)) out.creativity_cue = true;
    if (in(w, {"email", "e-mail", "emails", "dear", "regards", "sincerely", "inbox"})) email_cue = true;
    if (in(w, {"hey", "hi", "hello", "text", "texts", "message", "messages", "msg", "dm", "chat"})) message_cue = true;
    if (w == "you" || w == "your") has_you = true;
    const auto& r = s.raw(i);
    if ((!sentence_start && starts_upper(r) && w != "i" && w.rfind("i'", 0) != 0) ||
        std::any_of(r.begin(), r.end(), [](unsigned char c) { return std::isdigit(c); })) {
      ++entities;
    }
    sentence_start = false;
  }
  if (email_cue) {
    out.cue_content_type = ContentType::kEmail;
  } else if (message_cue) {
    out.cue_content_type = ContentType::kMessage;
  }
  if (out.word_count > 0) out.entity_density = static_cast<double>(entities) / static_cast<double>(out.word_count);

  if (out.addressing.kind == Addressing::Kind::kDictationHeader) {
    Words lower;
    for (std::size_t i = 0; i < s.size(); ++i) lower.push_back(s.low(i));
    out.note_style = comma_notes(lower, out.addressing.header_tokens);
  }
  return out;
}

Intent classify_intent(const TextAnalysis& a) {
  Intent intent;
  const bool instruction = a.addressing.kind == Addressing::Kind::kInstructionHeader || a.imperative;
  intent.input_type = instruction ? InputType::kInstruction : InputType::kDictation;
  if (a.addressing.channel) {
    intent.content_type = *a.addressing.channel;
  } else if (a.cue_content_type) {
    intent.content_type = *a.cue_content_type;
  } else {
    intent.content_type = ContentType::kNotes;
  }
  const bool open = (instruction && a.creativity_cue) || a.note_style;
  intent.endedness = open ? Endedness::kOpen : Endedness::kClosed;
  return intent;
}

Intent classify_intent(std::string_view text) { return classify_intent(analyze_text(text)); }

Intent classify_intent(std::string_view text, std::optional<ContentType> content_override) {
  Intent intent = classify_intent(text);
  if (content_override) intent.content_type = *content_override;
  return intent;
}

}  // namespace voicecomp
