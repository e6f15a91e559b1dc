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

#include "voicecomp/composer.hpp"

#include <algorithm>

#include "voicecomp/error.hpp"
#include "voicecomp/lexical.hpp"
#include "voicecomp/sensitivity.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {
namespace {

using Sentence = std::vector<std::string>;

bool in(std::string_view w, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool is_sentence_end(std::string_view t) { return t == "." || t == "?" || t == "!"; }

// Second-person rewrite of a clause about the recipient.
std::vector<std::string> address_recipient(const Sentence& clause, std::string_view pronoun) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < clause.size(); ++i) {
    const auto w = to_lower(clause[i]);
    const auto next = i + 1 < clause.size() ? to_lower(clause[i + 1]) : std::string();
    const bool he = pronoun == "him" && w == "he";
    const bool she = pronoun == "her" && w == "she";
    const bool they = pronoun == "them" && w == "they";
    if (he || she || they) {
      out.emplace_back("you");
      if (in(next, {"is", "are"})) {
        out.emplace_back("are");
        ++i;
      } else if (in(next, {"was", "were"})) {
        out.emplace_back("were");
        ++i;
      } else if (in(next, {"has", "have"})) {
        out.emplace_back("have");
        ++i;
      } else if (in(next, {"does", "do"})) {
        out.emplace_back("do");
        ++i;
      }
      continue;
    }
    if ((pronoun == "him" && w == "him") || (pronoun == "them" && w == "them")) {
      out.emplace_back("you");
    } else if ((pronoun == "him" && w == "his") || (pronoun == "them" && w == "their")) {
      out.emplace_back("your");
    } else if (pronoun == "her" && w == "her") {
      out.emplace_back(next.empty() || is_punctuation_token(next) || lexical::is_preposition(next) ? "you" : "your");
    } else {
      out.push_back(clause[i]);
    }
  }
  return out;
}

// "let him know (that) X" -> X, "tell her (that) X" -> X, "ask them (to) X"
// -> "Could you X?". Anything else is kept verbatim.
Sentence apply_pronoun_table(const Sentence& s) {
  std::size_t i = 0;
  while (i < s.size() && in(to_lower(s[i]), {"please", "and", "also"})) ++i;
  const auto low = [&](std::size_t k) { return k < s.size() ? to_lower(s[k]) : std::string(); };
  const auto pronoun = low(i + 1);
  if (!in(pronoun, {"him", "her", "them"})) return s;
  const auto verb = low(i);
  std::size_t body = 0;
  bool question = false;
  if (verb == "let" && low(i + 2) == "know") {
    body = i + 3;
    if (low(body) == "that") ++body;
  } else if (verb == "tell") {
    body = i + 2;
    if (low(body) == "that") ++body;
  } else if (verb == "ask" && low(i + 2) == "to") {
    body = i + 3;
    question = true;
  } else {
    return s;
  }
  Sentence clause(s.begin() + static_cast<std::ptrdiff_t>(body), s.end());
  while (!clause.empty() && is_punctuation_token(clause.back())) clause.pop_back();
  if (clause.empty()) return s;
  clause = address_recipient(clause, pronoun);
  Sentence out;
  if (question) {
    out = {"could", "you"};
    out.insert(out.end(), clause.begin(), clause.end());
    out.emplace_back("?");
  } else {
    out = std::move(clause);
    out.emplace_back(s.back() == "?" || s.back() == "!" ? s.back() : ".");
  }
  return out;
}

// "... at 8:00. PM." -> "... at 8:00 PM."
std::vector<Sentence> merge_dangling_meridiem(std::vector<Sentence> sentences) {
  std::vector<Sentence> out;
  for (auto& s : sentences) {
    std::vector<std::string> words;
    for (const auto& t : s) {
      if (!is_punctuation_token(t)) words.push_back(to_lower(t));
    }
    if (!out.empty() && words.size() == 1 && in(words[0], {"pm", "am", "p.m", "a.m"})) {
      auto& prev = out.back();
      const auto end = !prev.empty() && is_sentence_end(prev.back()) ? prev.end() - 1 : prev.end();
      for (const auto& t : s) {
        if (!is_punctuation_token(t)) prev.insert(end, t);
      }
      continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Sentence> split_comma_notes(const Sentence& s) {
  std::vector<Sentence> out;
  Sentence current;
  for (const auto& t : s) {
    if (t == "," || is_sentence_end(t)) {
      if (!current.empty()) {
        current.push_back(t == "," ? "." : t);
        out.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    current.push_back(t);
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string finish(Sentence s) {
  while (!s.empty() && (s.front() == "," || s.front() == ":")) s.erase(s.begin());
  if (s.empty()) return {};
  s.front() = capitalize_first(s.front());
  if (!is_sentence_end(s.back())) {
    if (is_punctuation_token(s.back())) s.pop_back();
    s.emplace_back(".");
  }
  return detokenize(s);
}

}  // namespace

std::size_t Composition::sentence_count() const {
  std::size_t n = 0;
  for (const auto& p : body) n += p.size();
  return n;
}

Composition compose_ft(std::string_view text, const Intent& intent, const ComposerConfig& config) {
  if (intent.input_type == InputType::kInstruction && intent.endedness == Endedness::kOpen) {
    throw ContractError("compose_ft: open-ended instructions must be routed to the LLM composer");
  }
  const auto analysis = analyze_text(text);
  const auto& addressing = analysis.addressing;
  Composition c;
  c.content_type = intent.content_type;

  // Greetings stay verbatim in messages and notes; emails get a fresh one.
  const bool keep_greeting = addressing.kind == Addressing::Kind::kGreeting && intent.content_type != ContentType::kEmail;
  std::size_t start = 0;
  if (addressing.kind != Addressing::Kind::kNone && !keep_greeting) {
    start = addressing.header_tokens;
    c.recipient = addressing.recipient;
  }
  const std::vector<std::string> rest(analysis.tokens.begin() + static_cast<std::ptrdiff_t>(start),
                                      analysis.tokens.end());
  std::vector<Sentence> sentences;
  for (auto& s : split_sentences(rest)) {
    if (c.recipient) s = apply_pronoun_table(s);
    if (analysis.note_style) {
      for (auto& part : split_comma_notes(s)) sentences.push_back(std::move(part));
    } else {
      sentences.push_back(std::move(s));
    }
  }
  sentences = merge_dangling_meridiem(std::move(sentences));

  std::vector<std::string> finished;
  for (auto& s : sentences) {
    auto line = finish(std::move(s));
    if (!line.empty()) finished.push_back(std::move(line));
  }
  if (finished.empty()) return c;
  c.body.push_back(std::move(finished));
  if (c.content_type == ContentType::kEmail && c.recipient) {
    c.salutation = config.greeting + " " + *c.recipient + ",";
    c.signoff = config.signoff;
  }
  return c;
}

std::string render(const Composition& c) {
  const auto join = [](const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += sep;
      out += parts[i];
    }
    return out;
  };
  switch (c.content_type) {
    case ContentType::kEmail: {
      std::vector<std::string> blocks;
      if (c.salutation) blocks.push_back(*c.salutation);
      for (const auto& p : c.body) blocks.push_back(join(p, " "));
      if (c.signoff) blocks.push_back(*c.signoff);
      return join(blocks, "\n\n");
    }
    case ContentType::kMessage: {
      std::vector<std::string> all;
      for (const auto& p : c.body) all.insert(all.end(), p.begin(), p.end());
      return join(all, " ");
    }
    case ContentType::kNotes: {
      std::vector<std::string> all;
      for (const auto& p : c.body) all.insert(all.end(), p.begin(), p.end());
      if (all.size() == 1) return all.front();
      for (auto& s : all) s = "- " + s;
      return join(all, "\n");
    }
  }
  return {};
}

std::vector<std::string> content_words(std::string_view text) {
  std::vector<std::string> out;
  for (auto& w : boundary_words(text)) {
    if (!lexical::is_function_word(w) && !lexical::is_stopword(w)) out.push_back(std::move(w));
  }
  return out;
}

std::set<std::string> template_boilerplate(const ComposerConfig& config) {
  std::set<std::string> out = {"you", "your", "are", "were", "have", "do", "could"};
  for (auto& w : boundary_words(config.greeting)) out.insert(std::move(w));
  for (auto& w : boundary_words(config.signoff)) out.insert(std::move(w));
  return out;
}

}  // namespace voicecomp
