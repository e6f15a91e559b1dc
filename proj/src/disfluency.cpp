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

#include "voicecomp/disfluency.hpp"

#include "voicecomp/error.hpp"
#include "voicecomp/lexical.hpp"

namespace voicecomp {
namespace {

using lexical::WordClass;

// Positions still tagged FLUENT, so later rules see through earlier removals.
std::vector<std::size_t> active_positions(const std::vector<DisfluencyTag>& tags) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == DisfluencyTag::kFluent) out.push_back(i);
  }
  return out;
}

void tag_fillers(const std::vector<std::string>& w, std::vector<DisfluencyTag>& tags) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (lexical::is_filled_pause(w[i])) tags[i] = DisfluencyTag::kRestart;
  }
  // "you know" is a filler unless it is the verb phrase of a question or
  // clause ("do you know", "if you know").
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != "you" || w[i + 1] != "know") continue;
    const std::string_view prev = i > 0 ? std::string_view(w[i - 1]) : std::string_view();
    const std::string_view next = i + 2 < w.size() ? std::string_view(w[i + 2]) : std::string_view();
    const bool clausal = lexical::is_auxiliary(prev) || lexical::is_conjunction(prev) || prev == "as" ||
                         prev == "what" || prev == "that" || next == "that" || next == "what" ||
                         next == "how" || next == "where" || next == "who" || next == "when" ||
                         next == "if" || next == "why";
    if (!clausal) tags[i] = tags[i + 1] = DisfluencyTag::kRestart;
  }
}

void tag_repetitions(const std::vector<std::string>& w, std::size_t max_n, std::vector<DisfluencyTag>& tags) {
  const auto view = active_positions(tags);
  const std::size_t m = view.size();
  auto same = [&](std::size_t a, std::size_t b, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (w[view[a + k]] != w[view[b + k]]) return false;
    }
    return true;
  };
  std::size_t i = 0;
  while (i < m) {
    bool matched = false;
    for (std::size_t n = std::min(max_n, (m - i) / 2); n >= 1; --n) {
      if (!same(i, i + n, n)) continue;
      std::size_t copies = 2;
      while (i + (copies + 1) * n <= m && same(i, i + copies * n, n)) ++copies;
      for (std::size_t k = i; k < i + (copies - 1) * n; ++k) tags[view[k]] = DisfluencyTag::kRepetition;
      i += (copies - 1) * n;
      matched = true;
      break;
    }
    if (!matched) ++i;
  }
}

bool slots_compatible(std::string_view a, std::string_view b, bool& typed) {
  if (a == b) {
    typed = true;
    return true;
  }
  const auto ca = lexical::word_class(a);
  const auto cb = lexical::word_class(b);
  if (ca != cb || ca == WordClass::kFunction) return false;
  if (ca != WordClass::kContent) typed = true;
  return true;
}

void tag_replacements(const std::vector<std::string>& w, const DisfluencyConfig& cfg,
                      std::vector<DisfluencyTag>& tags) {
  auto run = [&](const std::vector<std::string>& cue, bool weak) {
    const auto view = active_positions(tags);
    const std::size_t m = view.size();
    const std::size_t len = cue.size();
    for (std::size_t c = 1; c + len < m; ++c) {
      bool hit = true;
      for (std::size_t k = 0; k < len && hit; ++k) hit = w[view[c + k]] == cue[k];
      if (!hit || tags[view[c]] != DisfluencyTag::kFluent) continue;
      const std::size_t after = c + len;
      const std::size_t limit = std::min({cfg.max_replacement_width, c, m - after});
      for (std::size_t n = limit; n >= 1; --n) {
        bool ok = true;
        bool typed = false;
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = tags[view[c - n + j]] == DisfluencyTag::kFluent &&
               slots_compatible(w[view[c - n + j]], w[view[after + j]], typed);
        }
        if (!ok || (weak && !typed)) continue;
        for (std::size_t k = c - n; k < after; ++k) tags[view[k]] = DisfluencyTag::kReplacement;
        break;
      }
    }
  };
  for (const auto& cue : cfg.strong_cues) run(cue, false);
  for (const auto& cue : cfg.weak_cues) run(cue, true);
}

void tag_restarts(const std::vector<std::string>& w, std::size_t max_fragment, std::vector<DisfluencyTag>& tags) {
  const auto view = active_positions(tags);
  const std::size_t m = view.size();
  auto dangling = [&](std::string_view x) {
    return lexical::is_determiner(x) || lexical::is_preposition(x) || lexical::is_conjunction(x);
  };

  // Utterance-initial fragment abandoned before a fresh subject or
  // imperative. The fragment must end on a word that cannot close a phrase,
  // so "tomorrow i want ..." is left alone.
  for (std::size_t k = 1; k <= std::min(max_fragment, m > 0 ? m - 1 : 0); ++k) {
    const std::string_view next = w[view[k]];
    if (!lexical::is_subject_pronoun(next) && !lexical::is_imperative_verb(next)) continue;
    bool clean = dangling(w[view[k - 1]]);
    for (std::size_t j = 0; j < k && clean; ++j) {
      clean = !lexical::is_auxiliary(w[view[j]]) && !lexical::is_subject_pronoun(w[view[j]]);
    }
    if (!clean) continue;
    for (std::size_t j = 0; j < k; ++j) tags[view[j]] = DisfluencyTag::kRestart;
    break;
  }

  // Mid-utterance: a determiner run cut off by a new subject ("to the we").
  for (std::size_t k = 1; k < m; ++k) {
    if (!lexical::is_subject_pronoun(w[view[k]]) || tags[view[k - 1]] != DisfluencyTag::kFluent) continue;
    if (!lexical::is_determiner(w[view[k - 1]])) continue;
    std::size_t start = k - 1;
    while (start > 0 && k - start < max_fragment && tags[view[start - 1]] == DisfluencyTag::kFluent &&
           (lexical::is_determiner(w[view[start - 1]]) || lexical::is_preposition(w[view[start - 1]]))) {
      --start;
    }
    for (std::size_t j = start; j < k; ++j) tags[view[j]] = DisfluencyTag::kRestart;
  }
}

}  // namespace

std::string_view to_string(DisfluencyTag tag) {
  switch (tag) {
    case DisfluencyTag::kFluent: return "FLUENT";
    case DisfluencyTag::kRepetition: return "REPETITION";
    case DisfluencyTag::kReplacement: return "REPLACEMENT";
    case DisfluencyTag::kRestart: return "RESTART";
  }
  return "FLUENT";
}

std::optional<DisfluencyTag> parse_disfluency_tag(std::string_view name) {
  for (auto t : {DisfluencyTag::kFluent, DisfluencyTag::kRepetition, DisfluencyTag::kReplacement,
                 DisfluencyTag::kRestart}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::vector<DisfluencyTag> RuleDisfluencyTagger::tag(const std::vector<Token>& tokens) const {
  std::vector<std::string> w;
  w.reserve(tokens.size());
  for (const auto& t : tokens) w.push_back(to_lower(t.text));
  std::vector<DisfluencyTag> tags(w.size(), DisfluencyTag::kFluent);
  if (config_.tag_fillers) tag_fillers(w, tags);
  tag_replacements(w, config_, tags);
  tag_repetitions(w, config_.max_repeat_ngram, tags);
  tag_restarts(w, config_.max_restart_fragment, tags);
  return tags;
}

std::vector<DisfluencyTag> tag_disfluencies(const std::vector<Token>& tokens, const DisfluencyConfig& config) {
  return RuleDisfluencyTagger(config).tag(tokens);
}

std::vector<Token> filter_disfluencies(const std::vector<Token>& tokens, const std::vector<DisfluencyTag>& tags) {
  if (tokens.size() != tags.size()) {
    throw ContractError("filter_disfluencies: " + std::to_string(tokens.size()) + " tokens but " +
                        std::to_string(tags.size()) + " tags");
  }
  std::vector<Token> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tags[i] != DisfluencyTag::kFluent) continue;
    Token t = tokens[i];
    t.index = out.size();
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace voicecomp
