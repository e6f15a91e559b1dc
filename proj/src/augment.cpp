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

#include "voicecomp/augment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <unordered_map>

#include "voicecomp/error.hpp"
#include "voicecomp/lexical.hpp"
#include "voicecomp/rng.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {
namespace {

using Tag = DisfluencyTag;

constexpr std::array<std::string_view, 8> kKindNames = {
    "homophones", "fillers", "strip_punct", "repeat_content",
    "word_noise", "sentence_shuffle", "gender_neutral", "name_date_swap"};

bool is_sentence_end(std::string_view t) { return t == "." || t == "?" || t == "!"; }

// Copies the case pattern of `like` (capitalized or not) onto `word`.
std::string match_case(std::string_view like, std::string_view word) {
  return starts_upper(like) ? capitalize_first(word) : std::string(word);
}

struct Builder {
  TaggedTokens out;
  void push(std::string token, Tag tag) {
    out.tokens.push_back(std::move(token));
    out.tags.push_back(tag);
  }
};

TaggedTokens homophones(const AugmentationSpec& spec, const TaggedTokens& in, const Lexicons& lex) {
  Rng rng(spec.seed, "augment.homophones");
  TaggedTokens out = in;
  for (auto& tok : out.tokens) {
    const auto w = to_lower(tok);
    if (!lex.homophones.covers(w) || !rng.bernoulli(spec.rate)) continue;
    const auto alts = lex.homophones.alternatives(w);
    tok = match_case(tok, alts[rng.below(alts.size())]);
  }
  return out;
}

TaggedTokens fillers(const AugmentationSpec& spec, const TaggedTokens& in, const Lexicons& lex) {
  Rng rng(spec.seed, "augment.fillers");
  Builder b;
  const auto maybe_insert = [&] {
    if (lex.fillers.empty() || !rng.bernoulli(spec.rate)) return;
    for (const auto& w : lex.fillers[rng.below(lex.fillers.size())]) b.push(w, Tag::kRestart);
  };
  for (std::size_t i = 0; i < in.tokens.size(); ++i) {
    maybe_insert();
    b.push(in.tokens[i], in.tags[i]);
  }
  maybe_insert();
  return b.out;
}

TaggedTokens strip_punct(const AugmentationSpec& spec, const TaggedTokens& in) {
  Rng rng(spec.seed, "augment.strip_punct");
  Builder b;
  for (std::size_t i = 0; i < in.tokens.size(); ++i) {
    if (in.tokens[i] == "." && rng.bernoulli(spec.rate)) continue;
    b.push(in.tokens[i], in.tags[i]);
  }
  return b.out;
}

std::vector<std::pair<std::size_t, std::size_t>> sentence_ranges(const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t start = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_sentence_end(tokens[i])) {
      ranges.emplace_back(start, i + 1);
      start = i + 1;
    }
  }
  if (start < tokens.size()) ranges.emplace_back(start, tokens.size());
  return ranges;
}

// Per word position, with probability rate, the word (60%) or a 2-4 word
// phrase within the sentence (40%) is said twice. Then, in multi-sentence
// text, each sentence is said twice with probability rate * 0.15.
TaggedTokens repeat_content(const AugmentationSpec& spec, const TaggedTokens& in) {
  Rng rng(spec.seed, "augment.repeat_content");
  Builder words;
  std::size_t skip_until = 0;
  for (std::size_t i = 0; i < in.tokens.size(); ++i) {
    if (i >= skip_until && !is_punctuation_token(in.tokens[i]) && rng.bernoulli(spec.rate)) {
      std::size_t len = 1;
      if (rng.uniform() >= 0.6) {
        const auto want = 2 + static_cast<std::size_t>(rng.below(3));
        while (len < want && i + len < in.tokens.size() && !is_punctuation_token(in.tokens[i + len])) ++len;
      }
      for (std::size_t k = i; k < i + len; ++k) words.push(in.tokens[k], Tag::kRepetition);
      skip_until = i + len;
    }
    words.push(in.tokens[i], in.tags[i]);
  }
  const auto ranges = sentence_ranges(words.out.tokens);
  if (ranges.size() < 2) return words.out;
  Builder b;
  for (const auto& [s, e] : ranges) {
    if (rng.bernoulli(spec.rate * 0.15)) {
      for (auto k = s; k < e; ++k) b.push(words.out.tokens[k], Tag::kRepetition);
    }
    for (auto k = s; k < e; ++k) b.push(words.out.tokens[k], words.out.tags[k]);
  }
  return b.out;
}

TaggedTokens word_noise(const AugmentationSpec& spec, const TaggedTokens& in) {
  Rng rng(spec.seed, "augment.word_noise");
  const auto& noise = noise_words();
  Builder b;
  for (std::size_t i = 0; i < in.tokens.size(); ++i) {
    const auto& tok = in.tokens[i];
    if (is_punctuation_token(tok) || !rng.bernoulli(spec.rate)) {
      b.push(tok, in.tags[i]);
      continue;
    }
    if (std::find(noise.begin(), noise.end(), tok) != noise.end()) continue;  // lowercase only
    b.push(noise[rng.below(noise.size())], Tag::kFluent);
    b.push(tok, in.tags[i]);
  }
  return b.out;
}

TaggedTokens sentence_shuffle(const AugmentationSpec& spec, const TaggedTokens& in) {
  Rng rng(spec.seed, "augment.sentence_shuffle");
  const auto ranges = sentence_ranges(in.tokens);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (rng.bernoulli(spec.rate)) chosen.push_back(i);
  }
  auto order = chosen;
  rng.shuffle(order.begin(), order.end());
  std::vector<std::size_t> placement(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) placement[i] = i;
  for (std::size_t k = 0; k < chosen.size(); ++k) placement[chosen[k]] = order[k];
  Builder b;
  for (const auto idx : placement) {
    for (auto k = ranges[idx].first; k < ranges[idx].second; ++k) b.push(in.tokens[k], in.tags[k]);
  }
  return b.out;
}

const std::unordered_map<std::string, std::string>& pronoun_table() {
  static const std::unordered_map<std::string, std::string> table = {
      {"he", "they"},          {"she", "they"},          {"him", "them"},        {"his", "their"},
      {"hers", "theirs"},      {"himself", "themselves"}, {"herself", "themselves"},
      {"he's", "they're"},     {"she's", "they're"},     {"he'll", "they'll"},   {"she'll", "they'll"},
      {"he'd", "they'd"},      {"she'd", "they'd"},
  };
  return table;
}

std::string agree_with_they(std::string_view verb) {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"is", "are"},       {"was", "were"},       {"has", "have"},    {"does", "do"},
      {"isn't", "aren't"}, {"wasn't", "weren't"}, {"hasn't", "haven't"}, {"doesn't", "don't"},
  };
  const auto it = table.find(verb);
  return it == table.end() ? std::string() : std::string(it->second);
}

// Document-level: with probability rate the whole text is rewritten.
// Third-person verb forms other than be/have/do are left as they are.
TaggedTokens gender_neutral(const AugmentationSpec& spec, const TaggedTokens& in) {
  Rng rng(spec.seed, "augment.gender_neutral");
  if (!rng.bernoulli(spec.rate)) return in;
  TaggedTokens out = in;
  const auto& table = pronoun_table();
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    const auto w = to_lower(out.tokens[i]);
    std::string replacement;
    if (w == "her") {
      const auto next = i + 1 < out.tokens.size() ? to_lower(out.tokens[i + 1]) : std::string();
      const bool possessive = !next.empty() && !is_punctuation_token(next) && !lexical::is_function_word(next) &&
                              !lexical::is_stopword(next);
      replacement = possessive ? "their" : "them";
    } else if (const auto it = table.find(w); it != table.end()) {
      replacement = it->second;
    } else {
      continue;
    }
    if (w == "his") {
      const auto next = i + 1 < out.tokens.size() ? out.tokens[i + 1] : std::string();
      if (next.empty() || is_punctuation_token(next)) replacement = "theirs";
    }
    out.tokens[i] = match_case(out.tokens[i], replacement);
    if ((w == "he" || w == "she") && i + 1 < out.tokens.size()) {
      const auto verb = agree_with_they(to_lower(out.tokens[i + 1]));
      if (!verb.empty()) out.tokens[i + 1] = match_case(out.tokens[i + 1], verb);
    }
  }
  return out;
}

const std::array<std::string_view, 12> kMonthNames = {
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December"};

std::optional<unsigned> parse_uint(std::string_view s) {
  unsigned v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::string ordinal_suffix(unsigned day) {
  if (day % 100 >= 11 && day % 100 <= 13) return "th";
  switch (day % 10) {
    case 1: return "st";
    case 2: return "nd";
    case 3: return "rd";
    default: return "th";
  }
}

// A day token after a month name: "7", "7th".
std::optional<std::pair<unsigned, bool>> parse_day(std::string_view tok) {
  bool suffixed = false;
  if (tok.size() > 2) {
    const auto tail = tok.substr(tok.size() - 2);
    if (tail == "st" || tail == "nd" || tail == "rd" || tail == "th") {
      tok.remove_suffix(2);
      suffixed = true;
    }
  }
  const auto v = parse_uint(tok);
  if (!v || *v < 1 || *v > 31) return std::nullopt;
  return std::make_pair(*v, suffixed);
}

std::string two_digits(unsigned v) { return (v < 10 ? "0" : "") + std::to_string(v); }

// Month/day forms are shifted within a fixed non-leap year.
TaggedTokens name_date_swap(const AugmentationSpec& spec, const TaggedTokens& in, const Lexicons& lex) {
  using namespace std::chrono;
  Rng name_rng(spec.seed, "augment.name_date_swap.names");
  Rng date_rng(spec.seed, "augment.name_date_swap.dates");
  const auto offset = days(1 + static_cast<int>(date_rng.below(27)));
  std::unordered_map<std::string, std::string> mapping;
  TaggedTokens out = in;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    auto& tok = out.tokens[i];
    std::string stem = tok;
    std::string possessive;
    if (stem.size() > 2 && stem.compare(stem.size() - 2, 2, "'s") == 0) {
      possessive = "'s";
      stem.resize(stem.size() - 2);
    }
    if (!lex.nonwestern_names.empty() &&
        std::find(lex.western_names.begin(), lex.western_names.end(), stem) != lex.western_names.end()) {
      auto it = mapping.find(stem);
      if (it == mapping.end()) {
        std::string target = stem;
        if (name_rng.bernoulli(spec.rate)) target = lex.nonwestern_names[name_rng.below(lex.nonwestern_names.size())];
        it = mapping.emplace(stem, std::move(target)).first;
      }
      tok = it->second + possessive;
      continue;
    }

    const auto month_it = std::find(kMonthNames.begin(), kMonthNames.end(), tok);
    if (month_it != kMonthNames.end() && i + 1 < out.tokens.size()) {
      const auto day = parse_day(out.tokens[i + 1]);
      if (!day) continue;
      const auto m = static_cast<unsigned>(month_it - kMonthNames.begin()) + 1;
      const year_month_day ymd{year{2001}, month{m}, std::chrono::day{day->first}};
      if (!ymd.ok()) continue;
      if (!date_rng.bernoulli(spec.rate)) continue;
      const year_month_day shifted{sys_days{ymd} + offset};
      tok = std::string(kMonthNames[static_cast<unsigned>(shifted.month()) - 1]);
      const auto d = static_cast<unsigned>(shifted.day());
      out.tokens[i + 1] = std::to_string(d) + (day->second ? ordinal_suffix(d) : "");
      ++i;
      continue;
    }

    // ISO 8601 calendar date.
    if (tok.size() == 10 && tok[4] == '-' && tok[7] == '-') {
      const auto y = parse_uint(std::string_view(tok).substr(0, 4));
      const auto mo = parse_uint(std::string_view(tok).substr(5, 2));
      const auto d = parse_uint(std::string_view(tok).substr(8, 2));
      if (!y || !mo || !d) continue;
      const year_month_day ymd{year{static_cast<int>(*y)}, month{*mo}, std::chrono::day{*d}};
      if (!ymd.ok() || !date_rng.bernoulli(spec.rate)) continue;
      const year_month_day shifted{sys_days{ymd} + offset};
      tok = std::to_string(static_cast<int>(shifted.year())) + "-" +
            two_digits(static_cast<unsigned>(shifted.month())) + "-" + two_digits(static_cast<unsigned>(shifted.day()));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(AugmentKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

AugmentKind parse_augment_kind(std::string_view name) {
  const auto lower = to_lower(name);
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == lower) return kAllAugmentKinds[i];
  }
  throw DataError("unknown augmentation kind '" + std::string(name) + "'");
}

void AugmentationSpec::validate() const {
  if (!(rate >= 0.0 && rate <= 1.0)) throw ContractError("augmentation rate must lie in [0, 1]");
}

AugmentationSpec parse_augmentation_spec(std::string_view text) {
  const std::string s = normalize_whitespace(text);
  const auto c1 = s.find(':');
  if (c1 == std::string::npos) throw DataError("augmentation spec '" + s + "' must look like kind:rate[:seed]");
  const auto c2 = s.find(':', c1 + 1);
  AugmentationSpec spec;
  spec.kind = parse_augment_kind(s.substr(0, c1));
  const auto rate_text = s.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1);
  try {
    std::size_t used = 0;
    spec.rate = std::stod(rate_text, &used);
    if (used != rate_text.size()) throw std::invalid_argument(rate_text);
  } catch (const std::logic_error&) {
    throw DataError("augmentation spec '" + s + "': invalid rate '" + rate_text + "'");
  }
  if (c2 != std::string::npos) {
    const auto seed_text = s.substr(c2 + 1);
    const auto* end = seed_text.data() + seed_text.size();
    const auto [ptr, ec] = std::from_chars(seed_text.data(), end, spec.seed);
    if (ec != std::errc() || ptr != end || seed_text.empty()) {
      throw DataError("augmentation spec '" + s + "': invalid seed '" + seed_text + "'");
    }
  }
  if (!(spec.rate >= 0.0 && spec.rate <= 1.0)) throw DataError("augmentation spec '" + s + "': rate must lie in [0, 1]");
  return spec;
}

std::vector<AugmentationSpec> parse_augmentation_chain(std::string_view text) {
  std::vector<AugmentationSpec> specs;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find(',', begin);
    if (end == std::string_view::npos) end = text.size();
    const auto part = normalize_whitespace(text.substr(begin, end - begin));
    if (!part.empty()) specs.push_back(parse_augmentation_spec(part));
    begin = end + 1;
  }
  return specs;
}

TaggedTokens TaggedTokens::fluent(std::vector<std::string> tokens) {
  TaggedTokens t;
  t.tags.assign(tokens.size(), DisfluencyTag::kFluent);
  t.tokens = std::move(tokens);
  return t;
}

TaggedTokens apply_augmentation(const AugmentationSpec& spec, const TaggedTokens& input, const Lexicons& lexicons) {
  spec.validate();
  if (input.tokens.size() != input.tags.size()) throw ContractError("apply_augmentation: tokens and tags differ in length");
  if (spec.rate == 0.0) return input;
  switch (spec.kind) {
    case AugmentKind::kHomophones: return homophones(spec, input, lexicons);
    case AugmentKind::kFillers: return fillers(spec, input, lexicons);
    case AugmentKind::kStripPunct: return strip_punct(spec, input);
    case AugmentKind::kRepeatContent: return repeat_content(spec, input);
    case AugmentKind::kWordNoise: return word_noise(spec, input);
    case AugmentKind::kSentenceShuffle: return sentence_shuffle(spec, input);
    case AugmentKind::kGenderNeutral: return gender_neutral(spec, input);
    case AugmentKind::kNameDateSwap: return name_date_swap(spec, input, lexicons);
  }
  throw ContractError("apply_augmentation: unknown kind");
}

std::string apply_augmentation(const AugmentationSpec& spec, std::string_view text, const Lexicons& lexicons) {
  auto tokens = token_texts(tokenize(text));
  const auto out = apply_augmentation(spec, TaggedTokens::fluent(tokens), lexicons);
  if (out.tokens == tokens) return std::string(text);
  return detokenize(out.tokens);
}

std::string compose_augmentations(const std::vector<AugmentationSpec>& specs, std::string_view text,
                                  const Lexicons& lexicons) {
  std::string current(text);
  for (const auto& spec : specs) current = apply_augmentation(spec, current, lexicons);
  return current;
}

TaggedTokens compose_augmentations(const std::vector<AugmentationSpec>& specs, const TaggedTokens& input,
                                   const Lexicons& lexicons) {
  TaggedTokens current = input;
  for (const auto& spec : specs) current = apply_augmentation(spec, current, lexicons);
  return current;
}

const std::vector<std::string>& noise_words() {
  static const std::vector<std::string> words = {
      "just", "really", "very", "actually", "basically", "quite", "also", "literally", "maybe", "still", "even"};
  return words;
}

bool is_gendered_pronoun(std::string_view w) { return w == "her" || pronoun_table().count(std::string(w)) > 0; }

}  // namespace voicecomp
