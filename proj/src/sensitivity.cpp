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

#include "voicecomp/sensitivity.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>

#include "voicecomp/error.hpp"
#include "voicecomp/resources.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {

std::vector<std::string> boundary_words(std::string_view text) {
  const std::string lower = to_lower(text);
  std::vector<std::string> words;
  std::string current;
  const auto* s = reinterpret_cast<const uint8_t*>(lower.data());
  const auto length = static_cast<int32_t>(lower.size());
  for (int32_t i = 0; i < length;) {
    const int32_t begin = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c >= 0 && u_isalnum(c)) {
      current.append(lower, static_cast<std::size_t>(begin), static_cast<std::size_t>(i - begin));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

LexiconSensitivity LexiconSensitivity::parse(std::string_view lexicon, SensitivityConfig config) {
  LexiconSensitivity out;
  out.config_ = config;
  for (const auto& line : data_lines(lexicon)) {
    Term term;
    std::string body = line;
    const auto colon = line.rfind(':');
    if (colon != std::string::npos) {
      const std::string tier = normalize_whitespace(line.substr(colon + 1));
      if (tier == "block") {
        term.tier = SensitivityTier::kBlock;
      } else if (tier != "score") {
        throw DataError("sensitivity lexicon: unknown tier '" + tier + "' in: " + line);
      }
      body = normalize_whitespace(line.substr(0, colon));
    }
    term.words = boundary_words(body);
    if (term.words.empty()) throw DataError("sensitivity lexicon: empty term in: " + line);
    term.text = to_lower(body);
    out.terms_.push_back(std::move(term));
  }
  return out;
}

const LexiconSensitivity& LexiconSensitivity::bundled() {
  static const LexiconSensitivity lex = parse(embedded::sensitivity());
  return lex;
}

SensitivityVerdict LexiconSensitivity::assess(std::string_view text) const {
  const auto words = boundary_words(text);
  SensitivityVerdict verdict;
  double weighted = 0.0;
  for (const auto& term : terms_) {
    const std::size_t n = term.words.size();
    std::size_t hits = 0;
    for (std::size_t i = 0; i + n <= words.size(); ++i) {
      if (std::equal(term.words.begin(), term.words.end(), words.begin() + static_cast<std::ptrdiff_t>(i))) ++hits;
    }
    if (hits == 0) continue;
    verdict.matched_terms.push_back(term.text);
    const double w = term.tier == SensitivityTier::kBlock ? config_.block_weight : config_.score_weight;
    weighted += w * static_cast<double>(hits);
  }
  verdict.score = std::min(1.0, weighted);
  verdict.blocked = verdict.score >= config_.block_threshold;
  return verdict;
}

SensitivityVerdict sensitivity_score(std::string_view text, const SensitivityClassifier& classifier) {
  return classifier.assess(text);
}

}  // namespace voicecomp
