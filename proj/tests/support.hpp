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

// Independent oracles and input generators shared by the unit and
// acceptance tests. Nothing here calls into the code under test.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace vctest {

using Words = std::vector<std::string>;

// Minimum number of unit-cost edits found by trying every operation at
// every position (exponential; only for short inputs).
inline std::size_t brute_force_edit_distance(const Words& a, const Words& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t best = go(i + 1, j) + 1;           // delete
    best = std::min(best, go(i, j + 1) + 1);       // insert
    best = std::min(best, go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1));
    memo[key] = best;
    return best;
  };
  return go(0, 0);
}

// Unmemoized enumeration of every alignment path, for tiny inputs.
inline std::size_t exhaustive_edit_distance(const Words& a, const Words& b, std::size_t i = 0, std::size_t j = 0) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  const std::size_t del = exhaustive_edit_distance(a, b, i + 1, j) + 1;
  const std::size_t ins = exhaustive_edit_distance(a, b, i, j + 1) + 1;
  const std::size_t sub = exhaustive_edit_distance(a, b, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
  return std::min({del, ins, sub});
}

inline Words random_words(std::mt19937_64& rng, std::size_t max_len, std::size_t alphabet) {
  static const char* kSymbols[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  Words out;
  for (std::size_t i = 0; i < len; ++i) {
    out.emplace_back(kSymbols[std::uniform_int_distribution<std::size_t>(0, alphabet - 1)(rng)]);
  }
  return out;
}

// Random canonical-punctuation text built from a small vocabulary.
inline std::string random_sentences(std::mt19937_64& rng, std::size_t max_sentences = 3) {
  static const std::vector<std::string> kWords = {
      "the", "team", "will", "meet", "on", "monday", "at", "noon", "he", "said", "his", "plan", "she",
      "sent", "her", "notes", "to", "john", "we", "need", "milk", "and", "bread", "it", "was",
      "their", "idea", "is", "a", "good", "one", "sam", "called", "march", "3", "really", "just"};
  std::uniform_int_distribution<std::size_t> n_sent(1, max_sentences);
  std::uniform_int_distribution<std::size_t> n_words(1, 9);
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  std::uniform_int_distribution<int> end(0, 5);
  std::uniform_int_distribution<int> comma(0, 7);
  std::string out;
  const auto sentences = n_sent(rng);
  for (std::size_t s = 0; s < sentences; ++s) {
    const auto words = n_words(rng);
    for (std::size_t w = 0; w < words; ++w) {
      std::string word = kWords[pick(rng)];
      if (w == 0) word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
      if (!out.empty()) out += ' ';
      out += word;
      if (w + 1 < words && comma(rng) == 0) out += ',';
    }
    out += end(rng) == 0 ? "?" : ".";
  }
  return out;
}

}  // namespace vctest
