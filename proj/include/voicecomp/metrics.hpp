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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/error.hpp"

namespace voicecomp {

using Words = std::vector<std::string>;

struct AlignmentOps {
  std::size_t hits = 0;
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t ref_len = 0;

  std::size_t errors() const noexcept { return substitutions + deletions + insertions; }
  AlignmentOps& operator+=(const AlignmentOps& o);
  friend bool operator==(const AlignmentOps&, const AlignmentOps&) = default;
};

enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

struct Alignment {
  AlignmentOps ops;
  std::vector<EditOp> trace;  // in reference order
};

// Unit-cost Levenshtein alignment. Among minimal alignments the backtrace
// prefers match, then substitution, then deletion, then insertion.
Alignment align_trace(const Words& ref, const Words& hyp);
AlignmentOps align(const Words& ref, const Words& hyp);

struct WerWrr {
  double wer = 0.0;
  double wrr = 0.0;
};

// wer = (S + D + I) / N, wrr = H / N. Throws ContractError when N == 0.
WerWrr wer_wrr(const AlignmentOps& ops);

// Words for WER scoring; with `normalize`, lowercased with punctuation removed.
Words scoring_words(std::string_view text, bool normalize = true);

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold positives
};

struct PrfCounts {
  std::size_t true_positive = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;

  PrfCounts& operator+=(const PrfCounts& o);
  PRF prf() const;
};

// Micro-averaged over positions: a position is positive when its label is in
// `targets`.
template <class Label>
PrfCounts tag_counts(const std::vector<Label>& gold, const std::vector<Label>& pred, const std::set<Label>& targets) {
  if (gold.size() != pred.size()) {
    throw ContractError("tag_prf: gold has " + std::to_string(gold.size()) + " labels, prediction has " +
                        std::to_string(pred.size()));
  }
  PrfCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = targets.count(gold[i]) > 0;
    const bool p = targets.count(pred[i]) > 0;
    c.gold += g;
    c.predicted += p;
    c.true_positive += g && p;
  }
  return c;
}

template <class Label>
PRF tag_prf(const std::vector<std::vector<Label>>& gold, const std::vector<std::vector<Label>>& pred,
            const std::set<Label>& targets) {
  if (gold.size() != pred.size()) throw ContractError("tag_prf: sequence counts differ");
  PrfCounts total;
  for (std::size_t i = 0; i < gold.size(); ++i) total += tag_counts(gold[i], pred[i], targets);
  return total.prf();
}

template <class Label>
PRF tag_prf(const std::vector<Label>& gold, const std::vector<Label>& pred, const std::set<Label>& targets) {
  return tag_counts(gold, pred, targets).prf();
}

// Sentence-level BLEU with brevity penalty against the closest reference
// length. For n >= 2 precisions are add-one smoothed; a zero unigram
// precision gives 0. An empty hypothesis scores 0.
double bleu(const std::vector<Words>& references, const Words& hypothesis, int max_n = 4);
// Corpus BLEU: clipped counts and lengths summed over all segments first.
double corpus_bleu(const std::vector<std::vector<Words>>& references, const std::vector<Words>& hypotheses,
                   int max_n = 4);

enum class RougeVariant { kR1, kR2, kRL };

// support is the reference n-gram (or token) count.
PRF rouge(const Words& reference, const Words& hypothesis, RougeVariant variant);

std::size_t lcs_length(const Words& a, const Words& b);

}  // namespace voicecomp
