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

#include "voicecomp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "voicecomp/text.hpp"

namespace voicecomp {
namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngrams(const Words& words, std::size_t n) {
  NgramCounts out;
  if (n == 0 || words.size() < n) return out;
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    ++out[std::vector<std::string>(words.begin() + static_cast<std::ptrdiff_t>(i),
                                   words.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return out;
}

double harmonic(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

struct BleuStats {
  std::vector<std::size_t> matched;
  std::vector<std::size_t> total;
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;
};

void accumulate(BleuStats& s, const std::vector<Words>& refs, const Words& hyp, int max_n) {
  s.hyp_len += hyp.size();
  std::size_t best = 0;
  std::size_t best_diff = std::numeric_limits<std::size_t>::max();
  for (const auto& r : refs) {
    const auto diff = r.size() > hyp.size() ? r.size() - hyp.size() : hyp.size() - r.size();
    if (diff < best_diff || (diff == best_diff && r.size() < best)) {
      best = r.size();
      best_diff = diff;
    }
  }
  s.ref_len += best;
  for (int n = 1; n <= max_n; ++n) {
    const auto h = ngrams(hyp, static_cast<std::size_t>(n));
    NgramCounts max_ref;
    for (const auto& r : refs) {
      for (const auto& [g, c] : ngrams(r, static_cast<std::size_t>(n))) max_ref[g] = std::max(max_ref[g], c);
    }
    std::size_t matched = 0;
    std::size_t total = 0;
    for (const auto& [g, c] : h) {
      total += c;
      const auto it = max_ref.find(g);
      if (it != max_ref.end()) matched += std::min(c, it->second);
    }
    s.matched[static_cast<std::size_t>(n - 1)] += matched;
    s.total[static_cast<std::size_t>(n - 1)] += total;
  }
}

double bleu_from(const BleuStats& s, int max_n) {
  if (s.hyp_len == 0 || s.total[0] == 0 || s.matched[0] == 0) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const auto k = static_cast<std::size_t>(n - 1);
    double p;
    if (n == 1) {
      p = static_cast<double>(s.matched[k]) / static_cast<double>(s.total[k]);
    } else {
      p = (static_cast<double>(s.matched[k]) + 1.0) / (static_cast<double>(s.total[k]) + 1.0);
    }
    log_sum += std::log(p);
  }
  const double c = static_cast<double>(s.hyp_len);
  const double r = static_cast<double>(s.ref_len);
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return bp * std::exp(log_sum / max_n);
}

}  // namespace

AlignmentOps& AlignmentOps::operator+=(const AlignmentOps& o) {
  hits += o.hits;
  substitutions += o.substitutions;
  deletions += o.deletions;
  insertions += o.insertions;
  ref_len += o.ref_len;
  return *this;
}

Alignment align_trace(const Words& ref, const Words& hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      d[i][j] = std::min({diag, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }
  Alignment a;
  a.ops.ref_len = n;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && d[i][j] == d[i - 1][j - 1]) {
      a.trace.push_back(EditOp::kMatch);
      ++a.ops.hits;
      --i;
      --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      a.trace.push_back(EditOp::kSubstitute);
      ++a.ops.substitutions;
      --i;
      --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      a.trace.push_back(EditOp::kDelete);
      ++a.ops.deletions;
      --i;
    } else {
      a.trace.push_back(EditOp::kInsert);
      ++a.ops.insertions;
      --j;
    }
  }
  std::reverse(a.trace.begin(), a.trace.end());
  return a;
}

AlignmentOps align(const Words& ref, const Words& hyp) { return align_trace(ref, hyp).ops; }

WerWrr wer_wrr(const AlignmentOps& ops) {
  if (ops.ref_len == 0) throw ContractError("wer_wrr: empty reference");
  const double n = static_cast<double>(ops.ref_len);
  return {static_cast<double>(ops.errors()) / n, static_cast<double>(ops.hits) / n};
}

Words scoring_words(std::string_view text, bool normalize) {
  Words out;
  for (const auto& tok : tokenize(text)) {
    if (!normalize) {
      out.push_back(tok.text);
      continue;
    }
    if (is_punctuation_token(tok.text)) continue;
    out.push_back(to_lower(tok.text));
  }
  return out;
}

PrfCounts& PrfCounts::operator+=(const PrfCounts& o) {
  true_positive += o.true_positive;
  predicted += o.predicted;
  gold += o.gold;
  return *this;
}

PRF PrfCounts::prf() const {
  PRF r;
  r.support = gold;
  r.precision = predicted ? static_cast<double>(true_positive) / static_cast<double>(predicted) : 0.0;
  r.recall = gold ? static_cast<double>(true_positive) / static_cast<double>(gold) : 0.0;
  r.f1 = harmonic(r.precision, r.recall);
  return r;
}

double bleu(const std::vector<Words>& references, const Words& hypothesis, int max_n) {
  if (max_n < 1) throw ContractError("bleu: max_n must be positive");
  if (references.empty()) throw ContractError("bleu: no references");
  BleuStats s{std::vector<std::size_t>(static_cast<std::size_t>(max_n), 0),
              std::vector<std::size_t>(static_cast<std::size_t>(max_n), 0), 0, 0};
  accumulate(s, references, hypothesis, max_n);
  return bleu_from(s, max_n);
}

double corpus_bleu(const std::vector<std::vector<Words>>& references, const std::vector<Words>& hypotheses,
                   int max_n) {
  if (max_n < 1) throw ContractError("corpus_bleu: max_n must be positive");
  if (references.size() != hypotheses.size()) throw ContractError("corpus_bleu: segment counts differ");
  BleuStats s{std::vector<std::size_t>(static_cast<std::size_t>(max_n), 0),
              std::vector<std::size_t>(static_cast<std::size_t>(max_n), 0), 0, 0};
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    if (references[i].empty()) throw ContractError("corpus_bleu: segment without references");
    accumulate(s, references[i], hypotheses[i], max_n);
  }
  return bleu_from(s, max_n);
}

std::size_t lcs_length(const Words& a, const Words& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

PRF rouge(const Words& reference, const Words& hypothesis, RougeVariant variant) {
  std::size_t overlap = 0;
  std::size_t ref_total = 0;
  std::size_t hyp_total = 0;
  if (variant == RougeVariant::kRL) {
    overlap = lcs_length(reference, hypothesis);
    ref_total = reference.size();
    hyp_total = hypothesis.size();
  } else {
    const std::size_t n = variant == RougeVariant::kR1 ? 1 : 2;
    const auto r = ngrams(reference, n);
    const auto h = ngrams(hypothesis, n);
    for (const auto& [g, c] : r) ref_total += c;
    for (const auto& [g, c] : h) {
      hyp_total += c;
      const auto it = r.find(g);
      if (it != r.end()) overlap += std::min(c, it->second);
    }
  }
  PRF out;
  out.support = ref_total;
  out.precision = hyp_total ? static_cast<double>(overlap) / static_cast<double>(hyp_total) : 0.0;
  out.recall = ref_total ? static_cast<double>(overlap) / static_cast<double>(ref_total) : 0.0;
  out.f1 = harmonic(out.precision, out.recall);
  return out;
}

}  // namespace voicecomp
