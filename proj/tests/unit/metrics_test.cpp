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


#include <doctest.h>

#include <cmath>
#include <random>

#include "metric_fixtures.hpp"
#include "support.hpp"
#include "voicecomp/error.hpp"
#include "voicecomp/metrics.hpp"
#include "voicecomp/punctuation.hpp"

using namespace voicecomp;

namespace {

RougeVariant variant_of(char c) { return c == '1' ? RougeVariant::kR1 : c == '2' ? RougeVariant::kR2 : RougeVariant::kRL; }

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("align examples") {
  CHECK(align({"a", "b"}, {"a", "b"}) == AlignmentOps{2, 0, 0, 0, 2});
  CHECK(align({"the", "cat", "sat"}, {"the", "cat", "sat", "down"}) == AlignmentOps{3, 0, 0, 1, 3});
  CHECK(align({}, {"x"}) == AlignmentOps{0, 0, 0, 1, 0});
  CHECK(align({"x"}, {}) == AlignmentOps{0, 0, 1, 0, 1});
  CHECK(align({"a", "b", "c"}, {"a", "x", "c"}) == AlignmentOps{2, 1, 0, 0, 3});
}

TEST_CASE("align matches the brute-force edit distance") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 1000; ++n) {
    const auto a = vctest::random_words(rng, 8, 1 + rng() % 5);
    const auto b = vctest::random_words(rng, 8, 1 + rng() % 5);
    const auto al = align_trace(a, b);
    const auto& ops = al.ops;
    REQUIRE(ops.errors() == vctest::brute_force_edit_distance(a, b));
    CHECK(ops.hits + ops.substitutions + ops.deletions == a.size());
    CHECK(ops.hits + ops.substitutions + ops.insertions == b.size());
    CHECK(ops.ref_len == a.size());
    std::size_t i = 0, j = 0, errors = 0;
    for (auto op : al.trace) {
      switch (op) {
        case EditOp::kMatch: CHECK(a[i++] == b[j++]); break;
        case EditOp::kSubstitute: CHECK(a[i++] != b[j++]); ++errors; break;
        case EditOp::kDelete: ++i; ++errors; break;
        case EditOp::kInsert: ++j; ++errors; break;
      }
    }
    CHECK(i == a.size());
    CHECK(j == b.size());
    CHECK(errors == ops.errors());
  }
}

TEST_CASE("the two oracles agree on tiny inputs") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 200; ++n) {
    const auto a = vctest::random_words(rng, 5, 3);
    const auto b = vctest::random_words(rng, 5, 3);
    CHECK(vctest::exhaustive_edit_distance(a, b) == vctest::brute_force_edit_distance(a, b));
  }
}

TEST_CASE("wer and wrr") {
  const auto id = wer_wrr(align({"a", "b"}, {"a", "b"}));
  CHECK(id.wer == 0.0);
  CHECK(id.wrr == 1.0);
  const auto ins = wer_wrr(AlignmentOps{3, 0, 0, 1, 3});
  CHECK(ins.wer == doctest::Approx(1.0 / 3.0));
  CHECK(ins.wrr == 1.0);
  CHECK_THROWS_AS(wer_wrr(AlignmentOps{}), ContractError);
  CHECK(wer_wrr(align({"a"}, {"x", "y", "z"})).wer == 3.0);

  std::mt19937_64 rng(9);
  for (int n = 0; n < 300; ++n) {
    const auto a = vctest::random_words(rng, 6, 3);
    const auto b = vctest::random_words(rng, 6, 3);
    if (a.empty()) continue;
    const auto w = wer_wrr(align(a, b));
    CHECK((w.wer == 0.0) == (a == b));
    CHECK(w.wrr >= 0.0);
    CHECK(w.wrr <= 1.0);
  }
  CHECK(scoring_words("Hello, World!") == Words{"hello", "world"});
  CHECK(scoring_words("Hello, World!", false) == Words{"Hello", ",", "World", "!"});
}

TEST_CASE("tag_prf") {
  using enum PunctClass;
  const std::vector<PunctClass> gold = {kPeriod, kNone, kPeriod, kNone};
  CHECK(tag_prf(gold, gold, std::set{kPeriod}).f1 == 1.0);
  const auto half = tag_prf(gold, std::vector{kPeriod, kPeriod, kNone, kNone}, std::set{kPeriod});
  CHECK(half.precision == 0.5);
  CHECK(half.recall == 0.5);
  CHECK(half.f1 == 0.5);
  CHECK(half.support == 2);
  const auto none = tag_prf(gold, gold, std::set{kQuestionMark});
  CHECK(none.precision == 0.0);
  CHECK(none.recall == 0.0);
  CHECK(none.f1 == 0.0);
  CHECK(none.support == 0);
  CHECK_THROWS_AS(tag_prf(gold, std::vector{kNone}, std::set{kPeriod}), ContractError);
}

TEST_CASE("sentence metric agrees with per-label counts") {
  using enum PunctClass;
  const std::vector<PunctClass> labels = {kComma, kPeriod, kQuestionMark, kCapitalization, kNone};
  std::mt19937_64 rng(10);
  for (int n = 0; n < 300; ++n) {
    std::vector<PunctClass> g(1 + rng() % 12), p(g.size());
    for (auto& x : g) x = labels[rng() % labels.size()];
    for (auto& x : p) x = labels[rng() % labels.size()];
    const auto both = tag_counts(g, p, std::set{kPeriod, kQuestionMark});
    const auto per = tag_counts(g, p, std::set{kPeriod});
    const auto q = tag_counts(g, p, std::set{kQuestionMark});
    CHECK(both.gold == per.gold + q.gold);
    CHECK(both.predicted == per.predicted + q.predicted);
    std::size_t tp = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      tp += (g[i] == kPeriod || g[i] == kQuestionMark) && (p[i] == kPeriod || p[i] == kQuestionMark);
    }
    CHECK(both.true_positive == tp);
    CHECK(both.true_positive >= per.true_positive + q.true_positive);
    if (both.gold > 0) CHECK(tag_prf(g, g, std::set{kPeriod, kQuestionMark}).f1 == 1.0);
  }
}

TEST_CASE("hand-computed BLEU") {
  for (const auto& f : vctest::bleu_fixtures()) {
    std::vector<Words> refs;
    for (const auto& r : f.refs) refs.push_back(vctest::split_words(r));
    CAPTURE(f.hyp);
    CHECK(std::abs(bleu(refs, vctest::split_words(f.hyp), f.max_n) - f.expected) < 1e-9);
  }
  CHECK(bleu({{"a"}}, {}) == 0.0);
  CHECK_THROWS_AS(bleu({}, {"a"}), ContractError);
}

TEST_CASE("hand-computed ROUGE") {
  for (const auto& f : vctest::rouge_fixtures()) {
    const auto r = rouge(vctest::split_words(f.ref), vctest::split_words(f.hyp), variant_of(f.variant));
    CAPTURE(f.hyp);
    CHECK(std::abs(r.precision - f.precision) < 1e-9);
    CHECK(std::abs(r.recall - f.recall) < 1e-9);
    CHECK(std::abs(r.f1 - f.f1) < 1e-9);
  }
  CHECK(lcs_length({"a", "b", "c", "d"}, {"a", "c"}) == 2);
}

TEST_CASE("self-similarity is perfect") {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 100; ++n) {
    auto x = vctest::random_words(rng, 12, 6);
    if (x.empty()) x.push_back("a");
    CHECK(bleu({x}, x) == 1.0);
    for (auto v : {RougeVariant::kR1, RougeVariant::kR2, RougeVariant::kRL}) {
      if (v == RougeVariant::kR2 && x.size() < 2) continue;
      CHECK(rouge(x, x, v).f1 == 1.0);
    }
  }
}

TEST_CASE("corpus BLEU pools counts") {
  const Words r1 = {"the", "cat", "sat"}, h1 = {"the", "cat"};
  CHECK(corpus_bleu({{r1}}, {h1}) == doctest::Approx(bleu({r1}, h1)).epsilon(1e-12));
  const Words r2 = {"a", "b", "c", "d"}, h2 = {"a", "b", "c", "d", "e"};
  // Pooled: c = 7, r = 7; p1 = 6/7, p2 = (4+1)/(5+1), p3 = (2+1)/(3+1), p4 = (1+1)/(2+1).
  const double expected = std::pow(6.0 / 7.0 * 5.0 / 6.0 * 3.0 / 4.0 * 2.0 / 3.0, 0.25);
  CHECK(std::abs(corpus_bleu({{r1}, {r2}}, {h1, h2}) - expected) < 1e-9);
  CHECK_THROWS_AS(corpus_bleu({{r1}}, {}), ContractError);
}

}  // TEST_SUITE
