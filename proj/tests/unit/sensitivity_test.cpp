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

#include <random>

#include "voicecomp/error.hpp"
#include "voicecomp/sensitivity.hpp"
#include "voicecomp/text.hpp"

using namespace voicecomp;

namespace {

// Naive oracle: case-insensitive substring search, no word boundaries.
bool substring_match(std::string_view text, std::string_view term) {
  return to_lower(text).find(to_lower(term)) != std::string::npos;
}

}  // namespace

TEST_SUITE("sensitivity") {

TEST_CASE("clean text scores zero") {
  const auto v = sensitivity_score("Pick up groceries.");
  CHECK(v.score == 0.0);
  CHECK_FALSE(v.blocked);
  CHECK(v.matched_terms.empty());
}

TEST_CASE("block tier terms block on their own") {
  for (const auto& term : LexiconSensitivity::bundled().terms()) {
    if (term.tier != SensitivityTier::kBlock) continue;
    const auto v = sensitivity_score("well " + term.text + " anyway");
    CHECK_MESSAGE(v.blocked, term.text);
    CHECK(v.score == 1.0);
  }
}

TEST_CASE("score tier terms accumulate") {
  CHECK(sensitivity_score("you idiot").score == doctest::Approx(0.25));
  CHECK(sensitivity_score("stupid idiot, i hate it").score == doctest::Approx(0.75));
  const auto v = sensitivity_score("idiot idiot idiot idiot idiot");
  CHECK(v.score == 1.0);
  CHECK(v.blocked);
  CHECK(v.matched_terms == std::vector<std::string>{"idiot"});
}

TEST_CASE("word boundaries versus the substring oracle") {
  CHECK(substring_match("Scunthorpe", "cunt"));
  CHECK(sensitivity_score("Scunthorpe").score == 0.0);
  CHECK(sensitivity_score("I have a class in Scunthorpe on the hateful... no, hatefully").score == 0.0);
  CHECK(sensitivity_score("Self-Harm").blocked);
  CHECK(sensitivity_score("self harm").blocked);
  CHECK(sensitivity_score("I could KILL MYSELF").blocked);

  // Every word of a whole-word match is also a substring match.
  static const std::vector<std::string> pieces = {"scunt", "horpe", " ", "hate", "ful", "idiot", "s",
                                                  "-", "self", "harm", "dumb", "bell", "."};
  std::mt19937_64 rng(17);
  for (int n = 0; n < 1000; ++n) {
    std::string text;
    for (int k = static_cast<int>(rng() % 8); k >= 0; --k) text += pieces[rng() % pieces.size()];
    for (const auto& term : sensitivity_score(text).matched_terms) {
      for (const auto& w : boundary_words(term)) CHECK(substring_match(text, w));
    }
  }
}

TEST_CASE("custom lexicons") {
  const auto lex = LexiconSensitivity::parse("# comment\nfoo\nbar baz:block\n");
  REQUIRE(lex.terms().size() == 2);
  CHECK(lex.terms()[1].words == std::vector<std::string>{"bar", "baz"});
  CHECK(lex.assess("Foo!").score == 0.25);
  CHECK(lex.assess("bar, baz").blocked);
  CHECK_FALSE(lex.assess("baz bar").blocked);
  CHECK_THROWS_AS(LexiconSensitivity::parse("foo:maybe"), DataError);
  CHECK(boundary_words("Don't stop-now!") == std::vector<std::string>{"don", "t", "stop", "now"});
}

}  // TEST_SUITE
