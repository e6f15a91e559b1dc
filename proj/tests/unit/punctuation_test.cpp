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

#include <filesystem>
#include <random>

#include "support.hpp"
#include "voicecomp/error.hpp"
#include "voicecomp/punctuation.hpp"

using namespace voicecomp;

namespace {

constexpr PunctLabel L(bool cap, AppendClass a) { return {cap, a}; }
using enum AppendClass;

double label_agreement(const PunctTaggerModel& model, const std::string& sentence) {
  const auto ex = extract_punct_labels(sentence);
  const auto pred = restore_punctuation(make_tokens(ex.tokens), model);
  std::size_t same = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) same += pred[i] == ex.labels[i];
  return static_cast<double>(same) / static_cast<double>(pred.size());
}

}  // namespace

TEST_SUITE("punctuation") {

TEST_CASE("extract_punct_labels") {
  const auto a = extract_punct_labels("Hello. How are you?");
  CHECK(a.tokens == std::vector<std::string>{"hello", "how", "are", "you"});
  CHECK(a.labels == std::vector{L(true, kPeriod), L(true, kNone), L(false, kNone), L(false, kQuestion)});
  const auto b = extract_punct_labels("yes");
  CHECK(b.tokens == std::vector<std::string>{"yes"});
  CHECK(b.labels == std::vector{L(false, kNone)});
  const auto c = extract_punct_labels("Wait; go");
  CHECK(c.labels == std::vector{L(true, kComma), L(false, kNone)});
  CHECK(extract_punct_labels("Stop!").labels == std::vector{L(true, kQuestion)});
  CHECK(extract_punct_labels("").tokens.empty());
}

TEST_CASE("extract_punct_labels rejects unsupported characters") {
  CHECK_THROWS_AS(extract_punct_labels("He said \"hi\""), DataError);
  try {
    extract_punct_labels("a (b)");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("apply_punct_labels") {
  CHECK(apply_punct_labels({"how", "are", "you"}, {L(true, kNone), L(false, kNone), L(false, kQuestion)}) ==
        "How are you?");
  CHECK(apply_punct_labels({"yes"}, {L(true, kPeriod)}) == "Yes.");
  CHECK(apply_punct_labels({"ok"}, {L(true, kNone)}) == "Ok.");
  CHECK(apply_punct_labels({}, {}) == "");
  CHECK_THROWS_AS(apply_punct_labels({"a", "b"}, {L(false, kNone)}), ContractError);
}

TEST_CASE("round trip is the identity on canonical text") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto text = vctest::random_sentences(rng);
    const auto ex = extract_punct_labels(text);
    REQUIRE(apply_punct_labels(ex.tokens, ex.labels) == text);
  }
}

TEST_CASE("projection prefers appended punctuation") {
  CHECK(project(L(true, kNone)) == PunctClass::kCapitalization);
  CHECK(project(L(true, kPeriod)) == PunctClass::kPeriod);
  CHECK(project(L(false, kComma)) == PunctClass::kComma);
  CHECK(project(L(false, kQuestion)) == PunctClass::kQuestionMark);
  CHECK(project(L(false, kNone)) == PunctClass::kNone);
  for (int id = 0; id < PunctLabel::kCount; ++id) CHECK(PunctLabel::from_id(id).id() == id);
}

TEST_CASE("training contracts") {
  CHECK_THROWS_AS(train_punct_tagger({}, 1, 0), ContractError);
  CHECK_THROWS_AS(train_punct_tagger({"Hi."}, 0, 0), ContractError);
  const std::vector<std::string> corpus = {"We met with Joe today.", "Are you coming to the meeting later?"};
  const auto a = train_punct_tagger(corpus, 10, 42);
  CHECK(a == train_punct_tagger(corpus, 10, 42));
  for (const auto& s : corpus) CHECK(label_agreement(a, s) >= 0.9);
}

TEST_CASE("overfitting one sentence reproduces its labels") {
  const std::string s = "Send the report to Ana, then call me. Is that clear?";
  const auto model = train_punct_tagger({s}, 20, 1);
  const auto ex = extract_punct_labels(s);
  CHECK(restore_punctuation(make_tokens(ex.tokens), model) == ex.labels);
}

TEST_CASE("restore_punctuation edge cases") {
  const auto model = train_punct_tagger({"Hello there.", "Hi."}, 3, 0);
  CHECK(restore_punctuation({}, model).empty());
  const auto hi = restore_punctuation(make_tokens({"hi"}), model);
  REQUIRE(hi.size() == 1);
  CHECK(hi[0].capitalize);
  const auto toks = make_tokens({"we", "met", "joe", "today"});
  CHECK(restore_punctuation(toks, model) == restore_punctuation(toks, model));
}

TEST_CASE("model serialization round trips") {
  const auto model = train_punct_tagger({"We met with Joe today.", "Call me, please."}, 2, 9);
  CHECK(PunctTaggerModel::from_json(model.to_json()) == model);
  const auto path = std::filesystem::temp_directory_path() / "voicecomp_punct_model.json";
  model.save(path);
  CHECK(PunctTaggerModel::load(path) == model);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(PunctTaggerModel::from_json("{\"format\":\"other\"}"), DataError);
  CHECK_THROWS_AS(PunctTaggerModel::from_json("nope"), DataError);
}

TEST_CASE("chunk_utterances cycles sentence counts") {
  const std::vector<std::string> s = {"A.", "B.", "C.", "D.", "E.", "F."};
  CHECK(chunk_utterances(s, 3) == std::vector<std::string>{"A.", "B. C.", "D. E. F."});
  CHECK(chunk_utterances(s, 1) == s);
}

}  // TEST_SUITE
