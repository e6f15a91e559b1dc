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

#include "voicecomp/corpus.hpp"
#include "voicecomp/error.hpp"
#include "voicecomp/eval.hpp"

using namespace voicecomp;

namespace {

const std::vector<std::string> kClean = {"We met with Joe today.", "Is the report due on Friday?",
                                         "Bring the slides, the notes and the budget.",
                                         "The team will meet on Monday at noon."};

double cell(const MetricReport& r, const std::string& table, std::size_t col) {
  return std::get<double>(r.table(table).rows.at(0).cells.at(col));
}

PRF prf_cell(const MetricReport& r, const std::string& table, std::size_t col) {
  return std::get<PRF>(r.table(table).rows.at(0).cells.at(col));
}

}  // namespace

TEST_SUITE("eval") {

TEST_CASE("perfect systems score perfectly") {
  std::vector<CorpusRecord> corpus;
  for (const auto& g : kClean) {
    CorpusRecord rec;
    rec.transcript = Transcript(g, Source::kFile);
    rec.gold = g;
    rec.disfluency_tags = std::vector<std::string>(rec.transcript.size(), "FLUENT");
    corpus.push_back(rec);
  }
  EvalSystem oracle;
  oracle.oracle = true;
  const auto asr = run_eval(corpus, EvalStage::kAsr, oracle);
  CHECK(cell(asr, "asr", 0) == 0.0);
  CHECK(cell(asr, "asr", 1) == 1.0);
  const auto punct = run_eval(corpus, EvalStage::kPunct, oracle);
  CHECK(punct.table("punctuation").columns == std::vector<std::string>{"Sentence", "Comma", "Period", "Question"});
  for (std::size_t c = 0; c < 4; ++c) CHECK(prf_cell(punct, "punctuation", c).f1 == 1.0);
  const auto comp = run_eval(corpus, EvalStage::kCompose, oracle);
  for (std::size_t c = 0; c < 4; ++c) CHECK(cell(comp, "compose", c) == doctest::Approx(1.0));
}

TEST_CASE("manufactured corpora carry gold tags") {
  const auto noise = parse_augmentation_chain("repeat_content:0.3,fillers:0.1");
  const auto corpus = make_corpus(kClean, noise, 4);
  REQUIRE(corpus.size() == kClean.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].gold == kClean[i]);
    CHECK(corpus[i].disfluency_tags->size() == corpus[i].transcript.size());
    CHECK(corpus[i].transcript.source() == Source::kSynthetic);
  }
  const auto back = parse_jsonl(to_jsonl(corpus));
  REQUIRE(back.size() == corpus.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].transcript.raw_text() == corpus[i].transcript.raw_text());
    CHECK(back[i].disfluency_tags == corpus[i].disfluency_tags);
  }
  CHECK(to_jsonl(make_corpus(kClean, noise, 4)) == to_jsonl(corpus));

  EvalSystem oracle;
  oracle.oracle = true;
  const auto d = run_eval(corpus, EvalStage::kDisfluency, oracle);
  CHECK(d.table("disfluency").columns == std::vector<std::string>{"Repetition", "Replacement", "Restart", "Disfluent"});
  CHECK(prf_cell(d, "disfluency", 3).f1 == 1.0);
  const auto rules = run_eval(corpus, EvalStage::kDisfluency, EvalSystem{});
  CHECK(prf_cell(rules, "disfluency", 0).f1 > 0.5);
}

TEST_CASE("missing gold is named") {
  CorpusRecord rec;
  rec.transcript = Transcript("hello", Source::kFile);
  const std::vector<CorpusRecord> corpus = {rec};
  CHECK_THROWS_WITH_AS(run_eval(corpus, EvalStage::kAsr, {}), "record 1: missing field 'gold'", DataError);
  CHECK_THROWS_WITH_AS(run_eval(corpus, EvalStage::kDisfluency, {}), "record 1: missing field 'disfluency_tags'",
                       DataError);
  CHECK_THROWS_AS(parse_eval_stage("meteor"), DataError);
}

TEST_CASE("mock asr noise shows up as WER") {
  std::vector<CorpusRecord> corpus;
  for (int rep = 0; rep < 50; ++rep) {
    for (const auto& g : kClean) {
      NoiseConfig cfg;
      cfg.drop_rate = 0.1;
      cfg.seed = static_cast<std::uint64_t>(rep) * 31 + corpus.size();
      CorpusRecord rec;
      rec.transcript = mock_asr(g, cfg);
      rec.gold = g;
      corpus.push_back(rec);
    }
  }
  const auto r = run_eval(corpus, EvalStage::kAsr, {});
  CHECK(cell(r, "asr", 0) == doctest::Approx(0.1).epsilon(0.5));
}

TEST_CASE("report rendering") {
  MetricReport report;
  report.tables.push_back({"demo", "Example", {"WER", "F1"}, {{"sys", {0.1234, PRF{0.5, 0.25, 1.0 / 3.0, 4}}}}});
  const auto md = report.to_markdown();
  CHECK(md.find("### demo") != std::string::npos);
  CHECK(md.find("| System | WER | F1 |") != std::string::npos);
  CHECK(md.find("| sys | 12.34 | 50.0 / 25.0 / 33.3 |") != std::string::npos);
  const auto j = report.to_json();
  CHECK(j["format"] == "voicecomp.report");
  CHECK(j["tables"][0]["rows"][0]["metrics"]["WER"] == 0.1234);
  CHECK(j["tables"][0]["rows"][0]["metrics"]["F1"]["recall"] == 0.25);
  CHECK_THROWS(report.table("missing"));
}

TEST_CASE("score_punctuation against the oracle") {
  const auto s = score_punctuation(kClean, nullptr);
  CHECK(s.sentence.f1 == 1.0);
  CHECK(s.question.support == 1);
  CHECK(s.comma.support == 1);
}

}  // TEST_SUITE
