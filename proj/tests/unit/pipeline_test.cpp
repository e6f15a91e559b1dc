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
#include <fstream>
#include <thread>

#include "voicecomp/error.hpp"
#include "voicecomp/pipeline.hpp"

using namespace voicecomp;

namespace {

const Pipeline& shared() {
  static const Pipeline p;
  return p;
}

ComposeRequest req(std::string transcript, bool trace = false, std::uint64_t seed = 0) {
  ComposeRequest r;
  r.transcript = std::move(transcript);
  r.trace = trace;
  r.seed = seed;
  return r;
}

class BrokenLlm final : public LlmAdapter {
 public:
  std::string name() const override { return "remote"; }
  std::string complete(const std::string&, std::uint64_t) const override { throw std::runtime_error("503 from upstream"); }
};

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("end-to-end examples") {
  const auto a = shared().run(req("pick up groceries at 5 pm tomorrow"));
  CHECK(a.output == "Pick up groceries at 5 pm tomorrow.");
  CHECK(a.route.model == Model::kFt);
  CHECK(a.intent == Intent{InputType::kInstruction, ContentType::kNotes, Endedness::kClosed});
  CHECK(shared().run(req("i i want uh to go home")).output == "I want to go home.");
  const auto empty = shared().run(req(""));
  CHECK(empty.output == "");
  CHECK_FALSE(empty.blocked);
}

TEST_CASE("trace completeness and latency accounting") {
  const auto r = shared().run(req("email sam we met with joe today", true));
  std::vector<std::string> names;
  double sum = 0.0;
  for (const auto& t : r.traces) {
    names.push_back(t.stage_name);
    sum += t.elapsed_ms;
  }
  CHECK(names == std::vector<std::string>{"disfluency", "gec", "punctuation", "intent", "input_gate", "route",
                                          "compose", "output_gate"});
  CHECK(sum <= r.total_ms);
  const auto j = r.to_json(true);
  CHECK(j["traces"].size() == 8);
  CHECK(j["latency_ms"]["stages"].size() == 8);
  CHECK_FALSE(r.to_json(false).contains("traces"));
  CHECK_FALSE(r.to_json(false).contains("latency_ms"));
}

TEST_CASE("length cap") {
  std::string big;
  for (int i = 0; i < 10000; ++i) big += "word ";
  CHECK_THROWS_WITH_AS(shared().run(req(big)), "input exceeds 512 tokens", RequestError);
  std::string ok;
  for (int i = 0; i < 512; ++i) ok += "word ";
  CHECK_NOTHROW(shared().run(req(ok)));
}

TEST_CASE("blocked input yields the refusal") {
  const auto r = shared().run(req("tell him to kill myself later"));
  CHECK(r.blocked);
  CHECK(r.output == shared().config().comprehend.refusal_notice);
}

TEST_CASE("adapter selection and failure mapping") {
  Pipeline p;
  auto r = req("write a funny poem about my cat");
  r.adapter = AdapterChoice::kExternal;
  CHECK_THROWS_AS(p.run(r), RequestError);
  p.set_external_adapter(std::make_shared<BrokenLlm>());
  try {
    p.run(r);
    FAIL("expected PipelineError");
  } catch (const PipelineError& e) {
    CHECK(e.status() == 502);
    CHECK(e.stage() == "compose");
    CHECK(std::string(e.what()) == "adapter 'remote': 503 from upstream");
  }
  CHECK(p.versions()["llm"] == "remote");
  r.adapter = AdapterChoice::kMock;
  CHECK(p.run(r).route.model == Model::kLlm);
}

TEST_CASE("concurrent runs are deterministic") {
  const auto expected = shared().run(req("write a funny poem about my cat", false, 3)).to_json(false).dump();
  std::vector<std::string> got(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i) {
    threads.emplace_back([&, i] {
      for (int k = 0; k < 10; ++k) {
        auto body = shared().run(req("write a funny poem about my cat", false, 3)).to_json(false).dump();
        if (body != expected) return;
      }
      got[i] = expected;
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& g : got) CHECK(g == expected);
  CHECK(shared().run(req("write a funny poem about my cat", false, 4)).output !=
        shared().run(req("write a funny poem about my cat", false, 3)).output);
}

TEST_CASE("requests parse strictly") {
  auto r = ComposeRequest::from_json(nlohmann::json::parse(
      R"({"transcript":"hi","content_type":"EMAIL","trace":true,"seed":9,"adapter":"MOCK"})"));
  CHECK(r.content_type == ContentType::kEmail);
  CHECK(r.trace);
  CHECK(r.seed == 9);
  CHECK(r.adapter == AdapterChoice::kMock);
  for (const char* bad : {R"([])", R"({})", R"({"transcript":1})", R"({"transcript":"x","content_type":"memo"})",
                          R"({"transcript":"x","trace":"yes"})", R"({"transcript":"x","seed":-1})",
                          R"({"transcript":"x","adapter":"GPT"})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ComposeRequest::from_json(nlohmann::json::parse(bad)), RequestError);
  }
}

TEST_CASE("config round trip and validation") {
  PipelineConfig c;
  c.max_tokens = 64;
  c.comprehend.router.threshold = 0.5;
  c.service.port = 9000;
  const auto back = PipelineConfig::from_json(nlohmann::json::parse(c.to_json().dump()));
  CHECK(back.max_tokens == 64);
  CHECK(back.comprehend.router.threshold == 0.5);
  CHECK(back.service.port == 9000);
  CHECK(back.to_json() == c.to_json());
  CHECK_THROWS_AS(PipelineConfig::from_json(nlohmann::json::parse(R"({"format_version":2})")), DataError);
  CHECK_THROWS_AS(PipelineConfig::from_json(nlohmann::json::parse(R"({"max_tokens":"many"})")), DataError);
  CHECK_THROWS_AS(PipelineConfig::from_json(nlohmann::json::parse(R"({"adapter":"gpt"})")), DataError);

  const auto dir = std::filesystem::temp_directory_path();
  std::ofstream(dir / "voicecomp_lexicon.txt") << "groceries:block\n";
  std::ofstream(dir / "voicecomp_config.json")
      << R"({"format_version":1,"max_tokens":8,"sensitivity_lexicon":")" + (dir / "voicecomp_lexicon.txt").string() +
             "\"}";
  const Pipeline p(PipelineConfig::load(dir / "voicecomp_config.json"));
  CHECK(p.run(req("pick up groceries")).blocked);
  CHECK_THROWS_AS(p.run(req("one two three four five six seven eight nine")), RequestError);
  std::filesystem::remove(dir / "voicecomp_lexicon.txt");
  std::filesystem::remove(dir / "voicecomp_config.json");
}

}  // TEST_SUITE
