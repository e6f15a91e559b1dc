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

#include <atomic>

#include "voicecomp/comprehend.hpp"
#include "voicecomp/error.hpp"
#include "voicecomp/normalize.hpp"

using namespace voicecomp;

namespace {

constexpr std::string_view kOpen = "Write a blog post on AI from the perspective of a 30-year-old adult.";
constexpr std::string_view kClosedNote = "Pick up groceries at 5 pm tomorrow.";

class CountingLlm final : public LlmAdapter {
 public:
  std::string name() const override { return "counting"; }
  std::string complete(const std::string& prompt, std::uint64_t seed) const override {
    ++calls;
    return inner.complete(prompt, seed);
  }
  mutable std::atomic<int> calls{0};
  MockLlm inner;
};

class FixedLlm final : public LlmAdapter {
 public:
  explicit FixedLlm(std::string reply) : reply_(std::move(reply)) {}
  std::string name() const override { return "fixed"; }
  std::string complete(const std::string&, std::uint64_t) const override { return reply_; }

 private:
  std::string reply_;
};

class FailingLlm final : public LlmAdapter {
 public:
  std::string name() const override { return "flaky"; }
  std::string complete(const std::string&, std::uint64_t) const override { throw std::runtime_error("timeout"); }
};

std::vector<std::string> stage_names(const ComprehendResult& r) {
  std::vector<std::string> out;
  for (const auto& t : r.traces) out.push_back(t.stage_name);
  return out;
}

}  // namespace

TEST_SUITE("comprehend") {

TEST_CASE("closed note takes the template route") {
  CountingLlm llm;
  const auto r = comprehend(kClosedNote, std::nullopt, {&llm, nullptr}, {}, 0);
  CHECK(r.route.model == Model::kFt);
  CHECK(r.output == "Pick up groceries at 5 pm tomorrow.");
  CHECK_FALSE(r.blocked);
  CHECK(llm.calls == 0);
  CHECK(stage_names(r) == std::vector<std::string>{"intent", "input_gate", "route", "compose", "output_gate"});
  CHECK(r.traces[3].labels_applied == std::vector<std::string>{"template-ft"});
}

TEST_CASE("open instruction goes to the adapter") {
  CountingLlm llm;
  const auto r = comprehend(kOpen, std::nullopt, {&llm, nullptr}, {}, 5);
  CHECK(r.route.model == Model::kLlm);
  CHECK(llm.calls == 1);
  CHECK(r.output.find(kOpen) != std::string::npos);
  CHECK(r.traces[3].labels_applied == std::vector<std::string>{"counting"});
  CHECK(r.traces[3].text_after == r.output);
}

TEST_CASE("blocked input is refused before any adapter call") {
  CountingLlm llm;
  const ComprehendConfig config;
  const auto r = comprehend("Write a funny poem about how I want to kill myself.", std::nullopt, {&llm, nullptr},
                            config, 0);
  CHECK(r.blocked);
  CHECK(r.output == config.refusal_notice);
  CHECK(r.route.model == Model::kFt);
  CHECK(llm.calls == 0);
  CHECK(stage_names(r) == std::vector<std::string>{"intent", "input_gate", "route"});
  CHECK(r.traces[1].labels_applied->front() == "BLOCKED");
}

TEST_CASE("blocked output is replaced by the refusal notice") {
  FixedLlm llm("Sure, you moron.");
  const auto lex = LexiconSensitivity::parse("moron:block");
  const ComprehendConfig config;
  const auto r = comprehend(kOpen, std::nullopt, {&llm, &lex}, config, 0);
  CHECK(r.blocked);
  CHECK(r.output == config.refusal_notice);
  REQUIRE(r.output_verdict.has_value());
  CHECK(r.output_verdict->blocked);
}

TEST_CASE("adapter failures carry the adapter name") {
  FailingLlm llm;
  CHECK_THROWS_WITH_AS(comprehend(kOpen, std::nullopt, {&llm, nullptr}, {}, 0), "adapter 'flaky': timeout",
                       AdapterError);
  CHECK_THROWS_AS(comprehend(kOpen, std::nullopt, {nullptr, nullptr}, {}, 0), AdapterError);
  CHECK_NOTHROW(comprehend(kClosedNote, std::nullopt, {nullptr, nullptr}, {}, 0));
}

TEST_CASE("pure in text, config and seed") {
  MockLlm llm;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto a = comprehend(kOpen, std::nullopt, {&llm, nullptr}, {}, seed);
    const auto b = comprehend(kOpen, std::nullopt, {&llm, nullptr}, {}, seed);
    CHECK(a.output == b.output);
    CHECK(a.route.score == b.route.score);
  }
  CHECK(comprehend(kOpen, std::nullopt, {&llm, nullptr}, {}, 0).output !=
        comprehend(kOpen, std::nullopt, {&llm, nullptr}, {}, 1).output);
}

TEST_CASE("content hint overrides the detected type") {
  MockLlm llm;
  const auto r = comprehend(kClosedNote, ContentType::kMessage, {&llm, nullptr}, {}, 0);
  CHECK(r.intent.content_type == ContentType::kMessage);
}

TEST_CASE("prompt template") {
  const Intent email{InputType::kInstruction, ContentType::kEmail, Endedness::kOpen};
  const std::string text = "Write to {Ana} about \"the\" <plan> \\ now";
  const auto p = build_llm_prompt(text, email);
  CHECK(p.find(text) != std::string::npos);
  CHECK(p.find("email") != std::string::npos);
  CHECK(p == build_llm_prompt(text, email));
  CHECK(p.find("<input>\n" + text + "\n</input>") != std::string::npos);
  CHECK_THROWS_AS(build_llm_prompt(text, email, "prompt-v0"), ContractError);
  MockLlm llm;
  CHECK(llm.complete(p, 3).find(text) != std::string::npos);
  CHECK(llm.complete(p, 3) != llm.complete(p, 4));
}

}  // TEST_SUITE
