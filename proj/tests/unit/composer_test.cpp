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

#include <map>

#include "fixtures.hpp"
#include "voicecomp/composer.hpp"
#include "voicecomp/error.hpp"
#include "voicecomp/intent.hpp"
#include "voicecomp/llm.hpp"

using namespace voicecomp;

namespace {

std::string compose_text(std::string_view text) { return render(compose_ft(text, classify_intent(text))); }

// Output content words not accounted for by the input or the template.
std::vector<std::string> unexplained_words(std::string_view input, std::string_view output) {
  std::map<std::string, int> budget;
  for (const auto& w : content_words(input)) ++budget[w];
  const auto boilerplate = template_boilerplate();
  std::vector<std::string> extra;
  for (const auto& w : content_words(output)) {
    if (boilerplate.count(w)) continue;
    if (budget[w]-- <= 0) extra.push_back(w);
  }
  return extra;
}

}  // namespace

TEST_SUITE("composer") {

TEST_CASE("addressed email dictation") {
  const std::string text = "Email Sam, we met with Joe today, meeting went well, follow-up with him next week.";
  const auto c = compose_ft(text, classify_intent(text));
  CHECK(c.content_type == ContentType::kEmail);
  CHECK(c.recipient == "Sam");
  CHECK(c.salutation == "Hi Sam,");
  CHECK(c.sentence_count() == 3);
  CHECK(c.signoff == "Best regards");
  CHECK(render(c) ==
        "Hi Sam,\n\nWe met with Joe today. Meeting went well. Follow-up with him next week.\n\nBest regards");
}

TEST_CASE("notes pass through with casing") {
  const auto c = compose_ft("Pick up groceries at 5 pm tomorrow.", classify_intent("Pick up groceries at 5 pm tomorrow."));
  REQUIRE(c.body.size() == 1);
  CHECK(c.body[0] == std::vector<std::string>{"Pick up groceries at 5 pm tomorrow."});
  CHECK_FALSE(c.salutation.has_value());
  CHECK_FALSE(c.signoff.has_value());
  CHECK(render(c) == "Pick up groceries at 5 pm tomorrow.");
}

TEST_CASE("closed message dictation is kept verbatim") {
  const std::string text = "Hey John, are you coming to the meeting later today?";
  const auto c = compose_ft(text, classify_intent(text));
  CHECK(c.body.size() == 1);
  CHECK(render(c) == text);
}

TEST_CASE("instruction header and pronoun table") {
  CHECK(compose_text("Send an email to Joe. Let him know that fundraiser is a go, and it will be happening "
                     "next Wednesday at 8:00. PM.") ==
        "Hi Joe,\n\nFundraiser is a go, and it will be happening next Wednesday at 8:00 PM.\n\nBest regards");
  CHECK(compose_text("Send a message to Ana. Ask her to bring the slides.") == "Could you bring the slides?");
  CHECK(compose_text("Send a message to Ana. Tell her she is late for her meeting.") ==
        "You are late for your meeting.");
  CHECK(compose_text("Text Wei that dinner is at 7 tonight.") == "Dinner is at 7 tonight.");
}

TEST_CASE("open instructions are rejected") {
  const std::string text = "Write a blog post on AI from the perspective of a 30-year-old adult.";
  CHECK_THROWS_AS(compose_ft(text, classify_intent(text)), ContractError);
}

TEST_CASE("render layouts") {
  Composition notes;
  notes.body = {{"Buy milk.", "Call mom."}};
  CHECK(render(notes) == "- Buy milk.\n- Call mom.");
  Composition message;
  message.content_type = ContentType::kMessage;
  message.body = {{"On my way.", "See you soon."}};
  CHECK(render(message) == "On my way. See you soon.");
  CHECK(render(Composition{}) == "");
}

TEST_CASE("output content words come from the input") {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 300; ++n) {
    const auto input = vctest::closed_ended_input(rng);
    CAPTURE(input);
    const auto output = compose_text(input);
    CHECK(unexplained_words(input, output).empty());
  }
  for (const auto& row : vctest::kReferenceExamples) {
    if (row.model != Model::kFt) continue;
    CHECK(unexplained_words(row.input, compose_text(row.input)).empty());
  }
}

TEST_CASE("content words skip function words") {
  CHECK(content_words("We met with Joe at the office.") == std::vector<std::string>{"met", "joe", "office"});
  CHECK(template_boilerplate().count("hi"));
  CHECK(template_boilerplate().count("regards"));
}

}  // TEST_SUITE
