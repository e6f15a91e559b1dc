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

// Shared input fixtures for the unit and acceptance tests.

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/router.hpp"
#include "voicecomp/taxonomy.hpp"

namespace vctest {

struct ReferenceExample {
  std::string_view input;
  voicecomp::InputType input_type;
  voicecomp::Endedness endedness;
  voicecomp::ContentType content_type;
  voicecomp::Model model;
};

// The seven labelled example inputs of the comprehension taxonomy table.
inline constexpr std::array<ReferenceExample, 7> kReferenceExamples = {{
    {"Hey John, are you coming to the meeting later today?", voicecomp::InputType::kDictation,
     voicecomp::Endedness::kClosed, voicecomp::ContentType::kMessage, voicecomp::Model::kFt},
    {"Email Sam, we met with Joe today, meeting went well, follow-up with him next week.",
     voicecomp::InputType::kDictation, voicecomp::Endedness::kOpen, voicecomp::ContentType::kEmail,
     voicecomp::Model::kFt},
    {"After more than 50 years The Eagles are heading on the road for what they say will be their \"final\" "
     "tour. On Thursday the legendary band announced \xE2\x80\x9CThe Long Goodbye\xE2\x80\x9D tour that is set to "
     "kick off September 7 in New York.",
     voicecomp::InputType::kDictation, voicecomp::Endedness::kClosed, voicecomp::ContentType::kNotes,
     voicecomp::Model::kFt},
    {"Send an email to Joe. Let him know that fundraiser is a go, and it will be happening next Wednesday at "
     "8:00. PM.",
     voicecomp::InputType::kInstruction, voicecomp::Endedness::kClosed, voicecomp::ContentType::kEmail,
     voicecomp::Model::kFt},
    {"Pick up groceries at 5 pm tomorrow.", voicecomp::InputType::kInstruction, voicecomp::Endedness::kClosed,
     voicecomp::ContentType::kNotes, voicecomp::Model::kFt},
    {"Write a thoughtful birthday wish for Jim. He is one of my oldest friends. He is turning 31. Make the "
     "message witty.",
     voicecomp::InputType::kInstruction, voicecomp::Endedness::kOpen, voicecomp::ContentType::kMessage,
     voicecomp::Model::kLlm},
    {"Write a blog post on AI from the perspective of a 30-year-old adult.", voicecomp::InputType::kInstruction,
     voicecomp::Endedness::kOpen, voicecomp::ContentType::kNotes, voicecomp::Model::kLlm},
}};

// Random closed-ended dictation or instruction in one of the shapes the
// template composer handles: plain notes, addressed dictation, instruction
// headers with relayed content, and greetings.
inline std::string closed_ended_input(std::mt19937_64& rng) {
  static const std::vector<std::string> names = {"Joe", "Sam", "Ana", "Priya", "Wei", "Maria", "Tom", "Kofi"};
  static const std::vector<std::string> tasks = {
      "pick up groceries at 5 pm tomorrow", "the fundraiser is a go next Wednesday at 8 PM",
      "we met with the vendor today", "the report is due on Friday", "call the dentist before noon",
      "the meeting moved to room 4", "bring the slides to the review", "the budget was approved this morning",
      "dinner is at 7 tonight", "the package arrived at the office"};
  static const std::vector<std::string> relays = {
      "let him know that {t}", "tell her {t}", "ask them to {t}", "let her know {t}", "tell him that {t}"};
  auto pick = [&](const std::vector<std::string>& v) -> const std::string& { return v[rng() % v.size()]; };
  auto sentence = [](std::string s) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s + ".";
  };
  const std::string name = pick(names);
  std::string task = pick(tasks);
  switch (rng() % 5) {
    case 0:
      return sentence(task);
    case 1:
      return "Email " + name + ", " + task + ", " + pick(tasks) + ".";
    case 2: {
      std::string relay = pick(relays);
      relay.replace(relay.find("{t}"), 3, task);
      const std::string channel = rng() % 2 ? "an email" : "a message";
      return "Send " + channel + " to " + name + ". " + sentence(relay);
    }
    case 3:
      return "Hey " + name + ", " + task + ".";
    default:
      return "Text " + name + " that " + task + ".";
  }
}

}  // namespace vctest
