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

#include "voicecomp/lexical.hpp"

#include <algorithm>
#include <array>

namespace voicecomp::lexical {
namespace {

template <std::size_t N>
constexpr bool contains(const std::array<std::string_view, N>& set, std::string_view w) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

constexpr std::array<std::string_view, 42> kAuxiliaries = {
    "is", "are", "was", "were", "be", "been", "being", "am", "have", "has", "had",
    "do", "does", "did", "will", "would", "can", "could", "should", "shall", "may",
    "might", "must", "i'm", "you're", "we're", "they're", "he's", "she's", "it's",
    "i'll", "we'll", "you'll", "they'll", "i've", "we've", "you've", "they've",
    "i'd", "we'd", "don't", "won't"};

constexpr std::array<std::string_view, 5> kSubjectPronouns = {"i", "we", "he", "she", "they"};

constexpr std::array<std::string_view, 12> kDeterminers = {
    "the", "a", "an", "my", "your", "our", "their", "his", "its", "this", "these", "those"};

constexpr std::array<std::string_view, 20> kPrepositions = {
    "to", "of", "in", "on", "at", "for", "with", "from", "by", "about", "into",
    "over", "under", "after", "before", "between", "through", "during", "without", "like"};

constexpr std::array<std::string_view, 7> kConjunctions = {"and", "but", "or", "so", "because", "if", "nor"};

constexpr std::array<std::string_view, 34> kImperatives = {
    "write", "send", "email", "reply", "draft", "compose", "make", "pick", "buy",
    "remind", "schedule", "add", "call", "create", "list", "tell", "book", "get",
    "bring", "order", "set", "let's", "please", "text", "ask", "check", "remember",
    "cancel", "move", "find", "plan", "prepare", "let", "note"};

constexpr std::array<std::string_view, 7> kDays = {
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"};

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march", "april", "may", "june", "july",
    "august", "september", "october", "november", "december"};

constexpr std::array<std::string_view, 22> kNumberWords = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "fifteen", "twenty", "thirty", "forty", "fifty", "hundred",
    "thousand", "first", "second"};

constexpr std::array<std::string_view, 9> kFilledPauses = {
    "uh", "um", "uhm", "umm", "er", "erm", "ah", "hmm", "mm"};

constexpr std::array<std::string_view, 12> kObjectPronouns = {
    "me", "you", "him", "her", "it", "us", "them", "i", "we", "he", "she", "they"};

constexpr std::array<std::string_view, 20> kOtherFunction = {
    "not", "no", "that", "there", "here", "then", "than", "as", "just", "also",
    "very", "really", "what", "which", "who", "when", "where", "how", "why", "all"};

constexpr std::array<std::string_view, 30> kStopwords = {
    "the", "a", "an", "and", "or", "but", "so", "to", "of", "in", "on", "at", "for",
    "with", "just", "really", "very", "actually", "basically", "quite", "also",
    "then", "that", "well", "like", "literally", "some", "maybe", "still", "even"};

}  // namespace

bool is_auxiliary(std::string_view w) { return contains(kAuxiliaries, w); }
bool is_subject_pronoun(std::string_view w) { return contains(kSubjectPronouns, w); }
bool is_determiner(std::string_view w) { return contains(kDeterminers, w); }
bool is_preposition(std::string_view w) { return contains(kPrepositions, w); }
bool is_conjunction(std::string_view w) { return contains(kConjunctions, w); }
bool is_imperative_verb(std::string_view w) { return contains(kImperatives, w); }
bool is_day(std::string_view w) { return contains(kDays, w); }
bool is_month(std::string_view w) { return contains(kMonths, w); }
bool is_filled_pause(std::string_view w) { return contains(kFilledPauses, w); }
bool is_stopword(std::string_view w) { return contains(kStopwords, w); }

bool is_number_word(std::string_view w) {
  if (contains(kNumberWords, w)) return true;
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return (c >= '0' && c <= '9') || c == ':'; }) &&
         w.front() != ':';
}

bool is_function_word(std::string_view w) {
  return is_auxiliary(w) || is_determiner(w) || is_preposition(w) || is_conjunction(w) ||
         contains(kObjectPronouns, w) || contains(kOtherFunction, w);
}

WordClass word_class(std::string_view w) {
  if (is_day(w) || w == "today" || w == "tomorrow" || w == "tonight" || w == "yesterday") return WordClass::kDay;
  if (is_month(w) && w != "may") return WordClass::kMonth;
  if (is_number_word(w)) return WordClass::kNumber;
  if (w == "am" || w == "pm" || w == "noon" || w == "midnight" || w == "morning" || w == "afternoon" ||
      w == "evening") {
    return WordClass::kTime;
  }
  if (contains(kObjectPronouns, w)) return WordClass::kPronoun;
  if (is_function_word(w)) return WordClass::kFunction;
  return WordClass::kContent;
}

}  // namespace voicecomp::lexical
