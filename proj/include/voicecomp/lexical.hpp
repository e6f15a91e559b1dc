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

#include <string_view>

// Closed word classes shared by the rule-based taggers. All lookups take
// lowercase words.
namespace voicecomp::lexical {

bool is_function_word(std::string_view w);
bool is_auxiliary(std::string_view w);
bool is_subject_pronoun(std::string_view w);
bool is_determiner(std::string_view w);  // articles, demonstratives, possessives
bool is_preposition(std::string_view w);
bool is_conjunction(std::string_view w);
bool is_imperative_verb(std::string_view w);
bool is_day(std::string_view w);
bool is_month(std::string_view w);
bool is_number_word(std::string_view w);
bool is_filled_pause(std::string_view w);
bool is_stopword(std::string_view w);

// Word class used for parallelism checks; equal classes other than
// kContent/kFunction mean "same kind of slot filler".
enum class WordClass { kFunction, kPronoun, kDay, kMonth, kNumber, kTime, kContent };
WordClass word_class(std::string_view w);

}  // namespace voicecomp::lexical
