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

#include "voicecomp/error.hpp"
#include "voicecomp/gec.hpp"

using namespace voicecomp;

TEST_SUITE("gec") {

TEST_CASE("rule tagger") {
  CHECK(gec_tag(make_tokens({"a", "apple"})) == std::vector{EditTag::replace("an"), EditTag::keep()});
  CHECK(gec_tag(make_tokens({"an", "car"})) == std::vector{EditTag::replace("a"), EditTag::keep()});
  CHECK(gec_tag(make_tokens({"i", "agree"})) == std::vector{EditTag::case_capital(), EditTag::keep()});
  CHECK(gec_tag(make_tokens({"the", "the", "end"})) ==
        std::vector{EditTag::remove(), EditTag::keep(), EditTag::keep()});
  CHECK(gec_tag(make_tokens({"we", "met", "joe"})) == std::vector<EditTag>(3, EditTag::keep()));
  CHECK(gec_tag({}).empty());
}

TEST_CASE("apply_edit_tags") {
  CHECK(token_texts(apply_edit_tags(make_tokens({"i", "has", "a", "apple"}),
                                    {EditTag::case_capital(), EditTag::replace("have"), EditTag::replace("an"),
                                     EditTag::keep()})) == std::vector<std::string>{"I", "have", "an", "apple"});
  const auto t = make_tokens({"go", "home"});
  CHECK(apply_edit_tags(t, {EditTag::keep(), EditTag::keep()}) == t);
  CHECK(token_texts(apply_edit_tags(make_tokens({"go"}), {EditTag::append("now")})) ==
        std::vector<std::string>{"go", "now"});
  CHECK(apply_edit_tags(make_tokens({"x", "y"}), {EditTag::remove(), EditTag::keep()}).at(0).index == 0);
  CHECK_THROWS_AS(apply_edit_tags(t, {EditTag::keep()}), ContractError);
}

TEST_CASE("tag names") {
  CHECK(to_string(EditTag::keep()) == "KEEP");
  CHECK(to_string(EditTag::remove()) == "DELETE");
  CHECK(to_string(EditTag::append("now")) == "APPEND(now)");
  CHECK(to_string(EditTag::replace("an")) == "REPLACE(an)");
  CHECK(to_string(EditTag::case_capital()) == "CASE_CAPITAL");
}

}  // TEST_SUITE
