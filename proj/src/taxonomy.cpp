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

#include "voicecomp/taxonomy.hpp"

namespace voicecomp {

std::string_view to_string(InputType v) {
  return v == InputType::kDictation ? "dictation" : "instruction";
}

std::string_view to_string(ContentType v) {
  switch (v) {
    case ContentType::kEmail: return "email";
    case ContentType::kMessage: return "message";
    case ContentType::kNotes: return "notes";
  }
  return "notes";
}

std::string_view to_string(Endedness v) { return v == Endedness::kOpen ? "open" : "closed"; }

std::optional<ContentType> parse_content_type(std::string_view name) {
  if (name == "email") return ContentType::kEmail;
  if (name == "message") return ContentType::kMessage;
  if (name == "notes") return ContentType::kNotes;
  return std::nullopt;
}

}  // namespace voicecomp
