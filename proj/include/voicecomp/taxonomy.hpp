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

#include <optional>
#include <string_view>

namespace voicecomp {

// Axes of the input taxonomy handled by the comprehension stage.
enum class InputType { kDictation, kInstruction };
enum class ContentType { kEmail, kMessage, kNotes };
enum class Endedness { kOpen, kClosed };

std::string_view to_string(InputType v);
std::string_view to_string(ContentType v);
std::string_view to_string(Endedness v);

// Accepts the lowercase wire names: email|message|notes.
std::optional<ContentType> parse_content_type(std::string_view name);

}  // namespace voicecomp
