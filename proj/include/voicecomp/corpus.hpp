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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "voicecomp/asr.hpp"
#include "voicecomp/augment.hpp"

namespace voicecomp {

// Builds a gold-annotated record from clean text: the augmentation chain is
// applied with per-record seeds, then the result is rendered ASR-style
// (lowercase, no punctuation). The clean text becomes the gold field and
// the injected disfluencies become per-token gold tags.
CorpusRecord make_record(std::string_view clean_text, const std::vector<AugmentationSpec>& noise,
                         std::uint64_t record_seed, const Lexicons& lexicons = Lexicons::bundled());

// Record i uses seed splitmix64(seed + i) xor each spec's own seed.
std::vector<CorpusRecord> make_corpus(const std::vector<std::string>& clean_lines,
                                      const std::vector<AugmentationSpec>& noise, std::uint64_t seed,
                                      const Lexicons& lexicons = Lexicons::bundled());

nlohmann::ordered_json record_to_json(const CorpusRecord& record);
std::string to_jsonl(const std::vector<CorpusRecord>& records);

}  // namespace voicecomp
