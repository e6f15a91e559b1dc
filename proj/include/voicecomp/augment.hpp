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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "voicecomp/disfluency.hpp"
#include "voicecomp/resources.hpp"

namespace voicecomp {

enum class AugmentKind {
  kHomophones,
  kFillers,
  kStripPunct,
  kRepeatContent,
  kWordNoise,
  kSentenceShuffle,
  kGenderNeutral,
  kNameDateSwap,
};

inline constexpr std::array<AugmentKind, 8> kAllAugmentKinds = {
    AugmentKind::kHomophones,    AugmentKind::kFillers,         AugmentKind::kStripPunct,
    AugmentKind::kRepeatContent, AugmentKind::kWordNoise,       AugmentKind::kSentenceShuffle,
    AugmentKind::kGenderNeutral, AugmentKind::kNameDateSwap,
};

std::string_view to_string(AugmentKind kind);  // lowercase, e.g. "sentence_shuffle"
AugmentKind parse_augment_kind(std::string_view name);

struct AugmentationSpec {
  AugmentKind kind = AugmentKind::kHomophones;
  double rate = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// "kind:rate:seed" (seed optional, default 0).
AugmentationSpec parse_augmentation_spec(std::string_view text);
// Comma-separated chain of specs.
std::vector<AugmentationSpec> parse_augmentation_chain(std::string_view text);

// Tokens with a gold disfluency tag each. Augmentations that inject
// disfluencies tag what they inject: the earlier copy of a repeat is
// REPETITION and inserted fillers are RESTART.
struct TaggedTokens {
  std::vector<std::string> tokens;
  std::vector<DisfluencyTag> tags;

  static TaggedTokens fluent(std::vector<std::string> tokens);
};

TaggedTokens apply_augmentation(const AugmentationSpec& spec, const TaggedTokens& input,
                                const Lexicons& lexicons = Lexicons::bundled());

// Text form. Returns the input unchanged when no transform fires.
std::string apply_augmentation(const AugmentationSpec& spec, std::string_view text,
                               const Lexicons& lexicons = Lexicons::bundled());

std::string compose_augmentations(const std::vector<AugmentationSpec>& specs, std::string_view text,
                                  const Lexicons& lexicons = Lexicons::bundled());
TaggedTokens compose_augmentations(const std::vector<AugmentationSpec>& specs, const TaggedTokens& input,
                                   const Lexicons& lexicons = Lexicons::bundled());

// Words WORD_NOISE may insert or remove.
const std::vector<std::string>& noise_words();

// Pronouns GENDER_NEUTRAL rewrites.
bool is_gendered_pronoun(std::string_view lowercase_word);

}  // namespace voicecomp
