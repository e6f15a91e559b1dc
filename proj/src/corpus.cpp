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

#include "voicecomp/corpus.hpp"

#include "voicecomp/rng.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {

CorpusRecord make_record(std::string_view clean_text, const std::vector<AugmentationSpec>& noise,
                         std::uint64_t record_seed, const Lexicons& lexicons) {
  auto specs = noise;
  for (auto& s : specs) s.seed ^= record_seed;
  const auto clean = normalize_whitespace(nfc(clean_text));
  const auto augmented = compose_augmentations(specs, TaggedTokens::fluent(token_texts(tokenize(clean))), lexicons);

  std::vector<std::string> words;
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < augmented.tokens.size(); ++i) {
    if (is_punctuation_token(augmented.tokens[i])) continue;
    words.push_back(to_lower(augmented.tokens[i]));
    tags.emplace_back(to_string(augmented.tags[i]));
  }
  CorpusRecord rec;
  rec.transcript = Transcript(detokenize(words), Source::kSynthetic);
  rec.gold = clean;
  rec.disfluency_tags = std::move(tags);
  return rec;
}

std::vector<CorpusRecord> make_corpus(const std::vector<std::string>& clean_lines,
                                      const std::vector<AugmentationSpec>& noise, std::uint64_t seed,
                                      const Lexicons& lexicons) {
  std::vector<CorpusRecord> out;
  out.reserve(clean_lines.size());
  for (std::size_t i = 0; i < clean_lines.size(); ++i) {
    out.push_back(make_record(clean_lines[i], noise, splitmix64(seed + i), lexicons));
  }
  return out;
}

nlohmann::ordered_json record_to_json(const CorpusRecord& record) {
  nlohmann::ordered_json j;
  j["transcript"] = record.transcript.raw_text();
  if (record.gold) j["gold"] = *record.gold;
  if (record.content_type) j["content_type"] = to_string(*record.content_type);
  if (record.disfluency_tags) j["disfluency_tags"] = *record.disfluency_tags;
  return j;
}

std::string to_jsonl(const std::vector<CorpusRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += record_to_json(r).dump();
    out += '\n';
  }
  return out;
}

}  // namespace voicecomp
