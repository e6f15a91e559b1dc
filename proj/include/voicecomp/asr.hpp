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
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "voicecomp/resources.hpp"
#include "voicecomp/taxonomy.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {

struct NoiseConfig {
  double homophone_rate = 0.0;  // per lexicon-covered word
  double drop_rate = 0.0;       // per word
  double filler_rate = 0.0;     // per gap, including both ends
  std::uint64_t seed = 0;

  void validate() const;
};

// Opaque reference to recorded audio; adapters decide how to resolve it.
struct AudioRef {
  std::string uri;
};

// Integration point for speech recognizers.
class AsrAdapter {
 public:
  virtual ~AsrAdapter() = default;
  virtual std::string name() const = 0;
  // The returned transcript has source ASR.
  virtual Transcript transcribe(const AudioRef& audio) = 0;
};

// Simulated recognizer: lowercases and strips punctuation, then swaps
// homophones, drops words and inserts fillers. Deterministic under the seed.
Transcript mock_asr(std::string_view clean_text, const NoiseConfig& config,
                    const Lexicons& lexicons = Lexicons::bundled());

// Adapter over mock_asr; `resolve` maps an audio reference to its clean
// reference text (for example a sidecar .txt file).
class MockAsrAdapter final : public AsrAdapter {
 public:
  MockAsrAdapter(std::function<std::string(const AudioRef&)> resolve, NoiseConfig config);
  std::string name() const override { return "mock-asr"; }
  Transcript transcribe(const AudioRef& audio) override;

 private:
  std::function<std::string(const AudioRef&)> resolve_;
  NoiseConfig config_;
};

struct CorpusRecord {
  Transcript transcript;
  std::optional<std::string> gold;
  std::optional<ContentType> content_type;
  // Per-token gold disfluency tags (FLUENT, REPETITION, ...), when annotated.
  std::optional<std::vector<std::string>> disfluency_tags;
};

// One JSON object per line: {"transcript", "gold"?, "content_type"?,
// "disfluency_tags"?}. Blank lines are skipped.
std::vector<CorpusRecord> parse_jsonl(std::string_view text);
std::vector<CorpusRecord> load_jsonl(const std::filesystem::path& path);

}  // namespace voicecomp
