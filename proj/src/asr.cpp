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

#include "voicecomp/asr.hpp"

#include <json.hpp>

#include "voicecomp/error.hpp"
#include "voicecomp/rng.hpp"

namespace voicecomp {
namespace {

constexpr std::string_view kAsrStripped = ".,;:?!";

// Lowercase, punctuation-free rendering of one token; empty when nothing remains.
std::string asr_word(std::string_view token) {
  if (is_punctuation_token(token)) return {};
  std::string out;
  for (char c : to_lower(token)) {
    if (kAsrStripped.find(c) == std::string_view::npos) out.push_back(c);
  }
  return out;
}

bool valid_rate(double r) { return r >= 0.0 && r <= 1.0; }

}  // namespace

void NoiseConfig::validate() const {
  if (!valid_rate(homophone_rate) || !valid_rate(drop_rate) || !valid_rate(filler_rate)) {
    throw ContractError("noise rates must lie in [0, 1]");
  }
}

Transcript mock_asr(std::string_view clean_text, const NoiseConfig& config, const Lexicons& lexicons) {
  config.validate();
  Rng drop_rng(config.seed, "asr.drop");
  Rng homophone_rng(config.seed, "asr.homophone");
  Rng filler_rng(config.seed, "asr.filler");

  std::vector<std::string> words;
  for (const auto& tok : tokenize(nfc(clean_text))) {
    std::string w = asr_word(tok.text);
    if (w.empty()) continue;
    if (drop_rng.bernoulli(config.drop_rate)) continue;
    if (lexicons.homophones.covers(w) && homophone_rng.bernoulli(config.homophone_rate)) {
      const auto alts = lexicons.homophones.alternatives(w);
      w = alts[homophone_rng.below(alts.size())];
    }
    words.push_back(std::move(w));
  }

  std::vector<std::string> out;
  auto maybe_filler = [&] {
    if (!lexicons.fillers.empty() && filler_rng.bernoulli(config.filler_rate)) {
      const auto& f = lexicons.fillers[filler_rng.below(lexicons.fillers.size())];
      out.insert(out.end(), f.begin(), f.end());
    }
  };
  for (const auto& w : words) {
    maybe_filler();
    out.push_back(w);
  }
  maybe_filler();

  std::string raw = detokenize(out);
  return Transcript(std::move(raw), Source::kAsr);
}

MockAsrAdapter::MockAsrAdapter(std::function<std::string(const AudioRef&)> resolve, NoiseConfig config)
    : resolve_(std::move(resolve)), config_(config) {
  config_.validate();
}

Transcript MockAsrAdapter::transcribe(const AudioRef& audio) { return mock_asr(resolve_(audio), config_); }

std::vector<CorpusRecord> parse_jsonl(std::string_view text) {
  std::vector<CorpusRecord> records;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (normalize_whitespace(line).empty()) continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw DataError(where + "invalid record");
    }
    if (!obj.is_object()) throw DataError(where + "invalid record");
    auto field = obj.find("transcript");
    if (field == obj.end() || !field->is_string()) {
      throw DataError(where + "missing field 'transcript'");
    }
    CorpusRecord rec;
    rec.transcript = Transcript(field->get<std::string>(), Source::kFile);
    if (auto g = obj.find("gold"); g != obj.end() && !g->is_null()) {
      if (!g->is_string()) throw DataError(where + "field 'gold' must be a string");
      rec.gold = g->get<std::string>();
    }
    if (auto c = obj.find("content_type"); c != obj.end() && !c->is_null()) {
      auto parsed = c->is_string() ? parse_content_type(c->get<std::string>()) : std::nullopt;
      if (!parsed) throw DataError(where + "content_type must be one of email|message|notes");
      rec.content_type = parsed;
    }
    if (auto d = obj.find("disfluency_tags"); d != obj.end() && !d->is_null()) {
      if (!d->is_array()) throw DataError(where + "field 'disfluency_tags' must be an array");
      std::vector<std::string> tags;
      for (const auto& t : *d) {
        if (!t.is_string()) throw DataError(where + "disfluency tags must be strings");
        tags.push_back(t.get<std::string>());
      }
      if (tags.size() != rec.transcript.size()) {
        throw DataError(where + "disfluency_tags length does not match transcript tokens");
      }
      rec.disfluency_tags = std::move(tags);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CorpusRecord> load_jsonl(const std::filesystem::path& path) {
  return parse_jsonl(read_file(path));
}

}  // namespace voicecomp
