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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "voicecomp/comprehend.hpp"
#include "voicecomp/disfluency.hpp"
#include "voicecomp/error.hpp"
#include "voicecomp/normalize.hpp"
#include "voicecomp/punctuation.hpp"
#include "voicecomp/sensitivity.hpp"

namespace voicecomp {

enum class AdapterChoice { kMock, kExternal };

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  int threads = 8;
  std::string cors_origin = "*";
};

// Versioned JSON config; every field is optional.
struct PipelineConfig {
  static constexpr int kFormatVersion = 1;

  std::size_t max_tokens = 512;
  std::optional<std::filesystem::path> punct_model;        // bundled-corpus model when unset
  std::optional<std::filesystem::path> sensitivity_lexicon;  // bundled lexicon when unset
  SensitivityConfig sensitivity;
  DisfluencyConfig disfluency;
  ComprehendConfig comprehend;
  AdapterChoice default_adapter = AdapterChoice::kMock;
  ServiceOptions service;

  static PipelineConfig from_json(const nlohmann::json& j);
  static PipelineConfig load(const std::filesystem::path& path);
  nlohmann::ordered_json to_json() const;
};

struct ComposeRequest {
  std::string transcript;
  std::optional<ContentType> content_type;
  bool trace = false;
  std::uint64_t seed = 0;
  std::optional<AdapterChoice> adapter;

  // Throws RequestError on malformed fields.
  static ComposeRequest from_json(const nlohmann::json& j);
};

struct ComposeResult {
  std::string output;
  Route route;
  Intent intent;
  bool blocked = false;
  std::vector<StageTrace> traces;  // always collected; serialized when requested
  double total_ms = 0.0;

  // Traces and latencies are timing-dependent and only included with
  // `include_trace`, so bodies without them are reproducible byte for byte.
  nlohmann::ordered_json to_json(bool include_trace) const;
};

// Failure inside a stage; status follows HTTP conventions.
class PipelineError : public Error {
 public:
  PipelineError(int status, std::string stage, const std::string& what)
      : Error(what), status_(status), stage_(std::move(stage)) {}
  int status() const noexcept { return status_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  int status_;
  std::string stage_;
};

// Immutable after construction; run() may be called concurrently.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config = {});

  void set_external_adapter(std::shared_ptr<const LlmAdapter> adapter) { external_ = std::move(adapter); }

  // Over-length input raises RequestError; adapter failures raise
  // PipelineError with status 502 and stage "compose".
  ComposeResult run(const ComposeRequest& request) const;

  NormalizeResult normalize_only(const std::string& transcript) const;

  const PipelineConfig& config() const noexcept { return config_; }
  nlohmann::ordered_json versions() const;

 private:
  PipelineConfig config_;
  std::shared_ptr<const PunctTaggerModel> punct_model_;
  std::shared_ptr<const RuleDisfluencyTagger> disfluency_;
  std::unique_ptr<Normalizer> normalizer_;
  std::unique_ptr<LexiconSensitivity> sensitivity_;
  MockLlm mock_;
  std::shared_ptr<const LlmAdapter> external_;
};

std::string_view to_string(AdapterChoice choice);  // "mock" | "external"
AdapterChoice parse_adapter_choice(std::string_view name);

}  // namespace voicecomp
