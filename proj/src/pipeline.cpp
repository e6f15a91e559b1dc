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

#include "voicecomp/pipeline.hpp"

#include <chrono>

#include "voicecomp/resources.hpp"

namespace voicecomp {
namespace {

using Clock = std::chrono::steady_clock;

template <class T>
T field(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return j.at(key).get<T>();
}

nlohmann::ordered_json trace_json(const StageTrace& t) {
  nlohmann::ordered_json j;
  j["stage"] = t.stage_name;
  j["text_after"] = t.text_after;
  if (t.labels_applied) j["labels"] = *t.labels_applied;
  j["elapsed_ms"] = t.elapsed_ms;
  return j;
}

}  // namespace

std::string_view to_string(AdapterChoice choice) { return choice == AdapterChoice::kMock ? "mock" : "external"; }

AdapterChoice parse_adapter_choice(std::string_view name) {
  if (name == "mock" || name == "MOCK") return AdapterChoice::kMock;
  if (name == "external" || name == "EXTERNAL") return AdapterChoice::kExternal;
  throw DataError("unknown adapter '" + std::string(name) + "' (expected mock|external)");
}

PipelineConfig PipelineConfig::from_json(const nlohmann::json& j) {
  PipelineConfig c;
  try {
    if (!j.is_object()) throw DataError("config must be a JSON object");
    const int version = field(j, "format_version", kFormatVersion);
    if (version != kFormatVersion) throw DataError("unsupported config format_version " + std::to_string(version));
    c.max_tokens = field<std::size_t>(j, "max_tokens", c.max_tokens);
    if (auto p = field<std::string>(j, "punct_model", ""); !p.empty()) c.punct_model = p;
    if (auto p = field<std::string>(j, "sensitivity_lexicon", ""); !p.empty()) c.sensitivity_lexicon = p;
    if (j.contains("sensitivity")) {
      const auto& s = j.at("sensitivity");
      c.sensitivity.score_weight = field(s, "score_weight", c.sensitivity.score_weight);
      c.sensitivity.block_weight = field(s, "block_weight", c.sensitivity.block_weight);
      c.sensitivity.block_threshold = field(s, "block_threshold", c.sensitivity.block_threshold);
    }
    if (j.contains("disfluency")) {
      const auto& d = j.at("disfluency");
      c.disfluency.max_repeat_ngram = field(d, "max_repeat_ngram", c.disfluency.max_repeat_ngram);
      c.disfluency.max_restart_fragment = field(d, "max_restart_fragment", c.disfluency.max_restart_fragment);
      c.disfluency.max_replacement_width = field(d, "max_replacement_width", c.disfluency.max_replacement_width);
      c.disfluency.tag_fillers = field(d, "tag_fillers", c.disfluency.tag_fillers);
    }
    if (j.contains("router")) c.comprehend.router = RouterWeights::from_json(j.at("router"));
    if (j.contains("composer")) {
      const auto& k = j.at("composer");
      c.comprehend.composer.greeting = field(k, "greeting", c.comprehend.composer.greeting);
      c.comprehend.composer.signoff = field(k, "signoff", c.comprehend.composer.signoff);
    }
    c.comprehend.prompt_version = field(j, "prompt_version", c.comprehend.prompt_version);
    c.comprehend.refusal_notice = field(j, "refusal_notice", c.comprehend.refusal_notice);
    c.default_adapter = parse_adapter_choice(field<std::string>(j, "adapter", "mock"));
    if (j.contains("service")) {
      const auto& s = j.at("service");
      c.service.host = field(s, "host", c.service.host);
      c.service.port = field(s, "port", c.service.port);
      c.service.threads = field(s, "threads", c.service.threads);
      c.service.cors_origin = field(s, "cors_origin", c.service.cors_origin);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("config: ") + e.what());
  }
  if (c.max_tokens == 0) throw DataError("config: max_tokens must be positive");
  if (c.service.threads <= 0) throw DataError("config: service.threads must be positive");
  return c;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  const auto text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::ordered_json PipelineConfig::to_json() const {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["max_tokens"] = max_tokens;
  j["punct_model"] = punct_model ? nlohmann::ordered_json(punct_model->string()) : nlohmann::ordered_json();
  j["sensitivity_lexicon"] =
      sensitivity_lexicon ? nlohmann::ordered_json(sensitivity_lexicon->string()) : nlohmann::ordered_json();
  j["sensitivity"] = {{"score_weight", sensitivity.score_weight},
                      {"block_weight", sensitivity.block_weight},
                      {"block_threshold", sensitivity.block_threshold}};
  j["disfluency"] = {{"max_repeat_ngram", disfluency.max_repeat_ngram},
                     {"max_restart_fragment", disfluency.max_restart_fragment},
                     {"max_replacement_width", disfluency.max_replacement_width},
                     {"tag_fillers", disfluency.tag_fillers}};
  j["router"] = comprehend.router.to_json();
  j["composer"] = {{"greeting", comprehend.composer.greeting}, {"signoff", comprehend.composer.signoff}};
  j["prompt_version"] = comprehend.prompt_version;
  j["refusal_notice"] = comprehend.refusal_notice;
  j["adapter"] = to_string(default_adapter);
  j["service"] = {{"host", service.host},
                  {"port", service.port},
                  {"threads", service.threads},
                  {"cors_origin", service.cors_origin}};
  return j;
}

ComposeRequest ComposeRequest::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw RequestError("request body must be a JSON object");
  ComposeRequest r;
  const auto t = j.find("transcript");
  if (t == j.end() || !t->is_string()) throw RequestError("field 'transcript' must be a string");
  r.transcript = t->get<std::string>();
  if (auto c = j.find("content_type"); c != j.end() && !c->is_null()) {
    const auto parsed = c->is_string() ? parse_content_type(to_lower(c->get<std::string>())) : std::nullopt;
    if (!parsed) throw RequestError("field 'content_type' must be one of email|message|notes");
    r.content_type = parsed;
  }
  if (auto tr = j.find("trace"); tr != j.end() && !tr->is_null()) {
    if (!tr->is_boolean()) throw RequestError("field 'trace' must be a boolean");
    r.trace = tr->get<bool>();
  }
  if (auto s = j.find("seed"); s != j.end() && !s->is_null()) {
    if (!s->is_number_unsigned()) throw RequestError("field 'seed' must be a non-negative integer");
    r.seed = s->get<std::uint64_t>();
  }
  if (auto a = j.find("adapter"); a != j.end() && !a->is_null()) {
    if (!a->is_string()) throw RequestError("field 'adapter' must be MOCK or EXTERNAL");
    try {
      r.adapter = parse_adapter_choice(a->get<std::string>());
    } catch (const DataError&) {
      throw RequestError("field 'adapter' must be MOCK or EXTERNAL");
    }
  }
  return r;
}

nlohmann::ordered_json ComposeResult::to_json(bool include_trace) const {
  nlohmann::ordered_json j;
  j["output"] = output;
  j["blocked"] = blocked;
  j["route"] = {{"model", to_string(route.model)}, {"score", route.score}, {"reason", route.reason}};
  j["intent"] = {{"input_type", to_string(intent.input_type)},
                 {"content_type", to_string(intent.content_type)},
                 {"endedness", to_string(intent.endedness)}};
  if (include_trace) {
    auto& arr = j["traces"] = nlohmann::ordered_json::array();
    nlohmann::ordered_json stages;
    for (const auto& t : traces) {
      arr.push_back(trace_json(t));
      stages[t.stage_name] = t.elapsed_ms;
    }
    j["latency_ms"] = {{"total", total_ms}, {"stages", stages}};
  }
  return j;
}

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
  if (config_.punct_model) {
    punct_model_ = std::make_shared<PunctTaggerModel>(PunctTaggerModel::load(*config_.punct_model));
  } else {
    punct_model_ = std::shared_ptr<const PunctTaggerModel>(&default_punct_model(), [](const PunctTaggerModel*) {});
  }
  disfluency_ = std::make_shared<RuleDisfluencyTagger>(config_.disfluency);
  normalizer_ = std::make_unique<Normalizer>(*punct_model_, disfluency_);
  const std::string lexicon =
      config_.sensitivity_lexicon ? read_file(*config_.sensitivity_lexicon) : std::string(embedded::sensitivity());
  sensitivity_ = std::make_unique<LexiconSensitivity>(LexiconSensitivity::parse(lexicon, config_.sensitivity));
  build_llm_prompt("", Intent{}, config_.comprehend.prompt_version);  // rejects unknown versions early
}

NormalizeResult Pipeline::normalize_only(const std::string& transcript) const {
  return normalizer_->run(Transcript(transcript, Source::kTyped));
}

ComposeResult Pipeline::run(const ComposeRequest& request) const {
  const auto t0 = Clock::now();
  const Transcript transcript(request.transcript, Source::kTyped);
  if (transcript.size() > config_.max_tokens) {
    throw RequestError("input exceeds " + std::to_string(config_.max_tokens) + " tokens");
  }
  const auto adapter_choice = request.adapter.value_or(config_.default_adapter);
  const LlmAdapter* llm = &mock_;
  if (adapter_choice == AdapterChoice::kExternal) {
    if (!external_) throw RequestError("no external adapter is configured");
    llm = external_.get();
  }

  ComposeResult result;
  auto normalized = normalizer_->run(transcript);
  result.traces = std::move(normalized.traces);
  if (normalize_whitespace(normalized.text).empty()) {
    result.route.reason = "empty input";
  } else {
    ComprehendAdapters adapters{llm, sensitivity_.get()};
    ComprehendResult c;
    try {
      c = comprehend(normalized.text, request.content_type, adapters, config_.comprehend, request.seed);
    } catch (const AdapterError& e) {
      throw PipelineError(502, std::string(stage::kCompose), e.what());
    }
    result.output = std::move(c.output);
    result.route = std::move(c.route);
    result.intent = c.intent;
    result.blocked = c.blocked;
    for (auto& t : c.traces) result.traces.push_back(std::move(t));
  }
  result.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return result;
}

nlohmann::ordered_json Pipeline::versions() const {
  return {
      {"punctuation", punct_model_->version()},
      {"disfluency", disfluency_->name()},
      {"gec", RuleEditTagger().name()},
      {"router", config_.comprehend.router.version},
      {"composer", "template-ft"},
      {"prompt", config_.comprehend.prompt_version},
      {"sensitivity", sensitivity_->name()},
      {"llm", external_ ? external_->name() : mock_.name()},
  };
}

}  // namespace voicecomp
