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

// voicecomp command line tool. Exit status: 0 success, 1 usage error,
// 2 data or processing error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "voicecomp/augment.hpp"
#include "voicecomp/corpus.hpp"
#include "voicecomp/eval.hpp"
#include "voicecomp/pipeline.hpp"
#include "voicecomp/punctuation.hpp"
#include "voicecomp/service.hpp"

namespace {

using namespace voicecomp;

struct TextInput {
  std::string text;
  bool from_stdin = false;

  void add_to(CLI::App* cmd) {
    auto* t = cmd->add_option("--text", text, "Input text");
    auto* s = cmd->add_flag("--stdin", from_stdin, "Read the input text from standard input");
    t->excludes(s);
  }

  std::string get() const {
    if (!from_stdin) return text;
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
};

PipelineConfig load_config(const std::string& path) {
  return path.empty() ? PipelineConfig{} : PipelineConfig::load(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << content;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voicecomp: spoken-transcript to composition pipeline"};
  app.require_subcommand(1);
  app.fallthrough();  // lets "--config" follow the subcommand
  std::string config_path;
  app.add_option("--config", config_path, "Pipeline config JSON");

  // compose
  auto* compose = app.add_subcommand("compose", "Run the full pipeline on a transcript");
  TextInput compose_in;
  compose_in.add_to(compose);
  std::string content_type;
  bool trace = false;
  std::uint64_t seed = 0;
  compose->add_option("--content-type", content_type, "Override: email|message|notes")
      ->check(CLI::IsMember({"email", "message", "notes"}));
  compose->add_flag("--trace", trace, "Print the full result with stage traces as JSON");
  compose->add_option("--seed", seed, "Seed for the LLM adapter");

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Run the normalization stage only");
  TextInput normalize_in;
  normalize_in.add_to(normalize);
  bool normalize_trace = false;
  normalize->add_flag("--trace", normalize_trace, "Print per-stage text to stderr");

  // augment
  auto* augment = app.add_subcommand("augment", "Apply augmentations (kind:rate:seed, comma-separated)");
  TextInput augment_in;
  augment_in.add_to(augment);
  std::string spec;
  augment->add_option("--spec", spec, "Augmentation chain")->required();

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score a gold-annotated JSONL corpus");
  std::string corpus_path;
  std::string stage_name;
  std::string report_path;
  std::string eval_model;
  bool oracle = false;
  evaluate->add_option("--corpus", corpus_path, "JSONL corpus")->required();
  evaluate->add_option("--stage", stage_name, "asr|disfluency|punct|compose")
      ->required()
      ->check(CLI::IsMember({"asr", "disfluency", "punct", "compose"}));
  evaluate->add_option("--report", report_path, "Output file (.json or .md); stdout markdown when omitted");
  evaluate->add_option("--punct-model", eval_model, "Punctuation model JSON");
  evaluate->add_flag("--oracle", oracle, "Score the gold annotations themselves");

  // train-punct
  auto* train = app.add_subcommand("train-punct", "Train the punctuation tagger");
  std::string train_corpus;
  std::string model_out;
  int epochs = 5;
  std::uint64_t train_seed = 0;
  std::size_t max_sentences = 3;
  train->add_option("--corpus", train_corpus, "Plain text, one sentence per line")->required();
  train->add_option("--out", model_out, "Model JSON output")->required();
  train->add_option("--epochs", epochs, "Training epochs")->check(CLI::PositiveNumber);
  train->add_option("--seed", train_seed, "Shuffle seed");
  train->add_option("--max-sentences", max_sentences, "Sentences per training utterance (cycled 1..N)")
      ->check(CLI::PositiveNumber);

  // make-corpus
  auto* make = app.add_subcommand("make-corpus", "Build a gold-annotated JSONL corpus from clean text");
  std::string source;
  std::string noise;
  std::uint64_t corpus_seed = 0;
  std::string corpus_out;
  make->add_option("--source", source, "Clean text, one utterance per line")->required();
  make->add_option("--noise", noise, "Augmentation chain, e.g. homophones:0.1,fillers:0.2");
  make->add_option("--seed", corpus_seed, "Base seed");
  make->add_option("--out", corpus_out, "Output JSONL (stdout when omitted)");

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  std::string host;
  int port = -1;
  serve_cmd->add_option("--host", host, "Bind address (overrides config)");
  serve_cmd->add_option("--port", port, "Port (overrides config; 0 picks a free port)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*compose) {
      Pipeline pipeline(load_config(config_path));
      ComposeRequest req;
      req.transcript = compose_in.get();
      if (!content_type.empty()) req.content_type = parse_content_type(content_type);
      req.trace = trace;
      req.seed = seed;
      const auto result = pipeline.run(req);
      if (trace) {
        std::cout << result.to_json(true).dump(2) << "\n";
      } else {
        std::cout << result.output << "\n";
      }
    } else if (*normalize) {
      Pipeline pipeline(load_config(config_path));
      const auto result = pipeline.normalize_only(normalize_in.get());
      if (normalize_trace) {
        for (const auto& t : result.traces) std::cerr << t.stage_name << "\t" << t.text_after << "\n";
      }
      std::cout << result.text << "\n";
    } else if (*augment) {
      std::cout << compose_augmentations(parse_augmentation_chain(spec), augment_in.get()) << "\n";
    } else if (*evaluate) {
      const auto corpus = load_jsonl(corpus_path);
      const auto stage = parse_eval_stage(stage_name);
      std::optional<PunctTaggerModel> model;
      if (!eval_model.empty()) model = PunctTaggerModel::load(eval_model);
      std::optional<Pipeline> pipeline;
      EvalSystem system;
      system.oracle = oracle;
      if (oracle) system.name = "oracle";
      if (model) system.punct_model = &*model;
      if (stage == EvalStage::kCompose && !oracle) {
        pipeline.emplace(load_config(config_path));
        system.compose = [&pipeline](const CorpusRecord& rec) {
          ComposeRequest req;
          req.transcript = rec.transcript.raw_text();
          req.content_type = rec.content_type;
          return pipeline->run(req).output;
        };
      }
      const auto report = run_eval(corpus, stage, system);
      if (ends_with(report_path, ".json")) {
        write_output(report_path, report.to_json().dump(2) + "\n");
      } else {
        write_output(report_path, report.to_markdown());
      }
    } else if (*train) {
      std::vector<std::string> sentences;
      for (auto& line : data_lines(read_file(train_corpus))) sentences.push_back(std::move(line));
      const auto model = train_punct_tagger(chunk_utterances(sentences, max_sentences), epochs, train_seed);
      model.save(model_out);
      std::cerr << "trained on " << sentences.size() << " sentences, " << model.feature_count() << " features\n";
    } else if (*make) {
      std::vector<std::string> lines = data_lines(read_file(source));
      const auto records = make_corpus(lines, parse_augmentation_chain(noise), corpus_seed);
      write_output(corpus_out, to_jsonl(records));
    } else if (*serve_cmd) {
      auto config = load_config(config_path);
      if (!host.empty()) config.service.host = host;
      if (port >= 0) config.service.port = port;
      serve(config);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
