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

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "voicecomp/pipeline.hpp"

namespace voicecomp {

// Request counters and latency samples; safe for concurrent use.
class MetricsRegistry {
 public:
  void record(const std::string& endpoint, int status, double latency_ms, std::optional<Model> route = std::nullopt);
  nlohmann::ordered_json snapshot() const;

  // Nearest-rank percentile of the samples (q in (0, 1]); 0 when empty.
  static double percentile(std::vector<double> samples, double q);

 private:
  mutable std::mutex mu_;
  std::size_t total_ = 0;
  std::size_t errors_ = 0;
  std::map<std::string, std::size_t> by_endpoint_;
  std::vector<double> compose_latency_;
  std::map<std::string, std::vector<double>> route_latency_;
  std::map<std::string, std::size_t> route_counts_;
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::optional<double> server_timing_ms;
};

// HTTP front end over a Pipeline:
//   POST /v1/compose   ComposeRequest -> ComposeResult
//   GET  /v1/health    status and model versions
//   GET  /v1/metrics   request counts, p50/p90 latency, route distribution
class Service {
 public:
  Service(std::shared_ptr<const Pipeline> pipeline, ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds and starts serving on a background thread; returns the bound port.
  // Throws Error when the address cannot be bound.
  int start();
  // Stops accepting connections and waits for in-flight requests.
  void stop();
  // Blocks until the listener exits.
  void wait();
  int port() const noexcept { return port_; }

  // Handlers without the transport, used by start() and directly by tests.
  HttpResponse compose(const std::string& body);
  HttpResponse health() const;
  HttpResponse metrics_body() const;

  const MetricsRegistry& metrics() const noexcept { return metrics_; }

 private:
  struct Impl;
  std::shared_ptr<const Pipeline> pipeline_;
  ServiceOptions options_;
  MetricsRegistry metrics_;
  std::unique_ptr<Impl> impl_;
  std::thread listener_;
  int port_ = 0;
};

// Runs the service until SIGINT or SIGTERM.
void serve(const PipelineConfig& config);

}  // namespace voicecomp
