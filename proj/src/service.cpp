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

#include "voicecomp/service.hpp"

#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <csignal>
#include <cstdio>

namespace voicecomp {
namespace {

using Clock = std::chrono::steady_clock;

std::string error_body(std::string_view message, std::optional<std::string> stage = std::nullopt) {
  nlohmann::ordered_json j;
  j["error"] = message;
  if (stage) j["stage"] = *stage;
  return j.dump();
}

nlohmann::ordered_json latency_summary(const std::vector<double>& samples) {
  return {{"count", samples.size()},
          {"p50", MetricsRegistry::percentile(samples, 0.5)},
          {"p90", MetricsRegistry::percentile(samples, 0.9)}};
}

volatile std::sig_atomic_t g_stop_requested = 0;

void on_signal(int) { g_stop_requested = 1; }

}  // namespace

void MetricsRegistry::record(const std::string& endpoint, int status, double latency_ms, std::optional<Model> route) {
  std::lock_guard lock(mu_);
  ++total_;
  ++by_endpoint_[endpoint];
  if (status >= 400) ++errors_;
  if (endpoint == "/v1/compose" && status < 400) {
    compose_latency_.push_back(latency_ms);
    if (route) {
      const std::string name(to_string(*route));
      route_latency_[name].push_back(latency_ms);
      ++route_counts_[name];
    }
  }
}

double MetricsRegistry::percentile(std::vector<double> samples, double q) {
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(samples.size())));
  return samples[std::clamp<std::size_t>(rank, 1, samples.size()) - 1];
}

nlohmann::ordered_json MetricsRegistry::snapshot() const {
  std::lock_guard lock(mu_);
  nlohmann::ordered_json j;
  j["requests"] = {{"total", total_}, {"errors", errors_}, {"by_endpoint", by_endpoint_}};
  nlohmann::ordered_json by_route;
  for (const auto& name : {"FT", "LLM"}) {
    const auto it = route_latency_.find(name);
    by_route[name] = latency_summary(it == route_latency_.end() ? std::vector<double>{} : it->second);
  }
  j["latency_ms"] = {{"compose", latency_summary(compose_latency_)}, {"by_route", by_route}};
  nlohmann::ordered_json routes;
  for (const auto& name : {"FT", "LLM"}) {
    const auto it = route_counts_.find(name);
    routes[name] = it == route_counts_.end() ? 0 : it->second;
  }
  j["routes"] = routes;
  return j;
}

struct Service::Impl {
  httplib::Server server;
};

Service::Service(std::shared_ptr<const Pipeline> pipeline, ServiceOptions options)
    : pipeline_(std::move(pipeline)), options_(std::move(options)), impl_(std::make_unique<Impl>()) {}

Service::~Service() { stop(); }

HttpResponse Service::compose(const std::string& body) {
  const auto t0 = Clock::now();
  HttpResponse res;
  std::optional<Model> route;
  try {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error&) {
      throw RequestError("request body is not valid JSON");
    }
    const auto request = ComposeRequest::from_json(j);
    const auto result = pipeline_->run(request);
    route = result.route.model;
    res.body = result.to_json(request.trace).dump();
    res.server_timing_ms = result.total_ms;
  } catch (const RequestError& e) {
    res.status = std::string_view(e.what()).find("exceeds") != std::string_view::npos ? 413 : 400;
    res.body = error_body(e.what());
  } catch (const PipelineError& e) {
    res.status = e.status();
    res.body = error_body(e.what(), e.stage());
  } catch (const std::exception& e) {
    res.status = 500;
    res.body = error_body(e.what());
  }
  metrics_.record("/v1/compose", res.status,
                  std::chrono::duration<double, std::milli>(Clock::now() - t0).count(), route);
  return res;
}

HttpResponse Service::health() const {
  nlohmann::ordered_json j;
  j["status"] = "ok";
  j["versions"] = pipeline_->versions();
  return {200, j.dump(), std::nullopt};
}

HttpResponse Service::metrics_body() const { return {200, metrics_.snapshot().dump(), std::nullopt}; }

int Service::start() {
  auto& svr = impl_->server;
  const int threads = options_.threads;
  svr.new_task_queue = [threads] { return new httplib::ThreadPool(static_cast<std::size_t>(threads)); };
  svr.set_default_headers({{"Access-Control-Allow-Origin", options_.cors_origin}});
  // No SO_REUSEPORT: a second instance on the same port must fail to bind.
  svr.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
  });

  const auto send = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    if (r.server_timing_ms) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "total;dur=%.3f", *r.server_timing_ms);
      res.set_header("Server-Timing", buf);
    }
    res.set_content(r.body, "application/json");
  };
  svr.Post("/v1/compose", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, compose(req.body));
  });
  svr.Get("/v1/health", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, health());
    metrics_.record("/v1/health", 200, 0.0);
  });
  svr.Get("/v1/metrics", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, metrics_body());
    metrics_.record("/v1/metrics", 200, 0.0);
  });
  svr.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });

  if (options_.port == 0) {
    port_ = svr.bind_to_any_port(options_.host);
    if (port_ < 0) throw Error("cannot bind " + options_.host + " to a free port");
  } else {
    if (!svr.bind_to_port(options_.host, options_.port)) {
      throw Error("cannot bind " + options_.host + ":" + std::to_string(options_.port));
    }
    port_ = options_.port;
  }
  listener_ = std::thread([&svr] { svr.listen_after_bind(); });
  svr.wait_until_ready();
  return port_;
}

void Service::stop() {
  if (impl_) impl_->server.stop();
  if (listener_.joinable()) listener_.join();
}

void Service::wait() {
  if (listener_.joinable()) listener_.join();
}

void serve(const PipelineConfig& config) {
  auto pipeline = std::make_shared<Pipeline>(config);
  Service service(pipeline, config.service);
  const int port = service.start();
  std::fprintf(stderr, "listening on %s:%d\n", config.service.host.c_str(), port);
  g_stop_requested = 0;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  while (!g_stop_requested) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  service.stop();
}

}  // namespace voicecomp
