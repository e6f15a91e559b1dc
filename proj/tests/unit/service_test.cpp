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


#include <doctest.h>

#include <httplib.h>

#include <thread>

#include "voicecomp/error.hpp"
#include "voicecomp/service.hpp"

using namespace voicecomp;

namespace {

std::shared_ptr<const Pipeline> shared_pipeline() {
  static const auto p = std::make_shared<const Pipeline>();
  return p;
}

ServiceOptions any_port() {
  ServiceOptions o;
  o.port = 0;
  o.threads = 4;
  o.cors_origin = "http://localhost:5173";
  return o;
}

std::string compose_body(const std::string& transcript, std::uint64_t seed = 0, bool trace = false) {
  return nlohmann::json{{"transcript", transcript}, {"seed", seed}, {"trace", trace}}.dump();
}

}  // namespace

TEST_SUITE("service") {

TEST_CASE("handlers without transport") {
  Service svc(shared_pipeline(), any_port());
  const auto ok = svc.compose(compose_body("pick up groceries at 5 pm tomorrow"));
  CHECK(ok.status == 200);
  CHECK(nlohmann::json::parse(ok.body)["output"] == "Pick up groceries at 5 pm tomorrow.");
  CHECK(ok.server_timing_ms.has_value());

  CHECK(svc.compose("{not json").status == 400);
  CHECK(svc.compose(R"({"text":"hi"})").status == 400);

  std::string big;
  for (int i = 0; i < 10000; ++i) big += "word ";
  const auto too_long = svc.compose(compose_body(big));
  CHECK(too_long.status == 413);
  CHECK(nlohmann::json::parse(too_long.body)["error"] == "input exceeds 512 tokens");

  const auto health = nlohmann::json::parse(svc.health().body);
  CHECK(health["status"] == "ok");
  CHECK(health["versions"].contains("punctuation"));
  CHECK(health["versions"]["llm"] == "mock-llm");

  const auto m = nlohmann::json::parse(svc.metrics_body().body);
  CHECK(m["requests"]["total"] == 4);
  CHECK(m["requests"]["errors"] == 3);
  CHECK(m["routes"]["FT"] == 1);
  CHECK(m["latency_ms"]["compose"]["count"] == 1);
}

TEST_CASE("percentiles use nearest rank") {
  CHECK(MetricsRegistry::percentile({}, 0.9) == 0.0);
  std::vector<double> v;
  for (int i = 10; i >= 1; --i) v.push_back(i);
  CHECK(MetricsRegistry::percentile(v, 0.5) == 5.0);
  CHECK(MetricsRegistry::percentile(v, 0.9) == 9.0);
  CHECK(MetricsRegistry::percentile(v, 1.0) == 10.0);
  CHECK(MetricsRegistry::percentile({3.0}, 0.1) == 3.0);
}

TEST_CASE("http endpoints") {
  Service svc(shared_pipeline(), any_port());
  const int port = svc.start();
  REQUIRE(port > 0);
  httplib::Client cli("127.0.0.1", port);

  auto health = cli.Get("/v1/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(nlohmann::json::parse(health->body)["status"] == "ok");
  CHECK(health->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");

  auto res = cli.Post("/v1/compose", compose_body("pick up groceries at 5 pm tomorrow", 0, true), "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->has_header("Server-Timing"));
  const auto body = nlohmann::json::parse(res->body);
  CHECK(body["route"]["model"] == "FT");
  CHECK(body["traces"].size() == 8);

  std::string big;
  for (int i = 0; i < 10000; ++i) big += "word ";
  auto too_long = cli.Post("/v1/compose", compose_body(big), "application/json");
  REQUIRE(too_long);
  CHECK(too_long->status == 413);
  CHECK(too_long->body.find("input exceeds 512 tokens") != std::string::npos);

  auto pre = cli.Options("/v1/compose");
  REQUIRE(pre);
  CHECK(pre->status == 204);
  CHECK(pre->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

  auto missing = cli.Get("/v1/nothing");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto metrics = cli.Get("/v1/metrics");
  REQUIRE(metrics);
  const auto m = nlohmann::json::parse(metrics->body);
  CHECK(m["requests"]["by_endpoint"]["/v1/compose"] == 2);
  CHECK(m["latency_ms"]["by_route"]["FT"]["count"] == 1);
  svc.stop();
}

TEST_CASE("concurrent identical requests get identical bodies") {
  Service svc(shared_pipeline(), any_port());
  const int port = svc.start();
  const auto body = compose_body("write a funny poem about my cat", 11);
  std::vector<std::string> got(6 * 5);
  std::vector<std::thread> threads;
  for (int t = 0; t < 6; ++t) {
    threads.emplace_back([&, t] {
      httplib::Client cli("127.0.0.1", port);
      for (int k = 0; k < 5; ++k) {
        auto r = cli.Post("/v1/compose", body, "application/json");
        got[static_cast<std::size_t>(t * 5 + k)] = r ? r->body : "<no response>";
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& g : got) CHECK(g == got.front());
  CHECK(nlohmann::json::parse(got.front())["route"]["model"] == "LLM");
  svc.stop();
}

TEST_CASE("binding a taken port fails") {
  Service a(shared_pipeline(), any_port());
  const int port = a.start();
  ServiceOptions o = any_port();
  o.port = port;
  Service b(shared_pipeline(), o);
  CHECK_THROWS_AS(b.start(), Error);
  a.stop();
}

}  // TEST_SUITE
