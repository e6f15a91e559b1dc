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

#include "voicecomp/report.hpp"

#include <cstdio>

namespace voicecomp {
namespace {

std::string pct(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v * 100.0);
  return buf;
}

std::string cell_text(const MetricValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return pct(*d, 2);
  const auto& p = std::get<PRF>(v);
  return pct(p.precision, 1) + " / " + pct(p.recall, 1) + " / " + pct(p.f1, 1);
}

nlohmann::ordered_json cell_json(const MetricValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  const auto& p = std::get<PRF>(v);
  nlohmann::ordered_json j;
  j["precision"] = p.precision;
  j["recall"] = p.recall;
  j["f1"] = p.f1;
  j["support"] = p.support;
  return j;
}

}  // namespace

const MetricTable& MetricReport::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return t;
  }
  throw ContractError("report has no table '" + name + "'");
}

nlohmann::ordered_json MetricReport::to_json() const {
  nlohmann::ordered_json out;
  out["format"] = "voicecomp.report";
  out["format_version"] = 1;
  auto& arr = out["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    nlohmann::ordered_json jt;
    jt["name"] = t.name;
    jt["caption"] = t.caption;
    jt["columns"] = t.columns;
    auto& rows = jt["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json jr;
      jr["system"] = r.system;
      nlohmann::ordered_json cells;
      for (std::size_t i = 0; i < r.cells.size() && i < t.columns.size(); ++i) cells[t.columns[i]] = cell_json(r.cells[i]);
      jr["metrics"] = cells;
      rows.push_back(jr);
    }
    arr.push_back(jt);
  }
  return out;
}

std::string MetricReport::to_markdown() const {
  std::string out;
  for (const auto& t : tables) {
    if (!out.empty()) out += "\n";
    out += "### " + t.name + "\n\n";
    if (!t.caption.empty()) out += t.caption + "\n\n";
    out += "| System |";
    for (const auto& c : t.columns) out += " " + c + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& r : t.rows) {
      out += "| " + r.system + " |";
      for (const auto& c : r.cells) out += " " + cell_text(c) + " |";
      out += "\n";
    }
  }
  return out;
}

}  // namespace voicecomp
