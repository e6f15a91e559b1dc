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

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "voicecomp/metrics.hpp"

namespace voicecomp {

using MetricValue = std::variant<double, PRF>;

struct MetricRow {
  std::string system;
  std::vector<MetricValue> cells;  // one per column
};

// Values are fractions in [0, 1] (WER may exceed 1); text renderings show
// them multiplied by 100.
struct MetricTable {
  std::string name;
  std::string caption;
  std::vector<std::string> columns;
  std::vector<MetricRow> rows;
};

struct MetricReport {
  std::vector<MetricTable> tables;

  const MetricTable& table(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
  std::string to_markdown() const;
};

}  // namespace voicecomp
