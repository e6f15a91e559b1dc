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

#include "voicecomp/resources.hpp"

#include <fstream>
#include <sstream>

#include "voicecomp/error.hpp"
#include "voicecomp/text.hpp"

namespace voicecomp {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> data_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = normalize_whitespace(text.substr(pos, nl - pos));
    if (!line.empty() && line[0] != '#') out.push_back(std::move(line));
    pos = nl + 1;
  }
  return out;
}

HomophoneLexicon HomophoneLexicon::parse(std::string_view text) {
  HomophoneLexicon lex;
  for (const auto& line : data_lines(text)) {
    std::vector<std::string> group;
    for (const auto& tok : tokenize(line)) group.push_back(to_lower(tok.text));
    if (group.size() < 2) throw DataError("homophone group needs two members: " + line);
    for (const auto& w : group) {
      if (lex.group_of_.contains(w)) throw DataError("word in two homophone groups: " + w);
      lex.group_of_.emplace(w, lex.groups_.size());
    }
    lex.groups_.push_back(std::move(group));
  }
  return lex;
}

bool HomophoneLexicon::covers(std::string_view word) const {
  return group_of_.contains(std::string(word));
}

std::vector<std::string> HomophoneLexicon::alternatives(std::string_view word) const {
  auto it = group_of_.find(std::string(word));
  if (it == group_of_.end()) return {};
  std::vector<std::string> out;
  for (const auto& member : groups_[it->second]) {
    if (member != word) out.push_back(member);
  }
  return out;
}

std::vector<std::string> HomophoneLexicon::words() const {
  std::vector<std::string> out;
  for (const auto& g : groups_) out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::vector<Filler> parse_fillers(std::string_view text) {
  std::vector<Filler> out;
  for (const auto& line : data_lines(text)) {
    Filler f;
    for (const auto& tok : tokenize(line)) f.push_back(to_lower(tok.text));
    out.push_back(std::move(f));
  }
  return out;
}

const Lexicons& Lexicons::bundled() {
  static const Lexicons lex = [] {
    Lexicons l;
    l.homophones = HomophoneLexicon::parse(embedded::homophones());
    l.fillers = parse_fillers(embedded::fillers());
    l.western_names = data_lines(embedded::names_western());
    l.nonwestern_names = data_lines(embedded::names_nonwestern());
    l.sensitivity_source = std::string(embedded::sensitivity());
    return l;
  }();
  return lex;
}

std::vector<std::string> bundled_punct_corpus() { return data_lines(embedded::punct_corpus()); }

}  // namespace voicecomp
