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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace voicecomp {

namespace embedded {
// Bundled copies of the files under data/.
std::string_view homophones();
std::string_view fillers();
std::string_view sensitivity();
std::string_view names_western();
std::string_view names_nonwestern();
std::string_view punct_corpus();
std::string_view router_dataset();
}  // namespace embedded

std::string read_file(const std::filesystem::path& path);

// Non-empty lines with '#' comment lines removed and whitespace trimmed.
std::vector<std::string> data_lines(std::string_view text);

class HomophoneLexicon {
 public:
  HomophoneLexicon() = default;
  // One group per line, members separated by whitespace.
  static HomophoneLexicon parse(std::string_view text);

  bool covers(std::string_view word) const;
  // Other members of the word's group; empty when not covered.
  std::vector<std::string> alternatives(std::string_view word) const;
  const std::vector<std::vector<std::string>>& groups() const noexcept { return groups_; }
  std::vector<std::string> words() const;

 private:
  std::vector<std::vector<std::string>> groups_;
  std::unordered_map<std::string, std::size_t> group_of_;
};

// A filler is one or more words, e.g. {"you", "know"}.
using Filler = std::vector<std::string>;

struct Lexicons {
  HomophoneLexicon homophones;
  std::vector<Filler> fillers;
  std::vector<std::string> western_names;
  std::vector<std::string> nonwestern_names;
  std::string sensitivity_source;

  // Bundled lexicons, parsed once.
  static const Lexicons& bundled();
};

std::vector<Filler> parse_fillers(std::string_view text);

// Gold sentences of the bundled punctuation corpus, one per line.
std::vector<std::string> bundled_punct_corpus();

}  // namespace voicecomp
