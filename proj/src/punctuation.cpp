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

#include "voicecomp/punctuation.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <unordered_map>

#include "voicecomp/error.hpp"
#include "voicecomp/lexical.hpp"
#include "voicecomp/resources.hpp"
#include "voicecomp/rng.hpp"

namespace voicecomp {
namespace {

constexpr std::string_view kModelFormat = "voicecomp.punct-tagger";
constexpr int kModelFormatVersion = 1;

AppendClass append_class_of(char c) {
  switch (c) {
    case '.': return AppendClass::kPeriod;
    case '?':
    case '!': return AppendClass::kQuestion;
    default: return AppendClass::kComma;  // , ; : -
  }
}

std::string_view canonical(AppendClass c) {
  switch (c) {
    case AppendClass::kComma: return ",";
    case AppendClass::kPeriod: return ".";
    case AppendClass::kQuestion: return "?";
    case AppendClass::kNone: return "";
  }
  return "";
}

bool allowed_in_gold(UChar32 c) {
  if (u_isalnum(c) || u_isUWhiteSpace(c)) return true;
  const auto type = u_charType(c);
  if (type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK) return true;
  if (c == '\'' || c == 0x2019) return true;
  return c < 0x80 && kSplitPunctuation.find(static_cast<char>(c)) != std::string_view::npos;
}

std::string shape(std::string_view w) {
  std::string out;
  for (unsigned char c : w) {
    char s;
    if (c >= '0' && c <= '9') {
      s = 'd';
    } else if (c == '\'' || c == '-' || c == ':') {
      s = static_cast<char>(c);
    } else {
      s = 'x';
    }
    if (out.empty() || out.back() != s) out.push_back(s);
  }
  return out;
}

std::string_view class_name(lexical::WordClass c) {
  using lexical::WordClass;
  switch (c) {
    case WordClass::kFunction: return "fn";
    case WordClass::kPronoun: return "pron";
    case WordClass::kDay: return "day";
    case WordClass::kMonth: return "month";
    case WordClass::kNumber: return "num";
    case WordClass::kTime: return "time";
    case WordClass::kContent: return "content";
  }
  return "content";
}

std::string suffix3(std::string_view w) { return std::string(w.size() > 3 ? w.substr(w.size() - 3) : w); }

int best_label(const std::vector<const PunctTaggerModel::LabelWeights*>& rows) {
  std::array<double, PunctLabel::kCount> score{};
  for (const auto* row : rows) {
    for (int l = 0; l < PunctLabel::kCount; ++l) score[l] += (*row)[l];
  }
  return static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
}

}  // namespace

void SentenceContext::advance(const std::vector<std::string>& tokens, std::size_t i, int prev_label) {
  const auto prev_append = prev_label < 0 ? AppendClass::kPeriod : PunctLabel::from_id(prev_label).append;
  if (prev_append == AppendClass::kPeriod || prev_append == AppendClass::kQuestion) {
    words_since_boundary = 0;
    first_word = tokens[i];
  }
  ++words_since_boundary;
}

PunctClass project(PunctLabel label) noexcept {
  switch (label.append) {
    case AppendClass::kComma: return PunctClass::kComma;
    case AppendClass::kPeriod: return PunctClass::kPeriod;
    case AppendClass::kQuestion: return PunctClass::kQuestionMark;
    case AppendClass::kNone: break;
  }
  return label.capitalize ? PunctClass::kCapitalization : PunctClass::kNone;
}

std::string_view to_string(PunctClass c) {
  switch (c) {
    case PunctClass::kComma: return "COMMA";
    case PunctClass::kPeriod: return "PERIOD";
    case PunctClass::kQuestionMark: return "QUESTIONMARK";
    case PunctClass::kCapitalization: return "CAPITALIZATION";
    case PunctClass::kNone: return "NONE";
  }
  return "NONE";
}

std::string_view to_string(AppendClass c) {
  switch (c) {
    case AppendClass::kNone: return "NONE";
    case AppendClass::kComma: return "COMMA";
    case AppendClass::kPeriod: return "PERIOD";
    case AppendClass::kQuestion: return "QUESTIONMARK";
  }
  return "NONE";
}

std::string to_string(PunctLabel label) {
  return (label.capitalize ? "CAP+" : "") + std::string(to_string(label.append));
}

PunctExtraction extract_punct_labels(std::string_view gold_text) {
  const std::string text = nfc(gold_text);
  std::vector<std::string> offending;
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  for (int32_t i = 0; i < length;) {
    const int32_t begin = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c >= 0 && allowed_in_gold(c)) continue;
    std::string ch = c < 0 ? std::string("\\ufffd") : text.substr(begin, static_cast<std::size_t>(i - begin));
    if (std::find(offending.begin(), offending.end(), ch) == offending.end()) offending.push_back(ch);
  }
  if (!offending.empty()) {
    std::string msg = "unsupported character(s):";
    for (const auto& ch : offending) msg += " '" + ch + "'";
    throw DataError(msg);
  }

  PunctExtraction out;
  for (const auto& tok : tokenize(text)) {
    if (is_punctuation_token(tok.text)) {
      if (!out.labels.empty() && out.labels.back().append == AppendClass::kNone) {
        out.labels.back().append = append_class_of(tok.text[0]);
      }
      continue;
    }
    out.labels.push_back({starts_upper(tok.text), AppendClass::kNone});
    out.tokens.push_back(to_lower(tok.text));
  }
  return out;
}

std::string apply_punct_labels(const std::vector<std::string>& tokens, const std::vector<PunctLabel>& labels) {
  if (tokens.size() != labels.size()) {
    throw ContractError("apply_punct_labels: " + std::to_string(tokens.size()) + " tokens but " +
                        std::to_string(labels.size()) + " labels");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.push_back(labels[i].capitalize ? capitalize_first(tokens[i]) : tokens[i]);
    if (labels[i].append != AppendClass::kNone) out.emplace_back(canonical(labels[i].append));
  }
  if (!labels.empty() && labels.back().append == AppendClass::kNone) out.emplace_back(".");
  return detokenize(out);
}

std::vector<std::string> punct_features(const std::vector<std::string>& w, std::size_t i, int prev_label,
                                        const SentenceContext& ctx) {
  const std::size_t n = w.size();
  auto at = [&](std::ptrdiff_t k) -> std::string_view {
    const auto j = static_cast<std::ptrdiff_t>(i) + k;
    if (j < 0) return "<s>";
    if (j >= static_cast<std::ptrdiff_t>(n)) return "</s>";
    return w[static_cast<std::size_t>(j)];
  };
  auto cls = [&](std::ptrdiff_t k) -> std::string_view {
    const auto word = at(k);
    if (word == "<s>" || word == "</s>") return word;
    return class_name(lexical::word_class(word));
  };
  const std::string prev = std::to_string(prev_label);
  const std::size_t to_end = n - 1 - i;
  std::string pos;
  if (i == 0) {
    pos = "first";
  } else if (to_end == 0) {
    pos = "last";
  } else {
    pos = "q" + std::to_string(i * 5 / n);
  }

  std::vector<std::string> f;
  f.reserve(20);
  f.emplace_back("b");
  f.push_back("w0=" + std::string(at(0)));
  f.push_back("w-1=" + std::string(at(-1)));
  f.push_back("w-2=" + std::string(at(-2)));
  f.push_back("w+1=" + std::string(at(1)));
  f.push_back("w+2=" + std::string(at(2)));
  f.push_back("w0w+1=" + std::string(at(0)) + "|" + std::string(at(1)));
  f.push_back("w-1w0=" + std::string(at(-1)) + "|" + std::string(at(0)));
  f.push_back("w+1w+2=" + std::string(at(1)) + "|" + std::string(at(2)));
  f.push_back("shape=" + shape(at(0)));
  f.push_back("suf3=" + suffix3(at(0)));
  f.push_back("c+1=" + std::string(cls(1)));
  f.push_back("c0c+1=" + std::string(cls(0)) + "|" + std::string(cls(1)));
  f.push_back("pos=" + pos);
  f.push_back("toend=" + std::to_string(std::min<std::size_t>(to_end, 6)));
  f.push_back("p-1=" + prev);
  f.push_back("p-1w0=" + prev + "|" + std::string(at(0)));
  f.push_back("p-1c+1=" + prev + "|" + std::string(cls(1)));
  const std::string len = std::to_string(std::min<std::size_t>(ctx.words_since_boundary, 12) / 2);
  f.push_back("slen=" + len);
  f.push_back("slen|c+1=" + len + "|" + std::string(cls(1)));
  f.push_back("s0=" + ctx.first_word);
  f.push_back("s0|toend=" + ctx.first_word + "|" + std::to_string(std::min<std::size_t>(to_end, 2)));
  f.push_back("s0|w+1=" + ctx.first_word + "|" + std::string(at(1)));
  return f;
}

std::vector<PunctLabel> PunctTaggerModel::predict(const std::vector<std::string>& tokens) const {
  std::vector<PunctLabel> out;
  out.reserve(tokens.size());
  int prev = -1;
  SentenceContext ctx;
  std::vector<const LabelWeights*> rows;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    ctx.advance(tokens, i, prev);
    rows.clear();
    for (const auto& feat : punct_features(tokens, i, prev, ctx)) {
      auto it = weights_.find(feat);
      if (it != weights_.end()) rows.push_back(&it->second);
    }
    prev = best_label(rows);
    out.push_back(PunctLabel::from_id(prev));
  }
  return out;
}

std::string PunctTaggerModel::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = kModelFormat;
  j["format_version"] = kModelFormatVersion;
  j["version"] = version_;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (int l = 0; l < PunctLabel::kCount; ++l) labels.push_back(to_string(PunctLabel::from_id(l)));
  j["labels"] = labels;
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  for (const auto& [feat, row] : weights_) {
    nlohmann::ordered_json per_label = nlohmann::ordered_json::object();
    for (int l = 0; l < PunctLabel::kCount; ++l) {
      if (row[l] != 0.0) per_label[to_string(PunctLabel::from_id(l))] = row[l];
    }
    weights[feat] = std::move(per_label);
  }
  j["weights"] = std::move(weights);
  return j.dump();
}

PunctTaggerModel PunctTaggerModel::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("punctuation model: invalid JSON: ") + e.what());
  }
  if (j.value("format", "") != kModelFormat) throw DataError("punctuation model: unexpected format");
  if (j.value("format_version", 0) != kModelFormatVersion) {
    throw DataError("punctuation model: unsupported format_version");
  }
  std::unordered_map<std::string, int> label_ids;
  for (int l = 0; l < PunctLabel::kCount; ++l) label_ids[to_string(PunctLabel::from_id(l))] = l;

  Weights weights;
  for (const auto& [feat, per_label] : j.at("weights").items()) {
    LabelWeights row{};
    for (const auto& [name, value] : per_label.items()) {
      auto it = label_ids.find(name);
      if (it == label_ids.end()) throw DataError("punctuation model: unknown label " + name);
      row[it->second] = value.get<double>();
    }
    weights.emplace(feat, row);
  }
  return PunctTaggerModel(j.value("version", ""), std::move(weights));
}

void PunctTaggerModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << to_json() << '\n';
}

PunctTaggerModel PunctTaggerModel::load(const std::filesystem::path& path) { return from_json(read_file(path)); }

PunctTaggerModel train_punct_tagger(const std::vector<std::string>& corpus, int epochs, std::uint64_t seed) {
  if (corpus.empty()) throw ContractError("train_punct_tagger: corpus is empty");
  if (epochs <= 0) throw ContractError("train_punct_tagger: epochs must be positive");

  std::vector<PunctExtraction> data;
  data.reserve(corpus.size());
  for (const auto& line : corpus) {
    auto ex = extract_punct_labels(line);
    if (!ex.tokens.empty()) data.push_back(std::move(ex));
  }
  if (data.empty()) throw ContractError("train_punct_tagger: corpus has no words");

  // Averaged perceptron with lazy averaging: `total` holds the running sum
  // of each weight up to `stamp`.
  struct Entry {
    PunctTaggerModel::LabelWeights w{};
    PunctTaggerModel::LabelWeights total{};
    std::array<std::int64_t, PunctLabel::kCount> stamp{};
  };
  std::unordered_map<std::string, Entry> table;
  std::int64_t clock = 0;

  auto update = [&](const std::vector<std::string>& feats, int label, double delta) {
    for (const auto& f : feats) {
      Entry& e = table[f];
      e.total[label] += static_cast<double>(clock - e.stamp[label]) * e.w[label];
      e.stamp[label] = clock;
      e.w[label] += delta;
    }
  };

  std::vector<std::size_t> order(data.size());
  std::vector<const PunctTaggerModel::LabelWeights*> rows;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(seed, "punct.epoch." + std::to_string(epoch));
    rng.shuffle(order.begin(), order.end());
    for (std::size_t idx : order) {
      const auto& ex = data[idx];
      int prev = -1;
      SentenceContext ctx;
      for (std::size_t i = 0; i < ex.tokens.size(); ++i) {
        ctx.advance(ex.tokens, i, prev);
        const auto feats = punct_features(ex.tokens, i, prev, ctx);
        rows.clear();
        for (const auto& f : feats) {
          auto it = table.find(f);
          if (it != table.end()) rows.push_back(&it->second.w);
        }
        const int guess = best_label(rows);
        const int gold = ex.labels[i].id();
        ++clock;
        if (guess != gold) {
          update(feats, gold, 1.0);
          update(feats, guess, -1.0);
        }
        prev = guess;
      }
    }
  }

  PunctTaggerModel::Weights averaged;
  const double t = static_cast<double>(clock);
  for (auto& [feat, e] : table) {
    PunctTaggerModel::LabelWeights row{};
    bool nonzero = false;
    for (int l = 0; l < PunctLabel::kCount; ++l) {
      const double total = e.total[l] + static_cast<double>(clock - e.stamp[l]) * e.w[l];
      row[l] = total / t;
      nonzero = nonzero || row[l] != 0.0;
    }
    if (nonzero) averaged.emplace(feat, row);
  }
  return PunctTaggerModel("avg-perceptron-v1", std::move(averaged));
}

std::vector<PunctLabel> restore_punctuation(const std::vector<Token>& tokens, const PunctTaggerModel& model) {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto& t : tokens) words.push_back(to_lower(t.text));
  auto labels = model.predict(words);
  if (!labels.empty()) labels.front().capitalize = true;
  return labels;
}

std::vector<std::string> chunk_utterances(const std::vector<std::string>& sentences, std::size_t max_sentences) {
  if (max_sentences == 0) throw ContractError("chunk_utterances: max_sentences must be positive");
  std::vector<std::string> out;
  std::size_t i = 0;
  std::size_t size = 1;
  while (i < sentences.size()) {
    std::string joined;
    for (std::size_t k = 0; k < size && i < sentences.size(); ++k, ++i) {
      if (!joined.empty()) joined.push_back(' ');
      joined += sentences[i];
    }
    out.push_back(std::move(joined));
    size = size % max_sentences + 1;
  }
  return out;
}

const PunctTaggerModel& default_punct_model() {
  static const PunctTaggerModel model = train_punct_tagger(chunk_utterances(bundled_punct_corpus(), 3), 5, 0);
  return model;
}

}  // namespace voicecomp
