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

#include "voicecomp/text.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>

#include "voicecomp/error.hpp"

namespace voicecomp {
namespace {

struct CodePoint {
  UChar32 value;
  std::size_t byte_begin;
  std::size_t byte_end;
};

std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t begin = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({c, static_cast<std::size_t>(begin), static_cast<std::size_t>(i)});
  }
  return out;
}

bool is_split_punct(UChar32 c) {
  return c < 0x80 && kSplitPunctuation.find(static_cast<char>(c)) != std::string_view::npos;
}

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), n, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(n));
}

}  // namespace

std::string_view to_string(Source source) {
  switch (source) {
    case Source::kAsr: return "ASR";
    case Source::kFile: return "FILE";
    case Source::kTyped: return "TYPED";
    case Source::kSynthetic: return "SYNTHETIC";
  }
  return "TYPED";
}

Transcript::Transcript(std::string raw_text, Source source)
    : raw_text_(nfc(raw_text)), source_(source) {
  tokens_ = tokenize(raw_text_);
}

Transcript::Transcript(std::vector<Token> tokens, std::string raw_text, Source source)
    : tokens_(std::move(tokens)), raw_text_(std::move(raw_text)), source_(source) {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].text.empty()) throw ContractError("token text must be non-empty");
    if (i > 0 && tokens_[i].index <= tokens_[i - 1].index) {
      throw ContractError("token indices must be strictly increasing");
    }
  }
}

std::vector<std::string> Transcript::words() const { return token_texts(tokens_); }

bool is_punctuation_token(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
           return kSplitPunctuation.find(c) != std::string_view::npos;
         });
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  const auto cps = decode(text);
  const std::size_t n = cps.size();
  auto emit = [&](std::size_t first, std::size_t last) {  // code point range
    Token t;
    t.text = std::string(text.substr(cps[first].byte_begin,
                                     cps[last - 1].byte_end - cps[first].byte_begin));
    t.index = tokens.size();
    t.span = CharSpan{first, last};
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < n) {
    if (u_isUWhiteSpace(cps[i].value)) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < n && !u_isUWhiteSpace(cps[end].value)) ++end;

    std::size_t lo = i;
    std::size_t hi = end;
    while (lo < hi && is_split_punct(cps[lo].value)) ++lo;
    if (lo == hi) {
      for (std::size_t k = i; k < end; ++k) emit(k, k + 1);
    } else {
      while (hi > lo && is_split_punct(cps[hi - 1].value)) --hi;
      for (std::size_t k = i; k < lo; ++k) emit(k, k + 1);
      emit(lo, hi);
      for (std::size_t k = hi; k < end; ++k) emit(k, k + 1);
    }
    i = end;
  }
  return tokens;
}

std::string detokenize(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    const bool attach = w.size() == 1 && kAttachedPunctuation.find(w[0]) != std::string_view::npos;
    if (!out.empty() && !attach) out.push_back(' ');
    out += w;
  }
  return out;
}

std::string detokenize(const std::vector<Token>& tokens) { return detokenize(token_texts(tokens)); }

std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

std::vector<Token> make_tokens(const std::vector<std::string>& words) {
  std::vector<Token> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out.push_back(Token{words[i], i, std::nullopt});
  return out;
}

std::string nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  const auto source = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  if (normalizer->isNormalized(source, status) && U_SUCCESS(status)) return std::string(text);
  status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) throw DataError("text is not valid Unicode");
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string to_lower(std::string_view text) {
  bool ascii = std::all_of(text.begin(), text.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
  if (ascii) {
    std::string out(text);
    for (auto& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  auto s = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::string capitalize_first(std::string_view word) {
  const auto cps = decode(word);
  if (cps.empty()) return {};
  std::string out;
  append_utf8(out, u_toupper(cps[0].value));
  out.append(word.substr(cps[0].byte_end));
  return out;
}

bool starts_upper(std::string_view word) {
  const auto cps = decode(word);
  return !cps.empty() && u_isupper(cps[0].value);
}

bool has_upper(std::string_view text) {
  for (const auto& cp : decode(text)) {
    if (u_isupper(cp.value)) return true;
  }
  return false;
}

std::size_t code_point_count(std::string_view text) { return decode(text).size(); }

std::string slice_chars(std::string_view text, CharSpan span) {
  const auto cps = decode(text);
  if (span.start > span.end || span.end > cps.size()) throw ContractError("span out of range");
  if (span.start == span.end) return {};
  return std::string(text.substr(cps[span.start].byte_begin,
                                 cps[span.end - 1].byte_end - cps[span.start].byte_begin));
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (const auto& cp : decode(text)) {
    if (u_isUWhiteSpace(cp.value)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(text.substr(cp.byte_begin, cp.byte_end - cp.byte_begin));
  }
  return out;
}

bool is_all_digits(std::string_view word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace voicecomp
