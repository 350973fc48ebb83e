// Copyright 2026 The RiskMiner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Tokenization and stop-word handling shared by the segmenter, the keyword
//! filter and the TF-IDF featurizer.

#ifndef RISKMINER_TEXT_HPP
#define RISKMINER_TEXT_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "riskminer/porter.hpp"

namespace riskminer {

namespace utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes one code point starting at `pos` and advances `pos`. Malformed
/// sequences decode to U+FFFD and consume a single byte.
inline char32_t decode(std::string_view s, std::size_t& pos) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  unsigned char c0 = byte(pos);
  if (c0 < 0x80) {
    ++pos;
    return c0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((c0 & 0xE0) == 0xC0) {
    len = 2;
    cp = c0 & 0x1F;
  } else if ((c0 & 0xF0) == 0xE0) {
    len = 3;
    cp = c0 & 0x0F;
  } else if ((c0 & 0xF8) == 0xF0) {
    len = 4;
    cp = c0 & 0x07;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + static_cast<std::size_t>(len) > s.size()) {
    ++pos;
    return kReplacement;
  }
  for (int i = 1; i < len; ++i) {
    unsigned char c = byte(pos + static_cast<std::size_t>(i));
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kReplacement;
  }
  pos += static_cast<std::size_t>(len);
  return cp;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace utf8

/// Digits are ASCII 0-9. Everything else that is not ASCII counts as a
/// letter unless it falls in a punctuation, symbol, space or private-use
/// block. This approximates the Unicode L*/Nd categories without ICU.
inline bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

inline bool is_letter(char32_t cp) {
  if (cp < 0x80) return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp < 0xC0) return false;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, symbols, arrows, math, boxes
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xE000 && cp <= 0xF8FF) return false;  // private use
  if (cp >= 0xFE10 && cp <= 0xFE6F) return false;  // vertical/small forms
  if (cp >= 0xFF00 && cp <= 0xFF0F) return false;  // fullwidth punctuation
  if (cp >= 0xFF1A && cp <= 0xFF20) return false;
  if (cp >= 0xFFF0) return cp >= 0x10000 && cp < 0x1F000;
  return true;
}

inline char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp == 0x130) return U'i';
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  return cp;
}

/// Lowercased maximal runs of letters and digits. Single-character tokens
/// are dropped unless they are digits.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t chars = 0;
  bool has_digit = false;
  auto flush = [&] {
    if (chars > 1 || (chars == 1 && has_digit)) tokens.push_back(current);
    current.clear();
    chars = 0;
    has_digit = false;
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = utf8::decode(text, pos);
    bool digit = is_digit(cp);
    if (digit || (cp != utf8::kReplacement && is_letter(cp))) {
      utf8::append(current, to_lower(cp));
      ++chars;
      has_digit = has_digit || digit;
    } else if (chars > 0) {
      flush();
    }
  }
  if (chars > 0) flush();
  return tokens;
}

/// Number of maximal letter/digit runs, with no length filter. Used for
/// the segmenter's token floor, where one-letter words still count.
inline std::size_t count_word_runs(std::string_view text) {
  std::size_t runs = 0;
  bool in_run = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = utf8::decode(text, pos);
    bool word = is_digit(cp) || (cp != utf8::kReplacement && is_letter(cp));
    if (word && !in_run) ++runs;
    in_run = word;
  }
  return runs;
}

// ---------------------------------------------------------------------------
// Stop words

inline constexpr std::string_view kStopwordListId = "en-basic-v1";

inline constexpr std::string_view kEnglishStopwords[] = {
    "about", "above", "after", "again", "against", "all", "am", "an", "and", "any",
    "are", "aren", "as", "at", "be", "because", "been", "before", "being", "below",
    "between", "both", "but", "by", "can", "couldn", "did", "didn", "do", "does",
    "doesn", "doing", "don", "down", "during", "each", "few", "for", "from", "further",
    "had", "hadn", "has", "hasn", "have", "haven", "having", "he", "her", "here",
    "hers", "herself", "him", "himself", "his", "how", "if", "in", "into", "is",
    "isn", "it", "its", "itself", "just", "ll", "me", "more", "most", "mustn",
    "my", "myself", "needn", "no", "nor", "not", "now", "of", "off", "on",
    "once", "only", "or", "other", "our", "ours", "ourselves", "out", "over", "own",
    "re", "same", "shan", "she", "should", "shouldn", "so", "some", "such", "than",
    "that", "the", "their", "theirs", "them", "themselves", "then", "there", "these", "they",
    "this", "those", "through", "to", "too", "under", "until", "up", "ve", "very",
    "was", "wasn", "we", "were", "weren", "what", "when", "where", "which", "while",
    "who", "whom", "why", "will", "with", "won", "wouldn", "you", "your", "yours",
    "yourself", "yourselves", "also", "may", "would", "could", "within", "upon", "per", "via",
    "shall", "must"};

class StopwordSet {
 public:
  StopwordSet() = default;
  StopwordSet(std::string id, const std::vector<std::string>& words) : id_(std::move(id)), words_(words.begin(), words.end()) {}

  static const StopwordSet& english() {
    static const StopwordSet set = [] {
      std::vector<std::string> words(std::begin(kEnglishStopwords), std::end(kEnglishStopwords));
      return StopwordSet(std::string(kStopwordListId), words);
    }();
    return set;
  }

  /// Empty set with id "none".
  static const StopwordSet& none() {
    static const StopwordSet set("none", {});
    return set;
  }

  bool contains(std::string_view token) const { return words_.count(std::string(token)) > 0; }
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_ = "none";
  std::unordered_set<std::string> words_;
};

/// Resolves a stop-word list by id; throws std::invalid_argument for unknown ids.
inline const StopwordSet& stopwords_by_id(std::string_view id) {
  if (id == kStopwordListId) return StopwordSet::english();
  if (id == "none") return StopwordSet::none();
  throw std::invalid_argument("unknown stopword list '" + std::string(id) + "'");
}

/// tokenize -> drop stop words -> stem.
inline std::vector<std::string> analyze(std::string_view text, const StopwordSet& stopwords) {
  std::vector<std::string> out;
  for (std::string& tok : tokenize(text)) {
    if (stopwords.contains(tok)) continue;
    out.push_back(stem(tok));
  }
  return out;
}

/// tokenize -> stem, keeping stop words (phrase matching needs them).
inline std::vector<std::string> stem_tokens(std::string_view text) {
  std::vector<std::string> out = tokenize(text);
  for (std::string& tok : out) tok = stem(tok);
  return out;
}

}  // namespace riskminer

#endif  // RISKMINER_TEXT_HPP
