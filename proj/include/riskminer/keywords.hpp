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

//! Keyword-based page pre-selection.
//!
//! Phrases and page text are compared as stemmed token sequences, so
//! "sea level" matches "Rising sea levels". A page is relevant when it has a
//! direct hit or lies within `neighbor_radius` pages of one.
//!
//! Keyword file format:
//!
//!     # comment
//!     [general]
//!     climate change
//!     [transition]
//!     carbon tax
//!     [physical]
//!     sea level

#ifndef RISKMINER_KEYWORDS_HPP
#define RISKMINER_KEYWORDS_HPP

#include <climits>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/io.hpp"
#include "riskminer/log.hpp"
#include "riskminer/text.hpp"

namespace riskminer {

enum class KeywordSection : std::uint8_t { General = 0, Transition, Physical };

inline constexpr std::string_view to_string(KeywordSection s) {
  constexpr std::string_view names[] = {"general", "transition", "physical"};
  return names[static_cast<int>(s)];
}

struct Keyword {
  std::string phrase;
  std::vector<std::string> stems;
};

namespace defaults {

inline constexpr std::string_view kGeneral[] = {
    "climate change", "global warming", "climate risk", "greenhouse effect", "sustainable energy",
    "renewable", "carbon", "co2", "co2e", "ghg", "greenhouse", "climate mitigation", "paris agreement",
    "kyoto protocol", "ipcc", "climate adaptation", "changing climate"};

inline constexpr std::string_view kTransition[] = {
    "emission regulation", "emission standard", "emission reduction", "emission trading", "cap and trade",
    "oil price", "energy price", "fossil fuel", "energy legislation", "environmental legislation",
    "climate legislation"};

inline constexpr std::string_view kPhysical[] = {
    "natural hazard", "windstorm", "floods", "floodings", "drought", "global temperature", "temperature rise",
    "extreme weather", "sea level", "disaster", "extreme event", "storm", "hurricane", "biodiversity",
    "rainfall", "rain", "monsoon", "catastrophic event", "climate feedback", "climate impacts",
    "climate variability"};

}  // namespace defaults

class KeywordSet {
 public:
  KeywordSet() = default;

  /// Adds a phrase; returns false (and keeps the set unchanged) when the
  /// section already has it. Throws ValidationError when the phrase has no
  /// tokens.
  bool add(KeywordSection section, std::string_view phrase) {
    std::string normalized = normalize_phrase(phrase);
    std::vector<std::string> stems = stem_tokens(normalized);
    if (stems.empty()) throw ValidationError("keyword '" + std::string(phrase) + "' has no matchable tokens");
    auto& list = sections_[static_cast<int>(section)];
    for (const Keyword& k : list)
      if (k.phrase == normalized) return false;
    list.push_back(Keyword{normalized, std::move(stems)});
    return true;
  }

  const std::vector<Keyword>& section(KeywordSection s) const { return sections_[static_cast<int>(s)]; }
  const std::vector<Keyword>& general() const { return section(KeywordSection::General); }
  const std::vector<Keyword>& transition() const { return section(KeywordSection::Transition); }
  const std::vector<Keyword>& physical() const { return section(KeywordSection::Physical); }

  std::size_t size() const { return sections_[0].size() + sections_[1].size() + sections_[2].size(); }

  /// Canonical text form; parses back to an identical set.
  std::string serialize() const {
    std::string out;
    for (int s = 0; s < 3; ++s) {
      out += "[";
      out += to_string(static_cast<KeywordSection>(s));
      out += "]\n";
      for (const Keyword& k : sections_[s]) out += k.phrase + "\n";
    }
    return out;
  }

  /// FNV-1a 64 of the canonical form, as 16 hex digits.
  std::string hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : serialize()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  static std::string normalize_phrase(std::string_view phrase) {
    std::string out;
    bool space = false;
    for (char c : phrase) {
      if (c == ' ' || c == '\t' || c == '\r') {
        space = !out.empty();
        continue;
      }
      if (space) out.push_back(' ');
      space = false;
      out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c);
    }
    return out;
  }

 private:
  std::vector<Keyword> sections_[3];
};

inline const KeywordSet& default_keywords() {
  static const KeywordSet set = [] {
    KeywordSet k;
    for (std::string_view p : defaults::kGeneral) k.add(KeywordSection::General, p);
    for (std::string_view p : defaults::kTransition) k.add(KeywordSection::Transition, p);
    for (std::string_view p : defaults::kPhysical) k.add(KeywordSection::Physical, p);
    return k;
  }();
  return set;
}

inline KeywordSet parse_keywords(std::string_view text, const std::string& source = "<keywords>") {
  KeywordSet set;
  int current = -1;
  bool seen[3] = {false, false, false};
  std::size_t line_no = 0;
  for (std::string_view raw : io::split_lines(text)) {
    ++line_no;
    std::string line = KeywordSet::normalize_phrase(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line == "[general]") current = 0;
      else if (line == "[transition]") current = 1;
      else if (line == "[physical]") current = 2;
      else throw ValidationError(source, line_no, "unknown section " + line);
      if (seen[current]) throw ValidationError(source, line_no, "section " + line + " appears twice");
      seen[current] = true;
      continue;
    }
    if (current < 0) throw ValidationError(source, line_no, "phrase outside of a section");
    try {
      if (!set.add(static_cast<KeywordSection>(current), line))
        log::warn(source + ":" + std::to_string(line_no) + ": duplicate keyword '" + line + "' ignored");
    } catch (const ValidationError& e) {
      throw ValidationError(source, line_no, e.what());
    }
  }
  for (int s = 0; s < 3; ++s) {
    if (set.section(static_cast<KeywordSection>(s)).empty())
      throw ValidationError(source + ": section [" + std::string(to_string(static_cast<KeywordSection>(s))) +
                            "] is missing or empty");
  }
  return set;
}

/// Loads a keyword file, or the embedded default lists when `path` is empty.
inline KeywordSet load_keywords(const std::filesystem::path& path = {}) {
  if (path.empty()) return default_keywords();
  return parse_keywords(io::read_file(path), path.string());
}

/// Phrases whose stem sequence occurs contiguously in the page's stem
/// sequence. Each phrase is reported once, in keyword-set order.
inline std::vector<std::string> match_stems(const std::vector<std::string>& page_stems, const KeywordSet& keywords) {
  std::unordered_map<std::string_view, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < page_stems.size(); ++i) positions[page_stems[i]].push_back(i);

  std::vector<std::string> matched;
  std::unordered_set<std::string> reported;
  for (int s = 0; s < 3; ++s) {
    for (const Keyword& k : keywords.section(static_cast<KeywordSection>(s))) {
      if (reported.count(k.phrase)) continue;
      auto it = positions.find(k.stems.front());
      if (it == positions.end()) continue;
      for (std::size_t start : it->second) {
        if (start + k.stems.size() > page_stems.size()) break;
        bool ok = true;
        for (std::size_t j = 1; j < k.stems.size() && ok; ++j) ok = page_stems[start + j] == k.stems[j];
        if (ok) {
          matched.push_back(k.phrase);
          reported.insert(k.phrase);
          break;
        }
      }
    }
  }
  return matched;
}

inline std::vector<std::string> match_page(std::string_view page_text, const KeywordSet& keywords) {
  return match_stems(stem_tokens(page_text), keywords);
}

struct PageRelevance {
  std::string report_id;
  std::set<int> relevant_pages;
  std::map<int, std::vector<std::string>> direct_hits;
};

inline PageRelevance relevant_pages(const Report& report, const KeywordSet& keywords, int neighbor_radius = 1) {
  if (neighbor_radius < 0) throw ValidationError("neighbor_radius must be >= 0");
  PageRelevance rel;
  rel.report_id = report.id();
  std::set<int> existing;
  for (const Page& p : report.pages) {
    existing.insert(p.number);
    auto hits = match_page(p.text, keywords);
    if (!hits.empty()) rel.direct_hits.emplace(p.number, std::move(hits));
  }
  for (const auto& [page, hits] : rel.direct_hits) {
    auto lo = existing.lower_bound(page - neighbor_radius);
    auto hi = existing.upper_bound(neighbor_radius > INT_MAX - page ? INT_MAX : page + neighbor_radius);
    rel.relevant_pages.insert(lo, hi);
  }
  return rel;
}

}  // namespace riskminer

#endif  // RISKMINER_KEYWORDS_HPP
