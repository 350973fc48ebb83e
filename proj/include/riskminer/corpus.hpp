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

//! Report corpus data model and the JSON-lines corpus file format.
//!
//! One report per line:
//!   {"report_id": ..., "company_id": ..., "company_name": ..., "country": "FR",
//!    "industry": ..., "year": 2019, "pages": [{"number": 1, "text": ...}, ...]}

#ifndef RISKMINER_CORPUS_HPP
#define RISKMINER_CORPUS_HPP

#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "riskminer/error.hpp"
#include "riskminer/io.hpp"

namespace riskminer {

// ---------------------------------------------------------------------------
// Risk taxonomy

enum class RiskClass : std::uint8_t { Acute = 0, Chronic, PolicyLegal, TechMarket, Reputation };

inline constexpr std::array<RiskClass, 5> kAllRiskClasses = {
    RiskClass::Acute, RiskClass::Chronic, RiskClass::PolicyLegal, RiskClass::TechMarket, RiskClass::Reputation};

enum class RiskGroup : std::uint8_t { Physical = 0, Transition };

inline constexpr RiskGroup group_of(RiskClass c) {
  return (c == RiskClass::Acute || c == RiskClass::Chronic) ? RiskGroup::Physical : RiskGroup::Transition;
}

inline constexpr std::string_view to_string(RiskClass c) {
  constexpr std::string_view names[] = {"acute", "chronic", "policy_legal", "tech_market", "reputation"};
  return names[static_cast<int>(c)];
}

inline constexpr std::string_view to_string(RiskGroup g) {
  return g == RiskGroup::Physical ? "physical" : "transition";
}

inline std::optional<RiskClass> parse_risk_class(std::string_view name) {
  for (RiskClass c : kAllRiskClasses)
    if (to_string(c) == name) return c;
  return std::nullopt;
}

/// Bit set over the five risk classes.
class RiskSet {
 public:
  constexpr RiskSet() = default;
  constexpr RiskSet(std::initializer_list<RiskClass> classes) {
    for (RiskClass c : classes) insert(c);
  }
  static constexpr RiskSet from_bits(std::uint8_t bits) {
    RiskSet s;
    s.bits_ = bits & 0x1F;
    return s;
  }

  constexpr void insert(RiskClass c) { bits_ |= static_cast<std::uint8_t>(1u << static_cast<int>(c)); }
  constexpr void erase(RiskClass c) { bits_ &= static_cast<std::uint8_t>(~(1u << static_cast<int>(c))); }
  constexpr bool contains(RiskClass c) const { return (bits_ >> static_cast<int>(c)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr int size() const {
    int n = 0;
    for (std::uint8_t b = bits_; b; b &= static_cast<std::uint8_t>(b - 1)) ++n;
    return n;
  }
  constexpr bool intersects_group(RiskGroup g) const {
    for (RiskClass c : kAllRiskClasses)
      if (contains(c) && group_of(c) == g) return true;
    return false;
  }
  std::vector<RiskClass> members() const {
    std::vector<RiskClass> out;
    for (RiskClass c : kAllRiskClasses)
      if (contains(c)) out.push_back(c);
    return out;
  }
  RiskSet operator|(RiskSet o) const { return from_bits(bits_ | o.bits_); }
  friend constexpr bool operator==(RiskSet, RiskSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// "acute;policy_legal" style rendering, classes in canonical order.
inline std::string format_risk_set(RiskSet s) {
  std::string out;
  for (RiskClass c : s.members()) {
    if (!out.empty()) out.push_back(';');
    out += to_string(c);
  }
  return out;
}

/// Parses a semicolon-joined class list; empty text is the empty set.
/// Throws std::invalid_argument naming the unknown class.
inline RiskSet parse_risk_set(std::string_view text) {
  RiskSet s;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view name = text.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      auto c = parse_risk_class(name);
      if (!c) throw std::invalid_argument("unknown class '" + std::string(name) + "'");
      s.insert(*c);
    }
    start = end + 1;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Reports

struct ReportMeta {
  std::string report_id;
  std::string company_id;
  std::string company_name;
  std::string country;  // ISO 3166-1 alpha-2
  std::string industry;
  int year = 0;

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

struct Page {
  int number = 0;  // 1-based
  std::string text;

  friend bool operator==(const Page&, const Page&) = default;
};

struct Report {
  ReportMeta meta;
  std::vector<Page> pages;

  const std::string& id() const noexcept { return meta.report_id; }
  const Page* find_page(int number) const {
    for (const Page& p : pages)
      if (p.number == number) return &p;
    return nullptr;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline constexpr int kMinYear = 1990;
inline constexpr int kMaxYear = 2100;

inline bool is_country_code(std::string_view c) {
  return c.size() == 2 && c[0] >= 'A' && c[0] <= 'Z' && c[1] >= 'A' && c[1] <= 'Z';
}

/// Checks the per-report invariants; returns an error message or empty.
inline std::string validate_report(const Report& r) {
  if (r.meta.report_id.empty()) return "empty report_id";
  if (r.meta.report_id.find_first_of("\n\r") != std::string::npos) return "report_id contains a line break";
  if (r.meta.company_id.empty()) return "empty company_id";
  if (!is_country_code(r.meta.country)) return "invalid country '" + r.meta.country + "' (need two uppercase letters)";
  if (r.meta.year < kMinYear || r.meta.year > kMaxYear)
    return "year " + std::to_string(r.meta.year) + " outside [1990, 2100]";
  int prev = 0;
  for (const Page& p : r.pages) {
    if (p.number < 1) return "page number " + std::to_string(p.number) + " is not positive";
    if (p.number <= prev) return "page numbers not strictly increasing at page " + std::to_string(p.number);
    prev = p.number;
  }
  return {};
}

/// An ordered collection of reports with unique ids. Immutable once built.
class Corpus {
 public:
  Corpus() = default;

  /// Throws ValidationError on a duplicate id or an invalid report.
  void add(Report report) {
    if (std::string err = validate_report(report); !err.empty()) throw ValidationError(err);
    if (index_.count(report.meta.report_id)) throw ValidationError("duplicate report_id '" + report.meta.report_id + "'");
    index_.emplace(report.meta.report_id, reports_.size());
    reports_.push_back(std::move(report));
  }

  const std::vector<Report>& reports() const noexcept { return reports_; }
  std::size_t size() const noexcept { return reports_.size(); }
  bool empty() const noexcept { return reports_.empty(); }

  const Report* find(std::string_view report_id) const {
    auto it = index_.find(std::string(report_id));
    return it == index_.end() ? nullptr : &reports_[it->second];
  }

  friend bool operator==(const Corpus& a, const Corpus& b) { return a.reports_ == b.reports_; }

 private:
  std::vector<Report> reports_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

inline std::string json_string_field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
  if (!it->is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

inline long long json_int_field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  return it->get<long long>();
}

inline Report report_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("record is not a JSON object");
  Report r;
  r.meta.report_id = json_string_field(j, "report_id");
  r.meta.company_id = json_string_field(j, "company_id");
  r.meta.company_name = json_string_field(j, "company_name");
  r.meta.country = json_string_field(j, "country");
  r.meta.industry = json_string_field(j, "industry");
  long long year = json_int_field(j, "year");
  if (year < kMinYear || year > kMaxYear) throw std::invalid_argument("year " + std::to_string(year) + " outside [1990, 2100]");
  r.meta.year = static_cast<int>(year);
  auto pages = j.find("pages");
  if (pages == j.end() || !pages->is_array()) throw std::invalid_argument("field 'pages' must be an array");
  for (const auto& pj : *pages) {
    if (!pj.is_object()) throw std::invalid_argument("page entry is not an object");
    long long number = json_int_field(pj, "number");
    if (number < 1 || number > 1'000'000) throw std::invalid_argument("page number " + std::to_string(number) + " out of range");
    r.pages.push_back(Page{static_cast<int>(number), json_string_field(pj, "text")});
  }
  return r;
}

}  // namespace detail

/// Parses corpus text (JSON lines). Blank lines are ignored. Errors carry
/// the 1-based line number of the offending record.
inline Corpus parse_corpus(std::string_view text, const std::string& source = "<corpus>") {
  Corpus corpus;
  std::size_t line_no = 0;
  for (std::string_view line : io::split_lines(text)) {
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    Report report;
    try {
      report = detail::report_from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(source, line_no, std::string("malformed record: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(source, line_no, e.what());
    }
    try {
      corpus.add(std::move(report));
    } catch (const ValidationError& e) {
      throw ValidationError(source, line_no, e.what());
    }
  }
  return corpus;
}

inline Corpus load_corpus(const std::filesystem::path& path) {
  return parse_corpus(io::read_file(path), path.string());
}

inline std::string report_to_json_line(const Report& r) {
  nlohmann::ordered_json j;
  j["report_id"] = r.meta.report_id;
  j["company_id"] = r.meta.company_id;
  j["company_name"] = r.meta.company_name;
  j["country"] = r.meta.country;
  j["industry"] = r.meta.industry;
  j["year"] = r.meta.year;
  nlohmann::ordered_json pages = nlohmann::ordered_json::array();
  for (const Page& p : r.pages) {
    nlohmann::ordered_json pj;
    pj["number"] = p.number;
    pj["text"] = p.text;
    pages.push_back(std::move(pj));
  }
  j["pages"] = std::move(pages);
  return j.dump();
}

inline std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const Report& r : corpus.reports()) {
    out += report_to_json_line(r);
    out.push_back('\n');
  }
  return out;
}

inline void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  io::write_file_atomic(path, serialize_corpus(corpus));
}

// ---------------------------------------------------------------------------
// Paragraph ids

struct Paragraph {
  std::string paragraph_id;
  std::string report_id;
  int page_number = 0;
  int index_on_page = 0;
  std::string text;

  friend bool operator==(const Paragraph&, const Paragraph&) = default;
};

inline std::string make_paragraph_id(std::string_view report_id, int page, int index) {
  std::string id(report_id);
  id += ':';
  id += std::to_string(page);
  id += ':';
  id += std::to_string(index);
  return id;
}

struct ParagraphKey {
  std::string report_id;
  int page_number = 0;
  int index_on_page = 0;
  friend bool operator==(const ParagraphKey&, const ParagraphKey&) = default;
};

/// Splits "<report_id>:<page>:<index>" from the right, so report ids may
/// themselves contain ':'. Page must be >= 1, index >= 0, both canonical
/// decimal (no sign, no leading zeros).
inline std::optional<ParagraphKey> parse_paragraph_id(std::string_view id) {
  auto parse_uint = [](std::string_view s, int& out) {
    if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
  };
  std::size_t last = id.rfind(':');
  if (last == std::string_view::npos || last == 0) return std::nullopt;
  std::size_t mid = id.rfind(':', last - 1);
  if (mid == std::string_view::npos || mid == 0) return std::nullopt;
  ParagraphKey key;
  key.report_id = std::string(id.substr(0, mid));
  if (!parse_uint(id.substr(mid + 1, last - mid - 1), key.page_number) || key.page_number < 1) return std::nullopt;
  if (!parse_uint(id.substr(last + 1), key.index_on_page)) return std::nullopt;
  return key;
}

}  // namespace riskminer

#endif  // RISKMINER_CORPUS_HPP
