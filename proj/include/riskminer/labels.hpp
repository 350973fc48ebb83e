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

//! Gold paragraph annotations.
//!
//! Label file: CSV with header `paragraph_id,classes,hard_negative,coder_id,split`.

#ifndef RISKMINER_LABELS_HPP
#define RISKMINER_LABELS_HPP

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/io.hpp"
#include "riskminer/segmenter.hpp"

namespace riskminer {

enum class Split : std::uint8_t { Train = 0, Val, Test };

inline constexpr std::string_view to_string(Split s) {
  constexpr std::string_view names[] = {"train", "val", "test"};
  return names[static_cast<int>(s)];
}

inline std::optional<Split> parse_split(std::string_view s) {
  if (s == "train") return Split::Train;
  if (s == "val") return Split::Val;
  if (s == "test") return Split::Test;
  return std::nullopt;
}

struct LabelRecord {
  std::string paragraph_id;
  RiskSet classes;
  bool hard_negative = false;
  std::string coder_id;
  Split split = Split::Train;

  friend bool operator==(const LabelRecord&, const LabelRecord&) = default;
};

struct GoldLabel {
  RiskSet classes;
  bool hard_negative = false;
};

struct ClassCounts {
  std::array<std::size_t, 5> per_class{};
  std::size_t unique_positive = 0;
  std::size_t negative = 0;
  std::size_t hard_negative = 0;
};

inline const std::vector<std::string>& label_file_header() {
  static const std::vector<std::string> header = {"paragraph_id", "classes", "hard_negative", "coder_id", "split"};
  return header;
}

class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<LabelRecord> records) : records_(std::move(records)) {}

  const std::vector<LabelRecord>& records() const noexcept { return records_; }
  bool empty() const noexcept { return records_.empty(); }

  std::vector<const LabelRecord*> by_split(Split split) const {
    std::vector<const LabelRecord*> out;
    for (const LabelRecord& r : records_)
      if (r.split == split) out.push_back(&r);
    return out;
  }

  std::set<std::string> coders() const {
    std::set<std::string> out;
    for (const LabelRecord& r : records_) out.insert(r.coder_id);
    return out;
  }

  /// One gold label per paragraph of `split`. With several coders on the
  /// same paragraph, `coder` picks one; otherwise the lexicographically
  /// smallest coder id wins.
  std::map<std::string, GoldLabel> gold(Split split, std::optional<std::string> coder = std::nullopt) const {
    std::map<std::string, std::pair<std::string, GoldLabel>> chosen;
    for (const LabelRecord& r : records_) {
      if (r.split != split) continue;
      if (coder && r.coder_id != *coder) continue;
      auto it = chosen.find(r.paragraph_id);
      if (it == chosen.end() || r.coder_id < it->second.first)
        chosen[r.paragraph_id] = {r.coder_id, GoldLabel{r.classes, r.hard_negative}};
    }
    std::map<std::string, GoldLabel> out;
    for (auto& [id, entry] : chosen) out.emplace(id, entry.second);
    return out;
  }

  /// Per-class paragraph counts for a split, counted over gold labels.
  ClassCounts counts(Split split) const {
    ClassCounts c;
    for (const auto& [id, g] : gold(split)) {
      for (RiskClass rc : g.classes.members()) ++c.per_class[static_cast<int>(rc)];
      if (!g.classes.empty()) ++c.unique_positive;
      else ++c.negative;
      if (g.hard_negative) ++c.hard_negative;
    }
    return c;
  }

  /// Report ids that carry at least one label in `split`.
  std::set<std::string> reports_in(Split split) const {
    std::set<std::string> out;
    for (const LabelRecord& r : records_) {
      if (r.split != split) continue;
      if (auto key = parse_paragraph_id(r.paragraph_id)) out.insert(key->report_id);
    }
    return out;
  }

 private:
  std::vector<LabelRecord> records_;
};

/// Parses label CSV text. When `paragraphs` is given, every id must resolve
/// against it.
inline LabelSet parse_labels(std::string_view text, const ParagraphIndex* paragraphs,
                             const std::string& source = "<labels>") {
  auto rows = io::parse_csv(text, source);
  if (rows.empty()) throw ValidationError(source, 1, "missing header");
  if (rows.front().fields != label_file_header())
    throw ValidationError(source, rows.front().line, "header must be paragraph_id,classes,hard_negative,coder_id,split");
  std::vector<LabelRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const io::CsvRow& row = rows[i];
    auto fail = [&](const std::string& msg) { throw ValidationError(source, row.line, msg); };
    if (row.fields.size() != 5) fail("expected 5 fields, got " + std::to_string(row.fields.size()));
    LabelRecord rec;
    rec.paragraph_id = row.fields[0];
    if (!parse_paragraph_id(rec.paragraph_id)) fail("malformed paragraph_id '" + rec.paragraph_id + "'");
    if (paragraphs && !paragraphs->find(rec.paragraph_id)) fail("unknown paragraph_id '" + rec.paragraph_id + "'");
    try {
      rec.classes = parse_risk_set(row.fields[1]);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    if (row.fields[2] == "true") rec.hard_negative = true;
    else if (row.fields[2] == "false") rec.hard_negative = false;
    else fail("hard_negative must be true or false, got '" + row.fields[2] + "'");
    if (rec.hard_negative && !rec.classes.empty()) fail("hard negative '" + rec.paragraph_id + "' has classes");
    rec.coder_id = row.fields[3];
    if (rec.coder_id.empty()) fail("empty coder_id");
    auto split = parse_split(row.fields[4]);
    if (!split) fail("split must be train, val or test, got '" + row.fields[4] + "'");
    rec.split = *split;
    if (!seen.emplace(rec.paragraph_id, rec.coder_id).second)
      fail("duplicate label for paragraph '" + rec.paragraph_id + "' by coder '" + rec.coder_id + "'");
    records.push_back(std::move(rec));
  }
  return LabelSet(std::move(records));
}

inline LabelSet load_labels(const std::filesystem::path& path, const ParagraphIndex& paragraphs) {
  return parse_labels(io::read_file(path), &paragraphs, path.string());
}

inline std::string serialize_labels(const LabelSet& labels) {
  io::CsvWriter w(label_file_header());
  for (const LabelRecord& r : labels.records())
    w.row({r.paragraph_id, format_risk_set(r.classes), r.hard_negative ? "true" : "false", r.coder_id,
           std::string(to_string(r.split))});
  return w.str();
}

struct SplitCheck {
  std::vector<std::string> shared_companies;  // sorted
  bool ok() const { return shared_companies.empty(); }
};

/// Validation and test labels must come from disjoint sets of companies.
inline SplitCheck check_split_disjointness(const LabelSet& labels, const Corpus& corpus) {
  auto companies = [&](Split split) {
    std::set<std::string> out;
    for (const std::string& rid : labels.reports_in(split))
      if (const Report* r = corpus.find(rid)) out.insert(r->meta.company_id);
    return out;
  };
  std::set<std::string> val = companies(Split::Val);
  std::set<std::string> test = companies(Split::Test);
  SplitCheck check;
  for (const std::string& c : val)
    if (test.count(c)) check.shared_companies.push_back(c);
  return check;
}

}  // namespace riskminer

#endif  // RISKMINER_LABELS_HPP
