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

//! Corpus-scale inference and mention statistics.
//!
//! A mention is one predicted (paragraph, risk class) pair, so a paragraph
//! predicted with two classes yields two mentions. Group means divide by
//! every report in the group, including reports without mentions.

#ifndef RISKMINER_ANALYTICS_HPP
#define RISKMINER_ANALYTICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "riskminer/bundle.hpp"
#include "riskminer/classifier.hpp"
#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/io.hpp"
#include "riskminer/keywords.hpp"
#include "riskminer/segmenter.hpp"

namespace riskminer {

struct MentionRecord {
  std::string report_id;
  std::string paragraph_id;
  RiskClass risk_class = RiskClass::Acute;
  friend bool operator==(const MentionRecord&, const MentionRecord&) = default;
};

/// Runs `fn(i)` for i in [0, n) on up to `workers` threads. Each index is
/// handled by exactly one thread; callers write to slot i only.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  w = std::min(w, std::max<std::size_t>(n, 1));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(w);
  for (std::size_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += w) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Mentions for one report: keyword page filter, segmentation of relevant
/// pages only, then prediction.
inline std::vector<MentionRecord> infer_report(const Report& report, const KeywordSet& keywords,
                                               const ModelBundle& bundle, int neighbor_radius) {
  std::vector<MentionRecord> out;
  PageRelevance rel = relevant_pages(report, keywords, neighbor_radius);
  for (const Page& page : report.pages) {
    if (!rel.relevant_pages.count(page.number)) continue;
    for (const Paragraph& p : segment_page_of(report, page, bundle.segmenter)) {
      LabelBits labels = predict(bundle.model, bundle.thresholds, bundle.vocabulary.vectorize(p.text));
      for (RiskClass c : kAllRiskClasses)
        if (has_class(labels, static_cast<std::size_t>(c))) out.push_back(MentionRecord{report.id(), p.paragraph_id, c});
    }
  }
  return out;
}

/// Mention records over the whole corpus in corpus order. The bundle must
/// be a five-class model. Output does not depend on `workers`.
inline std::vector<MentionRecord> infer_corpus(const Corpus& corpus, const KeywordSet& keywords, const ModelBundle& bundle,
                                               int neighbor_radius = 1, int workers = 1) {
  bundle.validate();
  if (bundle.task != Task::FiveClass)
    throw ValidationError("corpus inference needs a five-class bundle, got '" + std::string(to_string(bundle.task)) + "'");
  const auto& reports = corpus.reports();
  std::vector<std::vector<MentionRecord>> per_report(reports.size());
  parallel_for(reports.size(), workers,
               [&](std::size_t i) { per_report[i] = infer_report(reports[i], keywords, bundle, neighbor_radius); });
  std::vector<MentionRecord> out;
  for (auto& v : per_report) out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  return out;
}

inline std::string mentions_csv(std::span<const MentionRecord> records) {
  io::CsvWriter w({"report_id", "paragraph_id", "class"});
  for (const MentionRecord& m : records) w.row({m.report_id, m.paragraph_id, std::string(to_string(m.risk_class))});
  return w.str();
}

inline std::vector<MentionRecord> parse_mentions(std::string_view text, const Corpus& corpus,
                                                 const std::string& source = "<mentions>") {
  auto rows = io::parse_csv(text, source);
  if (rows.empty() || rows.front().fields != std::vector<std::string>{"report_id", "paragraph_id", "class"})
    throw ValidationError(source, 1, "header must be report_id,paragraph_id,class");
  std::vector<MentionRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    if (f.size() != 3) throw ValidationError(source, rows[i].line, "expected 3 fields");
    auto c = parse_risk_class(f[2]);
    if (!c) throw ValidationError(source, rows[i].line, "unknown class '" + f[2] + "'");
    if (!corpus.find(f[0])) throw ValidationError(source, rows[i].line, "unknown report_id '" + f[0] + "'");
    out.push_back(MentionRecord{f[0], f[1], *c});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bootstrap

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Linear-interpolation percentile of sorted data, q in [0, 1].
inline double percentile_sorted(std::span<const double> sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

/// Percentile bootstrap of the mean. Each of the `resamples` rounds draws
/// n indices as `rng() % n` from std::mt19937_64(seed); the interval is the
/// ((1-level)/2, (1+level)/2) percentiles of the resample means.
inline Interval bootstrap_ci(std::span<const double> values, std::size_t resamples = 1000, double level = 0.95,
                             std::uint64_t seed = 0) {
  if (values.empty()) throw ValidationError("bootstrap of an empty sample");
  if (resamples < 1) throw ValidationError("bootstrap needs at least one resample");
  if (!(level > 0.0 && level < 1.0)) throw ValidationError("confidence level must lie in (0, 1)");
  const std::size_t n = values.size();
  std::mt19937_64 rng(seed);
  std::vector<double> means(resamples);
  for (std::size_t b = 0; b < resamples; ++b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += values[static_cast<std::size_t>(rng() % n)];
    means[b] = sum / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  const double tail = (1.0 - level) / 2.0;
  return Interval{percentile_sorted(means, tail), percentile_sorted(means, 1.0 - tail)};
}

// ---------------------------------------------------------------------------
// Aggregation

enum class GroupBy : std::uint8_t { Year = 0, CountryYear, Industry };
enum class ClassGrouping : std::uint8_t { Five = 0, Two, All };

inline std::optional<GroupBy> parse_group_by(std::string_view s) {
  if (s == "year") return GroupBy::Year;
  if (s == "country_year") return GroupBy::CountryYear;
  if (s == "industry") return GroupBy::Industry;
  return std::nullopt;
}

inline std::optional<ClassGrouping> parse_class_grouping(std::string_view s) {
  if (s == "five") return ClassGrouping::Five;
  if (s == "two") return ClassGrouping::Two;
  if (s == "all") return ClassGrouping::All;
  return std::nullopt;
}

struct AggregateOptions {
  GroupBy group_by = GroupBy::Year;
  ClassGrouping classes = ClassGrouping::Five;
  int industry_year_from = 2015;  // industry grouping only
  int industry_year_to = 2020;
  std::size_t bootstrap_resamples = 1000;
  double level = 0.95;
  std::uint64_t seed = 0;
};

struct AggregateRow {
  std::string group_key;
  std::string class_name;
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t n_reports = 0;
  std::size_t total_mentions = 0;  // exact numerator of `mean`
};

/// Names of the output classes of a grouping and the five-class -> output
/// membership.
inline std::vector<std::string> grouping_names(ClassGrouping g) {
  switch (g) {
    case ClassGrouping::Five: return class_names(Task::FiveClass);
    case ClassGrouping::Two: return class_names(Task::TwoClass);
    case ClassGrouping::All: return {"all"};
  }
  return {};
}

inline std::size_t grouping_index(ClassGrouping g, RiskClass c) {
  switch (g) {
    case ClassGrouping::Five: return static_cast<std::size_t>(c);
    case ClassGrouping::Two: return group_of(c) == RiskGroup::Physical ? 0 : 1;
    case ClassGrouping::All: return 0;
  }
  return 0;
}

/// Per-report mention counts in the requested class grouping, for every
/// report in the corpus (zero rows included).
inline std::unordered_map<std::string, std::vector<std::size_t>> per_report_counts(std::span<const MentionRecord> records,
                                                                                   const Corpus& corpus, ClassGrouping g) {
  const std::size_t k = grouping_names(g).size();
  std::unordered_map<std::string, std::vector<std::size_t>> counts;
  for (const Report& r : corpus.reports()) counts.emplace(r.id(), std::vector<std::size_t>(k, 0));
  for (const MentionRecord& m : records) {
    auto it = counts.find(m.report_id);
    if (it == counts.end()) throw ValidationError("mention references unknown report '" + m.report_id + "'");
    ++it->second[grouping_index(g, m.risk_class)];
  }
  return counts;
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string group_key_of(const ReportMeta& m, GroupBy g) {
  switch (g) {
    case GroupBy::Year: return std::to_string(m.year);
    case GroupBy::CountryYear: return m.country + ":" + std::to_string(m.year);
    case GroupBy::Industry: return m.industry;
  }
  return {};
}

/// Rows sorted by group key, then class order. Each (group, class) CI uses
/// its own seed derived from `options.seed` and the row identity.
inline std::vector<AggregateRow> aggregate(std::span<const MentionRecord> records, const Corpus& corpus,
                                           const AggregateOptions& options = {}) {
  auto counts = per_report_counts(records, corpus, options.classes);
  auto names = grouping_names(options.classes);

  std::map<std::string, std::vector<const Report*>> groups;
  for (const Report& r : corpus.reports()) {
    if (options.group_by == GroupBy::Industry &&
        (r.meta.year < options.industry_year_from || r.meta.year > options.industry_year_to))
      continue;
    groups[group_key_of(r.meta, options.group_by)].push_back(&r);
  }
  if (groups.empty()) throw ValidationError("aggregation produced no groups");

  std::vector<AggregateRow> rows;
  for (const auto& [key, reports] : groups) {
    for (std::size_t c = 0; c < names.size(); ++c) {
      std::vector<double> values;
      std::size_t total = 0;
      for (const Report* r : reports) {
        std::size_t v = counts.at(r->id())[c];
        values.push_back(static_cast<double>(v));
        total += v;
      }
      AggregateRow row;
      row.group_key = key;
      row.class_name = names[c];
      row.n_reports = reports.size();
      row.total_mentions = total;
      row.mean = static_cast<double>(total) / static_cast<double>(reports.size());
      std::uint64_t seed = fnv1a(names[c], fnv1a(key + "\x1f", options.seed ^ 0x9e3779b97f4a7c15ull));
      Interval ci = bootstrap_ci(values, options.bootstrap_resamples, options.level, seed);
      row.ci_low = ci.low;
      row.ci_high = ci.high;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string aggregate_csv(std::span<const AggregateRow> rows) {
  io::CsvWriter w({"group_key", "class", "mean", "ci_low", "ci_high", "n_reports"});
  for (const AggregateRow& r : rows)
    w.row({r.group_key, r.class_name, io::format_real(r.mean), io::format_real(r.ci_low), io::format_real(r.ci_high),
           std::to_string(r.n_reports)});
  return w.str();
}

// ---------------------------------------------------------------------------
// Coverage

struct CoverageRow {
  std::string class_name;
  std::size_t coverage = 0;         // reports with >= 1 mention
  std::optional<double> mean;       // over covered reports
  std::optional<double> stdev;      // sample (n - 1); needs coverage >= 2
  std::optional<std::size_t> max;
};

inline std::vector<CoverageRow> coverage_stats(std::span<const MentionRecord> records, const Corpus& corpus) {
  auto counts = per_report_counts(records, corpus, ClassGrouping::Five);
  auto names = class_names(Task::FiveClass);
  std::vector<CoverageRow> rows;
  for (std::size_t c = 0; c < names.size(); ++c) {
    CoverageRow row;
    row.class_name = names[c];
    std::vector<double> covered;
    std::size_t mx = 0;
    for (const Report& r : corpus.reports()) {  // corpus order keeps sums deterministic
      std::size_t v = counts.at(r.id())[c];
      if (v == 0) continue;
      covered.push_back(static_cast<double>(v));
      mx = std::max(mx, v);
    }
    row.coverage = covered.size();
    if (!covered.empty()) {
      double sum = 0.0;
      for (double v : covered) sum += v;
      double mean = sum / static_cast<double>(covered.size());
      row.mean = mean;
      row.max = mx;
      if (covered.size() >= 2) {
        double ss = 0.0;
        for (double v : covered) ss += (v - mean) * (v - mean);
        row.stdev = std::sqrt(ss / static_cast<double>(covered.size() - 1));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string coverage_csv(std::span<const CoverageRow> rows) {
  io::CsvWriter w({"class", "coverage", "mean", "stdev", "max"});
  for (const CoverageRow& r : rows)
    w.row({r.class_name, std::to_string(r.coverage), r.mean ? io::format_real(*r.mean) : "",
           r.stdev ? io::format_real(*r.stdev) : "", r.max ? std::to_string(*r.max) : ""});
  return w.str();
}

}  // namespace riskminer

#endif  // RISKMINER_ANALYTICS_HPP
