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

//! Evaluation settings, the per-class metric report and import of
//! predictions produced by external models.

#ifndef RISKMINER_EVALUATION_HPP
#define RISKMINER_EVALUATION_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "riskminer/classifier.hpp"
#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/io.hpp"
#include "riskminer/keywords.hpp"
#include "riskminer/labels.hpp"
#include "riskminer/metrics.hpp"
#include "riskminer/segmenter.hpp"

namespace riskminer {

enum class Setting : std::uint8_t { Discriminatory = 0, HardNegatives, Realistic };

inline constexpr std::string_view to_string(Setting s) {
  constexpr std::string_view names[] = {"discriminatory", "hardneg", "realistic"};
  return names[static_cast<int>(s)];
}

inline std::optional<Setting> parse_setting(std::string_view s) {
  if (s == "discriminatory") return Setting::Discriminatory;
  if (s == "hardneg") return Setting::HardNegatives;
  if (s == "realistic") return Setting::Realistic;
  return std::nullopt;
}

using RelevanceMap = std::map<std::string, PageRelevance>;

struct EvalItem {
  std::string paragraph_id;
  RiskSet gold;
  friend bool operator==(const EvalItem&, const EvalItem&) = default;
};

/// Paragraphs that make up an evaluation setting, in corpus order.
///
///  - Discriminatory: labeled paragraphs with at least one class.
///  - HardNegatives: those plus paragraphs labeled as hard negatives.
///  - Realistic: every paragraph on a relevant page of a report in
///    `reports`, plus every labeled paragraph; unlabeled ones are negatives.
///
/// Realistic needs `relevance`; passing nullptr throws ValidationError.
inline std::vector<EvalItem> build_setting(const std::map<std::string, GoldLabel>& gold, const ParagraphIndex& paragraphs,
                                           Setting setting, const RelevanceMap* relevance = nullptr,
                                           const std::set<std::string>* reports = nullptr) {
  if (setting == Setting::Realistic && relevance == nullptr)
    throw ValidationError("the realistic setting needs page relevance data");
  std::vector<EvalItem> out;
  for (const Paragraph& p : paragraphs.all()) {
    auto g = gold.find(p.paragraph_id);
    bool include = false;
    RiskSet classes;
    if (g != gold.end()) {
      classes = g->second.classes;
      switch (setting) {
        case Setting::Discriminatory: include = !classes.empty(); break;
        case Setting::HardNegatives: include = !classes.empty() || g->second.hard_negative; break;
        case Setting::Realistic: include = true; break;
      }
    } else if (setting == Setting::Realistic) {
      if (reports == nullptr || reports->count(p.report_id)) {
        auto rel = relevance->find(p.report_id);
        include = rel != relevance->end() && rel->second.relevant_pages.count(p.page_number) > 0;
      }
    }
    if (include) out.push_back(EvalItem{p.paragraph_id, classes});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report

/// A model's output for one paragraph. `scores` is empty for hard-label
/// predictions.
struct Prediction {
  LabelBits labels = 0;
  std::vector<double> scores;
};

using PredictionMap = std::unordered_map<std::string, Prediction>;

struct ClassReport {
  std::string name;
  std::size_t tp = 0, fp = 0, fn = 0;
  PRF prf;
  std::optional<double> ap;  // absent without scores or without positives
};

struct EvalReport {
  Task task = Task::FiveClass;
  Setting setting = Setting::Realistic;
  std::vector<ClassReport> classes;
  PRF macro;
  std::optional<double> macro_ap;
  std::size_t n_paragraphs = 0;
};

/// Per-class counts judged independently for each class (multi-label).
/// Throws ValidationError when the subset is empty or a paragraph has no
/// prediction.
inline EvalReport evaluate(const PredictionMap& predictions, std::span<const EvalItem> items, Task task, Setting setting) {
  if (items.empty()) throw ValidationError("empty evaluation subset");
  const std::size_t k = num_classes(task);
  EvalReport rep;
  rep.task = task;
  rep.setting = setting;
  rep.n_paragraphs = items.size();
  auto names = class_names(task);
  rep.classes.resize(k);
  for (std::size_t c = 0; c < k; ++c) rep.classes[c].name = names[c];

  bool have_scores = true;
  std::vector<std::vector<ScoredItem>> scored(k);
  for (const EvalItem& item : items) {
    auto it = predictions.find(item.paragraph_id);
    if (it == predictions.end()) throw ValidationError("missing prediction for paragraph '" + item.paragraph_id + "'");
    const Prediction& pred = it->second;
    LabelBits gold = project(item.gold, task);
    if (pred.scores.size() != k) have_scores = false;
    for (std::size_t c = 0; c < k; ++c) {
      bool g = has_class(gold, c);
      bool p = has_class(pred.labels, c);
      if (g && p) ++rep.classes[c].tp;
      else if (p) ++rep.classes[c].fp;
      else if (g) ++rep.classes[c].fn;
      if (have_scores) scored[c].push_back(ScoredItem{pred.scores[c], g});
    }
  }

  std::vector<double> p, r, f, aps;
  for (std::size_t c = 0; c < k; ++c) {
    ClassReport& cr = rep.classes[c];
    cr.prf = prf1(cr.tp, cr.fp, cr.fn);
    if (have_scores && cr.tp + cr.fn > 0) {
      cr.ap = average_precision(scored[c]);
      aps.push_back(*cr.ap);
    }
    p.push_back(cr.prf.precision);
    r.push_back(cr.prf.recall);
    f.push_back(cr.prf.f1);
  }
  rep.macro = PRF{macro_average(p), macro_average(r), macro_average(f)};
  if (!aps.empty()) rep.macro_ap = macro_average(aps);
  return rep;
}

inline std::string eval_report_csv(const EvalReport& rep) {
  io::CsvWriter w({"class", "precision", "recall", "f1", "ap", "tp", "fp", "fn"});
  auto ap = [](const std::optional<double>& v) { return v ? io::format_real(*v) : std::string(); };
  std::size_t tp = 0, fp = 0, fn = 0;
  for (const ClassReport& c : rep.classes) {
    w.row({c.name, io::format_real(c.prf.precision), io::format_real(c.prf.recall), io::format_real(c.prf.f1), ap(c.ap),
           std::to_string(c.tp), std::to_string(c.fp), std::to_string(c.fn)});
    tp += c.tp;
    fp += c.fp;
    fn += c.fn;
  }
  w.row({"macro", io::format_real(rep.macro.precision), io::format_real(rep.macro.recall), io::format_real(rep.macro.f1),
         ap(rep.macro_ap), std::to_string(tp), std::to_string(fp), std::to_string(fn)});
  return w.str();
}

// ---------------------------------------------------------------------------
// External predictions

namespace detail {

inline double parse_score(const std::string& text, const std::string& source, std::size_t line) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
    throw ValidationError(source, line, "malformed score '" + text + "'");
  return v;
}

/// Maps a class name (task name or five-class name) onto task label bits.
inline LabelBits parse_task_labels(std::string_view text, Task task) {
  LabelBits bits = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view name = text.substr(start, end - start);
    if (!name.empty()) {
      if (auto idx = class_index(task, name)) bits = static_cast<LabelBits>(bits | (1u << *idx));
      else if (auto rc = parse_risk_class(name)) bits = static_cast<LabelBits>(bits | project(RiskSet{*rc}, task));
      else throw std::invalid_argument("unknown class '" + std::string(name) + "'");
    }
    start = end + 1;
  }
  return bits;
}

}  // namespace detail

struct ExternalPredictions {
  bool has_scores = false;
  PredictionMap predictions;
};

/// Reads `paragraph_id,classes` (hard labels) or
/// `paragraph_id,score_<class>...` (one column per task class, or the five
/// risk classes, which are max-pooled onto coarser tasks). Score files get
/// labels from `threshold` until re-thresholded by calibration.
inline ExternalPredictions parse_external_predictions(std::string_view text, Task task, const ParagraphIndex* paragraphs,
                                                      const std::string& source = "<predictions>", double threshold = 0.5) {
  auto rows = io::parse_csv(text, source);
  if (rows.empty()) throw ValidationError(source, 1, "missing header");
  const auto& header = rows.front().fields;
  if (header.empty() || header[0] != "paragraph_id") throw ValidationError(source, 1, "first column must be paragraph_id");

  ExternalPredictions out;
  enum class Kind { Labels, TaskScores, FiveScores } kind;
  auto task_names = class_names(task);
  auto five_names = class_names(Task::FiveClass);
  auto score_header = [](const std::vector<std::string>& names) {
    std::vector<std::string> h = {"paragraph_id"};
    for (const auto& n : names) h.push_back("score_" + n);
    return h;
  };
  if (header == std::vector<std::string>{"paragraph_id", "classes"}) kind = Kind::Labels;
  else if (header == score_header(task_names)) kind = Kind::TaskScores;
  else if (header == score_header(five_names)) kind = Kind::FiveScores;
  else throw ValidationError(source, 1, "unrecognized prediction header");
  out.has_scores = kind != Kind::Labels;

  const std::size_t k = num_classes(task);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != header.size())
      throw ValidationError(source, row.line, "expected " + std::to_string(header.size()) + " fields");
    const std::string& id = row.fields[0];
    if (paragraphs ? paragraphs->find(id) == nullptr : !parse_paragraph_id(id))
      throw ValidationError(source, row.line, "unknown paragraph_id '" + id + "'");
    Prediction pred;
    if (kind == Kind::Labels) {
      try {
        pred.labels = detail::parse_task_labels(row.fields[1], task);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(source, row.line, e.what());
      }
    } else {
      std::vector<double> raw;
      for (std::size_t i = 1; i < row.fields.size(); ++i) raw.push_back(detail::parse_score(row.fields[i], source, row.line));
      if (kind == Kind::TaskScores) {
        pred.scores = std::move(raw);
      } else {
        pred.scores.assign(k, -std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < raw.size(); ++i) {
          LabelBits bits = project(RiskSet{kAllRiskClasses[i]}, task);
          for (std::size_t c = 0; c < k; ++c)
            if (has_class(bits, c)) pred.scores[c] = std::max(pred.scores[c], raw[i]);
        }
      }
      pred.labels = predict_from_scores(pred.scores, ThresholdSet{std::vector<double>(k, threshold)});
    }
    if (!out.predictions.emplace(id, std::move(pred)).second)
      throw ValidationError(source, row.line, "duplicate paragraph_id '" + id + "'");
  }
  return out;
}

inline ExternalPredictions import_external_predictions(const std::filesystem::path& path, Task task,
                                                       const ParagraphIndex* paragraphs, double threshold = 0.5) {
  return parse_external_predictions(io::read_file(path), task, paragraphs, path.string(), threshold);
}

/// Re-derives labels of score-bearing predictions from per-class thresholds.
inline void apply_thresholds(PredictionMap& predictions, const ThresholdSet& thresholds) {
  for (auto& [id, pred] : predictions)
    if (!pred.scores.empty()) pred.labels = predict_from_scores(pred.scores, thresholds);
}

/// Calibrates thresholds from score-bearing predictions over `items`.
inline ThresholdSet calibrate_from_predictions(const PredictionMap& predictions, std::span<const EvalItem> items, Task task) {
  std::vector<std::vector<double>> scores;
  std::vector<LabelBits> labels;
  for (const EvalItem& item : items) {
    auto it = predictions.find(item.paragraph_id);
    if (it == predictions.end()) throw ValidationError("missing prediction for paragraph '" + item.paragraph_id + "'");
    if (it->second.scores.empty()) throw ValidationError("calibration needs score predictions");
    scores.push_back(it->second.scores);
    labels.push_back(project(item.gold, task));
  }
  return calibrate_thresholds(scores, labels, task);
}

}  // namespace riskminer

#endif  // RISKMINER_EVALUATION_HPP
