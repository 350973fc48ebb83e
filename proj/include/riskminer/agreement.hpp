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

//! Inter-coder reliability: Krippendorff's alpha for two coders with
//! nominal values, applied to multi-label paragraph annotations.
//!
//! Multi-label annotations are unrolled into binary (paragraph, class)
//! units. Which paragraphs contribute units is controlled by the mode:
//!   union        - at least one coder assigned some class to the paragraph
//!   intersection - both coders assigned some class to the paragraph
//! Only paragraphs annotated by both coders are considered. This reading of
//! "union" and "intersection" is a reconstruction; both are offered so
//! either interpretation can be reproduced.

#ifndef RISKMINER_AGREEMENT_HPP
#define RISKMINER_AGREEMENT_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riskminer/classifier.hpp"
#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/labels.hpp"

namespace riskminer {

struct AlphaResult {
  std::optional<double> alpha;  // nullopt: no expected disagreement (degenerate)
  std::size_t units = 0;
  double observed_disagreement = 0.0;
  double expected_disagreement = 0.0;

  bool degenerate() const { return !alpha.has_value(); }
};

/// Nominal alpha for two coders, each unit carrying one value per coder.
///   D_o = (1/n) sum_{c!=k} o_ck,  D_e = 1/(n(n-1)) sum_{c!=k} n_c n_k
/// with o the coincidence matrix and n = 2 * units pairable values.
inline AlphaResult nominal_alpha(std::span<const std::pair<int, int>> units) {
  AlphaResult res;
  res.units = units.size();
  if (units.empty()) return res;
  std::map<int, double> marginals;
  double disagree = 0.0;  // sum over c != k of o_ck
  for (const auto& [a, b] : units) {
    marginals[a] += 1.0;
    marginals[b] += 1.0;
    if (a != b) disagree += 2.0;  // o_ab and o_ba each get 1
  }
  const double n = 2.0 * static_cast<double>(units.size());
  double sum_sq = 0.0;
  for (const auto& [v, count] : marginals) sum_sq += count * count;
  const double expected_pairs = n * n - sum_sq;  // sum_{c!=k} n_c n_k
  res.observed_disagreement = disagree / n;
  res.expected_disagreement = expected_pairs / (n * (n - 1.0));
  if (expected_pairs == 0.0) return res;
  res.alpha = 1.0 - (n - 1.0) * disagree / expected_pairs;
  return res;
}

enum class AlphaMode : std::uint8_t { Union = 0, Intersection };

inline std::optional<AlphaMode> parse_alpha_mode(std::string_view s) {
  if (s == "union") return AlphaMode::Union;
  if (s == "intersection") return AlphaMode::Intersection;
  return std::nullopt;
}

inline constexpr std::string_view to_string(AlphaMode m) { return m == AlphaMode::Union ? "union" : "intersection"; }

/// Two coders' annotations side by side; nullopt means "not annotated".
struct CoderMatrix {
  std::string coder_a, coder_b;
  std::vector<std::string> paragraph_ids;
  std::vector<std::optional<RiskSet>> a, b;
};

/// Builds the matrix over all paragraphs annotated by either coder, sorted
/// by paragraph id. Throws ValidationError when a coder is unknown or the
/// two ids are equal.
inline CoderMatrix build_coder_matrix(const LabelSet& labels, const std::string& coder_a, const std::string& coder_b) {
  if (coder_a == coder_b) throw ValidationError("inter-coder reliability needs two distinct coders");
  std::map<std::string, std::pair<std::optional<RiskSet>, std::optional<RiskSet>>> rows;
  bool seen_a = false, seen_b = false;
  for (const LabelRecord& r : labels.records()) {
    if (r.coder_id == coder_a) {
      rows[r.paragraph_id].first = r.classes;
      seen_a = true;
    } else if (r.coder_id == coder_b) {
      rows[r.paragraph_id].second = r.classes;
      seen_b = true;
    }
  }
  if (!seen_a) throw ValidationError("coder '" + coder_a + "' has no annotations");
  if (!seen_b) throw ValidationError("coder '" + coder_b + "' has no annotations");
  CoderMatrix m;
  m.coder_a = coder_a;
  m.coder_b = coder_b;
  for (auto& [id, pair] : rows) {
    m.paragraph_ids.push_back(id);
    m.a.push_back(pair.first);
    m.b.push_back(pair.second);
  }
  return m;
}

/// Binary (paragraph, class) units for one task under the given mode.
inline std::vector<std::pair<int, int>> alpha_units(const CoderMatrix& m, AlphaMode mode, Task task,
                                                    std::optional<std::size_t> only_class = std::nullopt) {
  std::vector<std::pair<int, int>> units;
  for (std::size_t i = 0; i < m.paragraph_ids.size(); ++i) {
    if (!m.a[i] || !m.b[i]) continue;
    bool any_a = !m.a[i]->empty(), any_b = !m.b[i]->empty();
    bool keep = mode == AlphaMode::Union ? (any_a || any_b) : (any_a && any_b);
    if (!keep) continue;
    LabelBits la = project(*m.a[i], task), lb = project(*m.b[i], task);
    for (std::size_t c = 0; c < num_classes(task); ++c) {
      if (only_class && *only_class != c) continue;
      units.emplace_back(has_class(la, c) ? 1 : 0, has_class(lb, c) ? 1 : 0);
    }
  }
  return units;
}

inline AlphaResult krippendorff_alpha(const CoderMatrix& m, AlphaMode mode, Task task = Task::FiveClass) {
  auto units = alpha_units(m, mode, task);
  return nominal_alpha(units);
}

struct AlphaRow {
  std::string scope;  // "binary", "two", "five" (overall) or a class name
  AlphaResult result;
};

/// Alpha per task, with the five-class pooled value as the overall figure,
/// followed by one row per risk class.
inline std::vector<AlphaRow> alpha_report(const CoderMatrix& m, AlphaMode mode) {
  std::vector<AlphaRow> rows;
  for (Task t : {Task::Binary, Task::TwoClass, Task::FiveClass}) {
    auto units = alpha_units(m, mode, t);
    rows.push_back(AlphaRow{std::string(to_string(t)), nominal_alpha(units)});
  }
  auto names = class_names(Task::FiveClass);
  for (std::size_t c = 0; c < names.size(); ++c) {
    auto units = alpha_units(m, mode, Task::FiveClass, c);
    rows.push_back(AlphaRow{names[c], nominal_alpha(units)});
  }
  return rows;
}

}  // namespace riskminer

#endif  // RISKMINER_AGREEMENT_HPP
