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

#ifndef RISKMINER_METRICS_HPP
#define RISKMINER_METRICS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "riskminer/error.hpp"

namespace riskminer {

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Precision, recall and F1 from counts; every zero denominator yields 0.
inline PRF prf1(std::size_t tp, std::size_t fp, std::size_t fn) {
  PRF r;
  if (tp + fp > 0) r.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn > 0) r.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  if (r.precision + r.recall > 0.0) r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

/// Unweighted mean. Throws ValidationError on empty input.
inline double macro_average(std::span<const double> values) {
  if (values.empty()) throw ValidationError("macro average of zero classes");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

struct ScoredItem {
  double score = 0.0;
  bool positive = false;
};

/// Area under the precision-recall curve as the step sum
/// AP = sum_n (R_n - R_{n-1}) * P_n over descending-score cutoffs. Items
/// with equal scores enter at the same cutoff, so the result does not
/// depend on input order. Throws ValidationError without positives.
inline double average_precision(std::span<const ScoredItem> items) {
  std::size_t total_pos = 0;
  for (const ScoredItem& it : items) total_pos += it.positive ? 1 : 0;
  if (total_pos == 0) throw ValidationError("average precision needs at least one positive");

  std::vector<ScoredItem> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end(), [](const ScoredItem& a, const ScoredItem& b) { return a.score > b.score; });

  double ap = 0.0;
  double prev_recall = 0.0;
  std::size_t tp = 0;
  std::size_t seen = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].score == sorted[i].score) {
      tp += sorted[j].positive ? 1 : 0;
      ++j;
    }
    seen += j - i;
    double recall = static_cast<double>(tp) / static_cast<double>(total_pos);
    double precision = static_cast<double>(tp) / static_cast<double>(seen);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j;
  }
  return ap;
}

}  // namespace riskminer

#endif  // RISKMINER_METRICS_HPP
