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

// Brute-force reference implementations used as test oracles. Each one
// recomputes a quantity directly from its definition, without reusing the
// library routine under test.

#ifndef RISKMINER_TESTS_ORACLES_HPP
#define RISKMINER_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "riskminer/text.hpp"

namespace oracle {

/// Dense TF-IDF matrix [doc][term] over the fitted documents, with terms in
/// lexicographic order. Preprocessing (tokenize, stop words, stem) is
/// shared with the library; the weighting is recomputed here.
struct DenseTfidf {
  std::vector<std::string> terms;
  std::vector<std::vector<double>> rows;
};

inline DenseTfidf dense_tfidf(const std::vector<std::string>& fit_docs, const std::vector<std::string>& docs,
                              int min_df, const riskminer::StopwordSet& stop) {
  std::vector<std::vector<std::string>> fit_terms;
  for (const auto& d : fit_docs) fit_terms.push_back(riskminer::analyze(d, stop));
  std::set<std::string> all;
  for (const auto& t : fit_terms) all.insert(t.begin(), t.end());
  DenseTfidf out;
  std::vector<double> idf;
  const double n = static_cast<double>(fit_docs.size());
  for (const std::string& term : all) {
    int df = 0;
    for (const auto& t : fit_terms) df += std::count(t.begin(), t.end(), term) > 0 ? 1 : 0;
    if (df < min_df) continue;
    out.terms.push_back(term);
    idf.push_back(std::log((1.0 + n) / (1.0 + df)) + 1.0);
  }
  for (const auto& d : docs) {
    auto terms = riskminer::analyze(d, stop);
    std::vector<double> row(out.terms.size(), 0.0);
    double ss = 0.0;
    for (std::size_t j = 0; j < out.terms.size(); ++j) {
      auto tf = std::count(terms.begin(), terms.end(), out.terms[j]);
      if (tf == 0) continue;
      row[j] = (1.0 + std::log(static_cast<double>(tf))) * idf[j];
      ss += row[j] * row[j];
    }
    if (ss > 0)
      for (double& v : row) v /= std::sqrt(ss);
    out.rows.push_back(std::move(row));
  }
  return out;
}

struct Counts {
  std::size_t tp = 0, fp = 0, fn = 0;
};

/// Confusion counts of the rule "predict positive iff score >= threshold".
inline Counts confusion(const std::vector<double>& scores, const std::vector<bool>& gold, double threshold) {
  Counts c;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    bool p = scores[i] >= threshold;
    if (p && gold[i]) ++c.tp;
    else if (p) ++c.fp;
    else if (gold[i]) ++c.fn;
  }
  return c;
}

/// F1 as a reduced fraction comparison-friendly double: 2tp / (2tp+fp+fn).
inline double f1_counts(const Counts& c) {
  const std::size_t den = 2 * c.tp + c.fp + c.fn;
  return den == 0 ? 0.0 : static_cast<double>(2 * c.tp) / static_cast<double>(den);
}

/// Best F1 over every distinct way of cutting the sorted scores, found by
/// trying each observed score as a threshold plus "predict nothing".
inline double best_f1_sweep(const std::vector<double>& scores, const std::vector<bool>& gold) {
  std::set<double> cuts(scores.begin(), scores.end());
  double best = f1_counts(confusion(scores, gold, std::numeric_limits<double>::infinity()));
  for (double t : cuts) best = std::max(best, f1_counts(confusion(scores, gold, t)));
  return best;
}

/// Average precision from its definition: for each distinct score cutoff
/// (descending), add (recall gain) * precision at that cutoff.
inline double average_precision(const std::vector<double>& scores, const std::vector<bool>& gold) {
  std::set<double, std::greater<>> cuts(scores.begin(), scores.end());
  std::size_t pos = std::count(gold.begin(), gold.end(), true);
  double ap = 0.0, prev_r = 0.0;
  for (double t : cuts) {
    Counts c = confusion(scores, gold, t);
    double r = static_cast<double>(c.tp) / static_cast<double>(pos);
    double p = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    ap += (r - prev_r) * p;
    prev_r = r;
  }
  return ap;
}

/// Krippendorff's nominal alpha for two coders via the explicit
/// coincidence matrix o_ck and the textbook D_o / D_e definitions.
inline std::optional<double> alpha(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<std::pair<int, int>, double> o;
  std::set<int> values;
  for (std::size_t u = 0; u < a.size(); ++u) {
    // Two pairable values per unit: each ordered pair weighted 1/(m_u - 1) = 1.
    o[{a[u], b[u]}] += 1.0;
    o[{b[u], a[u]}] += 1.0;
    values.insert(a[u]);
    values.insert(b[u]);
  }
  std::map<int, double> nc;
  double n = 0.0;
  for (const auto& [ck, v] : o) {
    nc[ck.first] += v;
    n += v;
  }
  double d_o = 0.0, d_e = 0.0;
  for (int c : values)
    for (int k : values) {
      if (c == k) continue;
      auto it = o.find({c, k});
      d_o += it == o.end() ? 0.0 : it->second;
      d_e += nc[c] * nc[k];
    }
  d_o /= n;
  d_e /= n * (n - 1.0);
  if (d_e == 0.0) return std::nullopt;
  return 1.0 - d_o / d_e;
}

/// Percentile bootstrap of the mean, written out independently from the
/// generator contract: n draws of rng() % n per resample, sorted means,
/// linear interpolation at q * (B - 1).
inline std::pair<double, double> bootstrap(const std::vector<double>& v, std::size_t b, double level,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> means;
  for (std::size_t r = 0; r < b; ++r) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[rng() % v.size()];
    means.push_back(s / static_cast<double>(v.size()));
  }
  std::sort(means.begin(), means.end());
  auto pct = [&](double q) {
    double h = q * static_cast<double>(means.size() - 1);
    double lo = std::floor(h);
    std::size_t i = static_cast<std::size_t>(lo);
    std::size_t j = std::min(i + 1, means.size() - 1);
    return means[i] + (h - lo) * (means[j] - means[i]);
  };
  double tail = (1.0 - level) / 2.0;
  return {pct(tail), pct(1.0 - tail)};
}

}  // namespace oracle

#endif  // RISKMINER_TESTS_ORACLES_HPP
