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

//! One-vs-rest linear SVM over TF-IDF vectors.
//!
//! Each task class gets an independent binary problem minimizing the
//! class-weighted, L2-regularized hinge objective
//!
//!   (lambda/2) |w|^2 + (1/N) sum_i wt(y_i) max(0, 1 - y_i (w.x_i + b))
//!
//! by stochastic subgradient descent with step 1/(lambda t) and a seeded
//! shuffle per epoch. The bias is learned jointly and is not regularized.
//! Decision thresholds are calibrated on raw margins to maximize per-class
//! validation F1.

#ifndef RISKMINER_CLASSIFIER_HPP
#define RISKMINER_CLASSIFIER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/metrics.hpp"
#include "riskminer/tfidf.hpp"

namespace riskminer {

// ---------------------------------------------------------------------------
// Tasks

enum class Task : std::uint8_t { Binary = 0, TwoClass, FiveClass };

/// Bit c set <=> task class c is positive.
using LabelBits = std::uint8_t;

inline constexpr std::string_view to_string(Task t) {
  constexpr std::string_view names[] = {"binary", "two", "five"};
  return names[static_cast<int>(t)];
}

inline std::optional<Task> parse_task(std::string_view s) {
  if (s == "binary") return Task::Binary;
  if (s == "two") return Task::TwoClass;
  if (s == "five") return Task::FiveClass;
  return std::nullopt;
}

inline std::size_t num_classes(Task t) {
  switch (t) {
    case Task::Binary: return 1;
    case Task::TwoClass: return 2;
    case Task::FiveClass: return 5;
  }
  return 0;
}

inline std::vector<std::string> class_names(Task t) {
  switch (t) {
    case Task::Binary: return {"risk"};
    case Task::TwoClass: return {"physical", "transition"};
    case Task::FiveClass: {
      std::vector<std::string> out;
      for (RiskClass c : kAllRiskClasses) out.emplace_back(to_string(c));
      return out;
    }
  }
  return {};
}

inline std::optional<std::size_t> class_index(Task t, std::string_view name) {
  auto names = class_names(t);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

/// Projects a five-class gold set onto a task's label space.
inline LabelBits project(RiskSet s, Task t) {
  switch (t) {
    case Task::Binary: return s.empty() ? 0 : 1;
    case Task::TwoClass:
      return static_cast<LabelBits>((s.intersects_group(RiskGroup::Physical) ? 1 : 0) |
                                    (s.intersects_group(RiskGroup::Transition) ? 2 : 0));
    case Task::FiveClass: return s.bits();
  }
  return 0;
}

inline bool has_class(LabelBits bits, std::size_t c) { return (bits >> c) & 1u; }

// ---------------------------------------------------------------------------
// Class weights

struct ClassWeight {
  double positive = 1.0;
  double negative = 1.0;
};

/// Balanced weights: w_pos = N / (2 N_pos), w_neg = N / (2 N_neg).
/// Throws ValidationError when a class has no positives or no negatives.
inline std::vector<ClassWeight> class_weights(std::span<const LabelBits> labels, Task task) {
  const std::size_t n = labels.size();
  std::vector<ClassWeight> out;
  auto names = class_names(task);
  for (std::size_t c = 0; c < num_classes(task); ++c) {
    std::size_t pos = 0;
    for (LabelBits y : labels) pos += has_class(y, c) ? 1 : 0;
    if (pos == 0) throw ValidationError("class '" + names[c] + "' has no positive training examples");
    if (pos == n) throw ValidationError("class '" + names[c] + "' has no negative training examples");
    out.push_back(ClassWeight{static_cast<double>(n) / (2.0 * static_cast<double>(pos)),
                              static_cast<double>(n) / (2.0 * static_cast<double>(n - pos))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Model

inline const std::vector<double>& default_lambda_grid() {
  static const std::vector<double> grid = {1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
  return grid;
}

struct Hyperparams {
  double lambda = 1e-4;
  int epochs = 10;
  std::uint64_t seed = 42;
  bool balanced_weights = true;
  std::vector<double> lambda_grid = default_lambda_grid();
  int workers = 1;  // classes trained in parallel; results do not depend on it

  void validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ValidationError("lambda must be positive");
    if (epochs < 1) throw ValidationError("epochs must be >= 1");
    for (double l : lambda_grid)
      if (!(l > 0.0) || !std::isfinite(l)) throw ValidationError("lambda grid values must be positive");
  }
};

struct LinearModel {
  Task task = Task::FiveClass;
  std::vector<std::vector<double>> weights;  // [class][dimension]
  std::vector<double> bias;
  double lambda = 0.0;
  int epochs = 0;
  std::uint64_t seed = 0;
  bool balanced_weights = true;

  std::size_t dimension() const { return weights.empty() ? 0 : weights.front().size(); }
  std::size_t classes() const { return weights.size(); }

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

inline double dot(const std::vector<double>& w, const SparseVector& x) {
  double s = 0.0;
  for (const auto& [i, v] : x.entries) s += w[i] * v;
  return s;
}

/// Per-class margins w_c.x + b_c. Throws ValidationError on dimension mismatch.
inline std::vector<double> score(const LinearModel& model, const SparseVector& x) {
  if (x.dimension != model.dimension())
    throw ValidationError("vector dimension " + std::to_string(x.dimension) + " does not match model dimension " +
                          std::to_string(model.dimension()));
  std::vector<double> out(model.classes());
  for (std::size_t c = 0; c < model.classes(); ++c) out[c] = dot(model.weights[c], x) + model.bias[c];
  return out;
}

/// Value of the class-weighted regularized hinge objective for one class.
inline double hinge_objective(const std::vector<double>& w, double b, std::span<const SparseVector> xs,
                              std::span<const LabelBits> ys, std::size_t c, ClassWeight cw, double lambda) {
  double reg = 0.0;
  for (double v : w) reg += v * v;
  double loss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool pos = has_class(ys[i], c);
    double y = pos ? 1.0 : -1.0;
    double m = y * (dot(w, xs[i]) + b);
    if (m < 1.0) loss += (pos ? cw.positive : cw.negative) * (1.0 - m);
  }
  return 0.5 * lambda * reg + loss / static_cast<double>(xs.size());
}

namespace detail {

/// Fisher-Yates with raw 64-bit draws, so the permutation depends only on
/// the seed and not on the standard library's distribution code.
inline void shuffle_indices(std::vector<std::size_t>& idx, std::mt19937_64& rng) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(idx[i - 1], idx[j]);
  }
}

/// Exact minimizer over b of sum_i wt_i max(0, 1 - y_i (s_i + b)) for
/// fixed margins s_i = w.x_i. The objective is convex and piecewise linear
/// in b with kinks at y_i - s_i; the smallest kink where the slope turns
/// non-negative is returned.
inline double optimal_bias(const std::vector<double>& s, std::span<const LabelBits> ys, std::size_t c, ClassWeight cw) {
  std::vector<std::pair<double, double>> kinks;  // (b, slope increase)
  kinks.reserve(s.size());
  double slope = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (has_class(ys[i], c)) {
      kinks.emplace_back(1.0 - s[i], cw.positive);
      slope -= cw.positive;
    } else {
      kinks.emplace_back(-1.0 - s[i], cw.negative);
    }
  }
  std::sort(kinks.begin(), kinks.end());
  for (const auto& [b, inc] : kinks) {
    slope += inc;
    if (slope >= 0.0) return b;
  }
  return kinks.empty() ? 0.0 : kinks.back().first;
}

struct BinaryFit {
  std::vector<double> w;
  double b = 0.0;
  double objective = 0.0;
};

/// Trains one class. The weight vector is kept as scale * v so the
/// (1 - 1/t) shrink step is O(1), and w is projected onto the ball of
/// radius 1/sqrt(lambda) after each update. The bias is unregularized, so
/// at each epoch end it is reset to its exact minimizer for the current w.
/// The iterate with the lowest objective among the zero start and the
/// epoch ends is returned.
inline BinaryFit fit_binary(std::span<const SparseVector> xs, std::span<const LabelBits> ys, std::size_t c,
                            ClassWeight cw, const Hyperparams& hp, std::size_t dim) {
  const std::size_t n = xs.size();
  std::vector<double> v(dim, 0.0);
  double scale = 1.0;
  double b = 0.0;

  BinaryFit best;
  best.w.assign(dim, 0.0);
  best.b = optimal_bias(std::vector<double>(n, 0.0), ys, c, cw);
  best.objective = hinge_objective(best.w, best.b, xs, ys, c, cw, hp.lambda);

  std::mt19937_64 rng(hp.seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  std::uint64_t t = 0;
  std::vector<double> w(dim);
  std::vector<double> margins(n, 0.0);
  const double radius_sq = 1.0 / hp.lambda;
  double v_sq = 0.0;  // squared norm of v
  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    shuffle_indices(order, rng);
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (hp.lambda * static_cast<double>(t));
      const bool pos = has_class(ys[i], c);
      const double y = pos ? 1.0 : -1.0;
      const double margin = y * (scale * dot(v, xs[i]) + b);

      scale *= 1.0 - 1.0 / static_cast<double>(t);
      if (scale == 0.0) {
        std::fill(v.begin(), v.end(), 0.0);
        scale = 1.0;
        v_sq = 0.0;
      } else if (scale < 1e-9) {
        v_sq = 0.0;
        for (double& e : v) { e *= scale; v_sq += e * e; }
        scale = 1.0;
      }
      if (margin < 1.0) {
        const double step = eta * (pos ? cw.positive : cw.negative) * y;
        for (const auto& [j, val] : xs[i].entries) {
          const double d = step / scale * val;
          v_sq += (2.0 * v[j] + d) * d;
          v[j] += d;
        }
        b += step;
        // project onto the ball of radius 1/sqrt(lambda)
        const double norm_sq = scale * scale * v_sq;
        if (norm_sq > radius_sq) scale *= std::sqrt(radius_sq / norm_sq);
      }
    }
    for (std::size_t j = 0; j < dim; ++j) w[j] = scale * v[j];
    for (std::size_t i = 0; i < n; ++i) margins[i] = dot(w, xs[i]);
    b = optimal_bias(margins, ys, c, cw);
    double obj = hinge_objective(w, b, xs, ys, c, cw, hp.lambda);
    if (!std::isfinite(obj)) throw RuntimeError("non-finite training objective");
    if (obj < best.objective) {
      best.w = w;
      best.b = b;
      best.objective = obj;
    }
  }
  return best;
}

}  // namespace detail

/// Trains the one-vs-rest model. Bit-reproducible for fixed inputs and
/// hyperparameters regardless of `hp.workers`.
inline LinearModel train(std::span<const SparseVector> xs, std::span<const LabelBits> ys, Task task,
                         const Hyperparams& hp) {
  hp.validate();
  if (xs.size() != ys.size()) throw ValidationError("vectors and labels differ in length");
  if (xs.empty()) throw ValidationError("empty training set");
  const std::size_t dim = xs.front().dimension;
  for (const SparseVector& x : xs)
    if (x.dimension != dim) throw ValidationError("training vectors come from different vocabularies");

  std::vector<ClassWeight> weights = class_weights(ys, task);  // also checks class composition
  if (!hp.balanced_weights) std::fill(weights.begin(), weights.end(), ClassWeight{});

  const std::size_t k = num_classes(task);
  std::vector<detail::BinaryFit> fits(k);
  auto run = [&](std::size_t c) { fits[c] = detail::fit_binary(xs, ys, c, weights[c], hp, dim); };
  if (hp.workers > 1 && k > 1) {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(k);
    for (std::size_t c = 0; c < k; ++c)
      pool.emplace_back([&, c] {
        try {
          run(c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::size_t c = 0; c < k; ++c) run(c);
  }

  LinearModel model;
  model.task = task;
  model.lambda = hp.lambda;
  model.epochs = hp.epochs;
  model.seed = hp.seed;
  model.balanced_weights = hp.balanced_weights;
  for (auto& f : fits) {
    model.weights.push_back(std::move(f.w));
    model.bias.push_back(f.b);
  }
  return model;
}

// ---------------------------------------------------------------------------
// Thresholds

/// Stand-ins for the -inf / +inf candidate thresholds, kept finite so they
/// can be serialized. Every finite score is >= kPredictAll; only a score of
/// exactly DBL_MAX reaches kPredictNone.
inline constexpr double kPredictAll = std::numeric_limits<double>::lowest();
inline constexpr double kPredictNone = std::numeric_limits<double>::max();

struct ThresholdSet {
  std::vector<double> thresholds;
  friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;
};

struct ThresholdChoice {
  double threshold = 0.0;
  PRF metrics;
};

/// Candidate thresholds for one class: -inf, midpoints between consecutive
/// distinct scores, +inf (as kPredictAll / kPredictNone).
inline std::vector<double> candidate_thresholds(std::span<const ScoredItem> items) {
  std::vector<double> scores;
  for (const ScoredItem& it : items) scores.push_back(it.score);
  std::sort(scores.begin(), scores.end());
  scores.erase(std::unique(scores.begin(), scores.end()), scores.end());
  std::vector<double> out;
  out.push_back(kPredictAll);
  for (std::size_t i = 0; i + 1 < scores.size(); ++i) {
    double lo = scores[i], hi = scores[i + 1];
    double mid = lo / 2.0 + hi / 2.0;
    if (!(mid > lo)) mid = hi;  // adjacent doubles
    out.push_back(mid);
  }
  out.push_back(kPredictNone);
  return out;
}

/// F1-maximizing threshold for one class; ties go to the smallest threshold.
inline ThresholdChoice best_threshold(std::span<const ScoredItem> items) {
  std::size_t total_pos = 0;
  for (const ScoredItem& it : items) total_pos += it.positive ? 1 : 0;
  if (total_pos == 0) throw ValidationError("threshold calibration needs at least one positive");

  std::vector<ScoredItem> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end(), [](const ScoredItem& a, const ScoredItem& b) { return a.score < b.score; });
  std::vector<double> candidates = candidate_thresholds(items);

  // Sweep candidates in ascending order; `k` marks the first item that is
  // still predicted positive (score >= threshold).
  std::size_t tp = total_pos;
  std::size_t fp = sorted.size() - total_pos;
  std::size_t k = 0;
  ThresholdChoice best{candidates.front(), prf1(tp, fp, 0)};
  for (std::size_t ci = 1; ci < candidates.size(); ++ci) {
    double thr = candidates[ci];
    while (k < sorted.size() && sorted[k].score < thr) {
      if (sorted[k].positive) --tp;
      else --fp;
      ++k;
    }
    PRF m = prf1(tp, fp, total_pos - tp);
    if (m.f1 > best.metrics.f1) best = ThresholdChoice{thr, m};
  }
  return best;
}

/// Per-class F1-optimal thresholds on validation margins.
inline ThresholdSet calibrate_thresholds(const std::vector<std::vector<double>>& val_scores,
                                         std::span<const LabelBits> val_labels, Task task) {
  if (val_scores.size() != val_labels.size()) throw ValidationError("scores and labels differ in length");
  const std::size_t k = num_classes(task);
  auto names = class_names(task);
  ThresholdSet set;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<ScoredItem> items;
    items.reserve(val_scores.size());
    for (std::size_t i = 0; i < val_scores.size(); ++i) {
      if (val_scores[i].size() != k) throw ValidationError("score row has wrong number of classes");
      items.push_back(ScoredItem{val_scores[i][c], has_class(val_labels[i], c)});
    }
    try {
      set.thresholds.push_back(best_threshold(items).threshold);
    } catch (const ValidationError&) {
      throw ValidationError("class '" + names[c] + "' has no validation positives");
    }
  }
  return set;
}

inline ThresholdSet calibrate_thresholds(const LinearModel& model, std::span<const SparseVector> val_vectors,
                                         std::span<const LabelBits> val_labels) {
  std::vector<std::vector<double>> scores;
  scores.reserve(val_vectors.size());
  for (const SparseVector& x : val_vectors) scores.push_back(score(model, x));
  return calibrate_thresholds(scores, val_labels, model.task);
}

/// Class c is predicted iff score_c >= threshold_c.
inline LabelBits predict_from_scores(std::span<const double> scores, const ThresholdSet& thresholds) {
  LabelBits out = 0;
  for (std::size_t c = 0; c < scores.size(); ++c)
    if (scores[c] >= thresholds.thresholds[c]) out = static_cast<LabelBits>(out | (1u << c));
  return out;
}

inline LabelBits predict(const LinearModel& model, const ThresholdSet& thresholds, const SparseVector& x) {
  if (thresholds.thresholds.size() != model.classes()) throw ValidationError("threshold count does not match model");
  std::vector<double> s = score(model, x);
  return predict_from_scores(s, thresholds);
}

// ---------------------------------------------------------------------------
// Model selection

struct SelectionCandidate {
  std::string id;
  double lambda = 0.0;
  double macro_f1 = 0.0;
};

/// Index of the highest macro-F1 candidate; ties go to the smaller lambda,
/// then the lexicographically smaller id.
inline std::size_t select_model(std::span<const SelectionCandidate> candidates) {
  if (candidates.empty()) throw ValidationError("no candidate models to select from");
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const auto& a = candidates[i];
    const auto& b = candidates[best];
    if (a.macro_f1 > b.macro_f1 || (a.macro_f1 == b.macro_f1 && (a.lambda < b.lambda || (a.lambda == b.lambda && a.id < b.id))))
      best = i;
  }
  return best;
}

}  // namespace riskminer

#endif  // RISKMINER_CLASSIFIER_HPP
