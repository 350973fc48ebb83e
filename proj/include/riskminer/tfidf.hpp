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

//! TF-IDF featurization.
//!
//!   idf(t)    = ln((1 + N) / (1 + df(t))) + 1
//!   weight(t) = (1 + ln tf(t)) * idf(t), then L2-normalized
//!
//! Terms are stems of non-stop-word tokens, ordered lexicographically.

#ifndef RISKMINER_TFIDF_HPP
#define RISKMINER_TFIDF_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "riskminer/error.hpp"
#include "riskminer/text.hpp"

namespace riskminer {

struct FeatureConfig {
  std::string stopword_list{kStopwordListId};
  int min_df = 2;
  std::string stemmer_version{kStemmerVersion};

  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

/// Sparse vector with strictly increasing indices below `dimension`.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;
  std::size_t dimension = 0;

  bool empty() const noexcept { return entries.empty(); }

  double norm() const {
    double s = 0.0;
    for (const auto& [i, v] : entries) s += v * v;
    return std::sqrt(s);
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

inline double smoothed_idf(std::size_t n_documents, std::size_t df) {
  return std::log((1.0 + static_cast<double>(n_documents)) / (1.0 + static_cast<double>(df))) + 1.0;
}

class Vocabulary {
 public:
  Vocabulary() = default;

  /// Restores a fitted vocabulary (bundle loading). Throws ValidationError
  /// when terms are unsorted, duplicated, or the idf values disagree with
  /// the document frequencies.
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> df, std::vector<double> idf,
             std::size_t n_documents, FeatureConfig config)
      : terms_(std::move(terms)), df_(std::move(df)), idf_(std::move(idf)), n_documents_(n_documents),
        config_(std::move(config)) {
    if (df_.size() != terms_.size() || idf_.size() != terms_.size())
      throw ValidationError("vocabulary arrays have mismatched lengths");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i > 0 && !(terms_[i - 1] < terms_[i])) throw ValidationError("vocabulary terms not strictly sorted");
      if (df_[i] < static_cast<std::size_t>(std::max(config_.min_df, 1)) || df_[i] > n_documents_)
        throw ValidationError("vocabulary df out of range for term '" + terms_[i] + "'");
      if (std::abs(idf_[i] - smoothed_idf(n_documents_, df_[i])) > 1e-12)
        throw ValidationError("vocabulary idf inconsistent for term '" + terms_[i] + "'");
    }
    rebuild_index();
  }

  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  const std::vector<std::size_t>& document_frequency() const noexcept { return df_; }
  const std::vector<double>& idf() const noexcept { return idf_; }
  std::size_t n_documents() const noexcept { return n_documents_; }
  const FeatureConfig& config() const noexcept { return config_; }
  const StopwordSet& stopwords() const { return stopwords_by_id(config_.stopword_list); }

  std::optional<std::uint32_t> index_of(std::string_view term) const {
    auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  SparseVector vectorize(std::string_view text) const {
    std::map<std::uint32_t, std::size_t> tf;
    for (const std::string& term : analyze(text, stopwords())) {
      auto it = index_.find(term);
      if (it != index_.end()) ++tf[it->second];
    }
    SparseVector v;
    v.dimension = terms_.size();
    v.entries.reserve(tf.size());
    double sumsq = 0.0;
    for (const auto& [idx, count] : tf) {
      double w = (1.0 + std::log(static_cast<double>(count))) * idf_[idx];
      v.entries.emplace_back(idx, w);
      sumsq += w * w;
    }
    if (sumsq > 0.0) {
      double norm = std::sqrt(sumsq);
      for (auto& e : v.entries) e.second /= norm;
    }
    return v;
  }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.terms_ == b.terms_ && a.df_ == b.df_ && a.idf_ == b.idf_ && a.n_documents_ == b.n_documents_ &&
           a.config_ == b.config_;
  }

  friend Vocabulary build_vocabulary(std::span<const std::string> documents, const FeatureConfig& config);

 private:
  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], static_cast<std::uint32_t>(i));
  }

  std::vector<std::string> terms_;
  std::vector<std::size_t> df_;
  std::vector<double> idf_;
  std::size_t n_documents_ = 0;
  FeatureConfig config_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Fits a vocabulary on the training documents only. Throws
/// ValidationError for an empty document list or when no term survives
/// the min_df cut.
inline Vocabulary build_vocabulary(std::span<const std::string> documents, const FeatureConfig& config = {}) {
  if (documents.empty()) throw ValidationError("cannot build a vocabulary from zero documents");
  if (config.min_df < 1) throw ValidationError("min_df must be >= 1");
  const StopwordSet& stop = stopwords_by_id(config.stopword_list);
  std::map<std::string, std::size_t> df;
  for (const std::string& doc : documents) {
    std::vector<std::string> terms = analyze(doc, stop);
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    for (std::string& t : terms) ++df[std::move(t)];
  }
  Vocabulary v;
  v.n_documents_ = documents.size();
  v.config_ = config;
  for (auto& [term, count] : df) {
    if (count < static_cast<std::size_t>(config.min_df)) continue;
    v.terms_.push_back(term);
    v.df_.push_back(count);
    v.idf_.push_back(smoothed_idf(documents.size(), count));
  }
  if (v.terms_.empty()) throw ValidationError("empty vocabulary after min_df=" + std::to_string(config.min_df));
  v.rebuild_index();
  return v;
}

}  // namespace riskminer

#endif  // RISKMINER_TFIDF_HPP
