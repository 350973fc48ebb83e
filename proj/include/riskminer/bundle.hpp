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

//! Model bundle persistence ("crdm-1").
//!
//! A bundle is one JSON document with sorted keys, no insignificant
//! whitespace and every real rendered with 17 significant digits, so
//! save(load(save(b))) reproduces the same bytes.

#ifndef RISKMINER_BUNDLE_HPP
#define RISKMINER_BUNDLE_HPP

#include <cmath>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "riskminer/classifier.hpp"
#include "riskminer/error.hpp"
#include "riskminer/io.hpp"
#include "riskminer/segmenter.hpp"
#include "riskminer/tfidf.hpp"

namespace riskminer {

inline constexpr std::string_view kBundleVersion = "crdm-1";

struct ModelBundle {
  std::string version{kBundleVersion};
  Task task = Task::FiveClass;
  Vocabulary vocabulary;
  LinearModel model;
  ThresholdSet thresholds;
  SegmenterConfig segmenter;
  std::string keyword_hash;
  std::string created_at = "unspecified";
  std::size_t n_train = 0;

  /// Throws ValidationError when components disagree on task or dimension.
  void validate() const {
    if (version != kBundleVersion) throw ValidationError("unsupported bundle version '" + version + "'");
    if (model.task != task) throw ValidationError("bundle task does not match model task");
    const std::size_t k = num_classes(task);
    if (model.weights.size() != k || model.bias.size() != k)
      throw ValidationError("bundle has " + std::to_string(model.weights.size()) + " weight vectors, task needs " +
                            std::to_string(k));
    for (const auto& w : model.weights)
      if (w.size() != vocabulary.size())
        throw ValidationError("weight dimension " + std::to_string(w.size()) + " does not match vocabulary size " +
                              std::to_string(vocabulary.size()));
    if (thresholds.thresholds.size() != k) throw ValidationError("bundle threshold count does not match task");
    for (double t : thresholds.thresholds)
      if (!std::isfinite(t)) throw ValidationError("non-finite threshold in bundle");
    segmenter.validate();
  }
};

namespace detail {

inline void write_canonical(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: keys already sorted
        if (!first) out.push_back(',');
        first = false;
        out += nlohmann::json(it.key()).dump();
        out.push_back(':');
        write_canonical(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    case nlohmann::json::value_t::array: {
      out.push_back('[');
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out.push_back(',');
        write_canonical(j[i], out);
      }
      out.push_back(']');
      break;
    }
    case nlohmann::json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) throw RuntimeError("cannot serialize non-finite real");
      out += io::format_real17(v == 0.0 ? 0.0 : v);  // no "-0"
      break;
    }
    default:
      out += j.dump();
  }
}

template <typename T>
T require(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("bundle is missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("bundle field '") + key + "' has the wrong type");
  }
}

inline const nlohmann::json& require_node(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("bundle is missing field '") + key + "'");
  return *it;
}

}  // namespace detail

inline std::string serialize_canonical(const nlohmann::json& j) {
  std::string out;
  detail::write_canonical(j, out);
  out.push_back('\n');
  return out;
}

inline std::string serialize_bundle(const ModelBundle& b) {
  b.validate();
  nlohmann::json j;
  j["version"] = b.version;
  j["task"] = std::string(to_string(b.task));
  j["created_at"] = b.created_at;
  j["keyword_hash"] = b.keyword_hash;
  j["segmenter_version"] = b.segmenter.version;
  j["segmenter"] = {{"min_tokens", b.segmenter.min_tokens},
                    {"rule", b.segmenter.blank_line_pattern},
                    {"version", b.segmenter.version}};
  j["training"] = {{"balanced_weights", b.model.balanced_weights},
                   {"epochs", b.model.epochs},
                   {"lambda", b.model.lambda},
                   {"n_train", b.n_train},
                   {"seed", b.model.seed}};

  const Vocabulary& v = b.vocabulary;
  nlohmann::json vocab;
  vocab["terms"] = v.terms();
  vocab["df"] = v.document_frequency();
  vocab["idf"] = v.idf();
  vocab["n_documents"] = v.n_documents();
  vocab["config"] = {{"min_df", v.config().min_df},
                     {"stemmer", v.config().stemmer_version},
                     {"stopwords", v.config().stopword_list}};
  j["vocabulary"] = std::move(vocab);

  auto names = class_names(b.task);
  nlohmann::json weights = nlohmann::json::array();
  for (std::size_t c = 0; c < b.model.classes(); ++c) {
    nlohmann::json indices = nlohmann::json::array();
    nlohmann::json values = nlohmann::json::array();
    const auto& w = b.model.weights[c];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0.0) continue;
      indices.push_back(i);
      values.push_back(w[i]);
    }
    weights.push_back({{"class", names[c]}, {"bias", b.model.bias[c]}, {"indices", indices}, {"values", values}});
  }
  j["weights"] = std::move(weights);
  j["thresholds"] = b.thresholds.thresholds;
  return serialize_canonical(j);
}

/// Parses bundle text. Any structural problem raises ValidationError and no
/// partially built bundle escapes.
inline ModelBundle parse_bundle(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("corrupted bundle: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("corrupted bundle: top level is not an object");
  using detail::require;
  ModelBundle b;
  b.version = require<std::string>(j, "version");
  if (b.version != kBundleVersion)
    throw ValidationError("unsupported bundle version '" + b.version + "' (expected " + std::string(kBundleVersion) + ")");
  auto task = parse_task(require<std::string>(j, "task"));
  if (!task) throw ValidationError("bundle has an unknown task");
  b.task = *task;
  b.created_at = require<std::string>(j, "created_at");
  b.keyword_hash = require<std::string>(j, "keyword_hash");
  const auto& seg = detail::require_node(j, "segmenter");
  b.segmenter.min_tokens = require<int>(seg, "min_tokens");
  b.segmenter.blank_line_pattern = require<std::string>(seg, "rule");
  b.segmenter.version = require<std::string>(seg, "version");
  if (require<std::string>(j, "segmenter_version") != b.segmenter.version)
    throw ValidationError("bundle segmenter_version disagrees with segmenter block");

  const auto& tr = detail::require_node(j, "training");
  b.model.task = b.task;
  b.model.balanced_weights = require<bool>(tr, "balanced_weights");
  b.model.epochs = require<int>(tr, "epochs");
  b.model.lambda = require<double>(tr, "lambda");
  b.model.seed = require<std::uint64_t>(tr, "seed");
  b.n_train = require<std::size_t>(tr, "n_train");

  const auto& vj = detail::require_node(j, "vocabulary");
  const auto& cj = detail::require_node(vj, "config");
  FeatureConfig fc;
  fc.min_df = require<int>(cj, "min_df");
  fc.stemmer_version = require<std::string>(cj, "stemmer");
  fc.stopword_list = require<std::string>(cj, "stopwords");
  if (fc.stemmer_version != kStemmerVersion)
    throw ValidationError("bundle was built with stemmer '" + fc.stemmer_version + "'");
  try {
    stopwords_by_id(fc.stopword_list);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  b.vocabulary = Vocabulary(require<std::vector<std::string>>(vj, "terms"), require<std::vector<std::size_t>>(vj, "df"),
                            require<std::vector<double>>(vj, "idf"), require<std::size_t>(vj, "n_documents"), fc);

  const auto& wj = detail::require_node(j, "weights");
  if (!wj.is_array()) throw ValidationError("bundle field 'weights' must be an array");
  auto names = class_names(b.task);
  if (wj.size() != names.size()) throw ValidationError("bundle weight count does not match task");
  const std::size_t dim = b.vocabulary.size();
  for (std::size_t c = 0; c < wj.size(); ++c) {
    if (require<std::string>(wj[c], "class") != names[c]) throw ValidationError("bundle weight classes out of order");
    auto indices = require<std::vector<std::size_t>>(wj[c], "indices");
    auto values = require<std::vector<double>>(wj[c], "values");
    if (indices.size() != values.size()) throw ValidationError("bundle weight indices/values differ in length");
    std::vector<double> w(dim, 0.0);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (indices[i] >= dim) throw ValidationError("bundle weight index out of range");
      if (i > 0 && indices[i] <= indices[i - 1]) throw ValidationError("bundle weight indices not increasing");
      w[indices[i]] = values[i];
    }
    b.model.weights.push_back(std::move(w));
    b.model.bias.push_back(require<double>(wj[c], "bias"));
  }
  b.thresholds.thresholds = require<std::vector<double>>(j, "thresholds");
  b.validate();
  return b;
}

inline void save_bundle(const ModelBundle& b, const std::filesystem::path& path) {
  io::write_file_atomic(path, serialize_bundle(b));
}

inline ModelBundle load_bundle(const std::filesystem::path& path) {
  return parse_bundle(io::read_file(path));
}

}  // namespace riskminer

#endif  // RISKMINER_BUNDLE_HPP
