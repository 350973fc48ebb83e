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

// Shared helpers for the unit tests.

#ifndef RISKMINER_TESTS_SUPPORT_HPP
#define RISKMINER_TESTS_SUPPORT_HPP

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "riskminer/bundle.hpp"
#include "riskminer/corpus.hpp"

namespace rmtest {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("riskminer-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline riskminer::Report make_report(const std::string& id, const std::string& company, int year,
                                     std::vector<std::string> pages, const std::string& country = "DE",
                                     const std::string& industry = "energy") {
  riskminer::Report r;
  r.meta.report_id = id;
  r.meta.company_id = company;
  r.meta.company_name = company + " AG";
  r.meta.country = country;
  r.meta.industry = industry;
  r.meta.year = year;
  int n = 1;
  for (auto& text : pages) r.pages.push_back(riskminer::Page{n++, std::move(text)});
  return r;
}

/// Small trained five-class bundle over template sentences.
inline riskminer::ModelBundle toy_bundle(std::uint64_t seed) {
  using namespace riskminer;
  static const std::vector<std::string> cue{"flood storm", "drought heat", "regulation carbon tax",
                                            "market technology shift", "reputation investor criticism"};
  std::mt19937_64 rng(seed);
  std::vector<std::string> docs;
  std::vector<LabelBits> ys;
  for (int i = 0; i < 60; ++i) {
    std::size_t c = static_cast<std::size_t>(i) % 5;
    std::size_t extra = rng() % 5;
    docs.push_back("the group reports " + cue[c] + " and " + cue[extra] + " figures");
    ys.push_back(static_cast<LabelBits>((1u << c) | (rng() % 4 == 0 ? 1u << extra : 0u)));
  }
  FeatureConfig fc;
  fc.min_df = 1;
  ModelBundle b;
  b.task = Task::FiveClass;
  b.vocabulary = build_vocabulary(docs, fc);
  std::vector<SparseVector> xs;
  for (const auto& d : docs) xs.push_back(b.vocabulary.vectorize(d));
  Hyperparams hp;
  hp.lambda = 1e-2;
  hp.epochs = 5;
  hp.seed = seed;
  b.model = train(xs, ys, Task::FiveClass, hp);
  b.thresholds = calibrate_thresholds(b.model, xs, ys);
  b.keyword_hash = "0123456789abcdef";
  b.n_train = docs.size();
  return b;
}

}  // namespace rmtest

#endif  // RISKMINER_TESTS_SUPPORT_HPP
