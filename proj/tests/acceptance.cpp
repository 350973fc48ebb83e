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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "riskminer.hpp"
#include "riskminer/cli.hpp"
#include "support.hpp"

using namespace riskminer;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome fail(std::string why) { return Outcome{false, std::move(why)}; }

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

int hw_workers() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

// 1 -------------------------------------------------------------------------

Outcome tfidf_oracle() {
  static const std::vector<std::string> pool{"flood", "floods", "storm", "carbon", "tax", "risk", "risks", "the",
                                             "and", "heat", "drought", "market", "price", "prices", "regulation",
                                             "climate", "water", "coastal", "a", "of", "2020", "co2"};
  std::mt19937_64 rng(101);
  std::size_t checked = 0;
  for (int corpus = 0; corpus < 50; ++corpus) {
    std::vector<std::string> docs;
    std::size_t n_docs = 1 + rng() % 10;
    for (std::size_t d = 0; d < n_docs; ++d) {
      std::string text;
      std::size_t n_tok = 1 + rng() % 30;
      for (std::size_t t = 0; t < n_tok; ++t) text += pool[rng() % pool.size()] + (rng() % 5 ? " " : ", ");
      docs.push_back(text);
    }
    FeatureConfig fc;
    fc.min_df = corpus % 3 == 0 ? 2 : 1;
    if (corpus % 2) fc.stopword_list = "none";
    Vocabulary v;
    try {
      v = build_vocabulary(docs, fc);
    } catch (const ValidationError&) {
      // min_df removed every term; the oracle must agree.
      if (!oracle::dense_tfidf(docs, {}, fc.min_df, stopwords_by_id(fc.stopword_list)).terms.empty())
        return fail("library rejected a corpus the oracle accepts (corpus " + std::to_string(corpus) + ")");
      continue;
    }
    auto dense = oracle::dense_tfidf(docs, docs, fc.min_df, stopwords_by_id(fc.stopword_list));
    if (dense.terms != v.terms()) return fail("vocabulary differs on corpus " + std::to_string(corpus));
    for (std::size_t d = 0; d < docs.size(); ++d) {
      SparseVector x = v.vectorize(docs[d]);
      std::vector<double> row(v.size(), 0.0);
      for (const auto& [i, w] : x.entries) row[i] = w;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (std::abs(row[j] - dense.rows[d][j]) > 1e-12)
          return fail("entry mismatch corpus " + std::to_string(corpus) + " doc " + std::to_string(d));
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " entries within 1e-12"};
}

// 2 -------------------------------------------------------------------------

Outcome calibration_optimality() {
  std::mt19937_64 rng(202);
  for (int set = 0; set < 100; ++set) {
    std::size_t n = 1 + rng() % 200;
    int levels = 2 + static_cast<int>(rng() % 50);
    std::vector<double> s;
    std::vector<bool> g;
    std::vector<ScoredItem> items;
    for (std::size_t i = 0; i < n; ++i) {
      bool pos = rng() % 4 == 0;
      double base = static_cast<double>(rng() % static_cast<std::uint64_t>(levels)) / levels;
      s.push_back(base + (pos ? 0.2 : 0.0) - 0.5);
      g.push_back(pos);
    }
    g[rng() % n] = true;
    for (std::size_t i = 0; i < n; ++i) items.push_back({s[i], g[i]});
    double thr = best_threshold(items).threshold;
    double achieved = oracle::f1_counts(oracle::confusion(s, g, thr));
    double best = oracle::best_f1_sweep(s, g);
    if (achieved != best) return fail("set " + std::to_string(set) + ": " + fmt(achieved, 17) + " < " + fmt(best, 17));
  }
  return {true, "100 sets optimal"};
}

// 3 -------------------------------------------------------------------------

Outcome metric_oracle() {
  std::mt19937_64 rng(303);
  for (int inst = 0; inst < 100; ++inst) {
    std::size_t n = 1 + rng() % 50;
    std::vector<EvalItem> items;
    PredictionMap preds;
    std::vector<std::vector<double>> scores(n, std::vector<double>(5));
    std::vector<RiskSet> gold(n);
    std::vector<LabelBits> predicted(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::string id = "r:1:" + std::to_string(i);
      gold[i] = RiskSet::from_bits(static_cast<std::uint8_t>(rng() % 32));
      predicted[i] = static_cast<LabelBits>(rng() % 32);
      for (auto& v : scores[i]) v = static_cast<double>(rng() % 10) / 10.0;
      items.push_back({id, gold[i]});
      preds[id] = {predicted[i], scores[i]};
    }
    EvalReport rep = evaluate(preds, items, Task::FiveClass, Setting::Realistic);
    std::vector<double> f1s;
    for (std::size_t c = 0; c < 5; ++c) {
      std::size_t tp = 0, fp = 0, fn = 0;
      std::vector<double> sc;
      std::vector<bool> g;
      for (std::size_t i = 0; i < n; ++i) {
        bool gi = gold[i].contains(kAllRiskClasses[c]);
        bool pi = (predicted[i] >> c) & 1u;
        tp += gi && pi;
        fp += !gi && pi;
        fn += gi && !pi;
        sc.push_back(scores[i][c]);
        g.push_back(gi);
      }
      const ClassReport& cr = rep.classes[c];
      if (cr.tp != tp || cr.fp != fp || cr.fn != fn) return fail("counts differ, instance " + std::to_string(inst));
      double p = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
      double r = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
      double f = p + r > 0 ? 2 * p * r / (p + r) : 0.0;
      if (cr.prf.precision != p || cr.prf.recall != r || cr.prf.f1 != f)
        return fail("prf1 differs, instance " + std::to_string(inst));
      f1s.push_back(f);
      if (tp + fn > 0) {
        if (!cr.ap || std::abs(*cr.ap - oracle::average_precision(sc, g)) > 1e-12)
          return fail("AP differs, instance " + std::to_string(inst));
      }
    }
    double mean = (f1s[0] + f1s[1] + f1s[2] + f1s[3] + f1s[4]) / 5.0;
    if (rep.macro.f1 != mean) return fail("macro F1 differs, instance " + std::to_string(inst));
  }
  std::vector<double> published{0.537, 0.400, 0.331, 0.435, 0.140};
  double macro = macro_average(published);
  if (std::abs(macro - 0.369) > 0.0005) return fail("published macro-F1 gives " + fmt(macro));
  return {true, "100 instances exact; published macro " + fmt(macro)};
}

// 4 -------------------------------------------------------------------------

struct TextSet {
  std::vector<std::string> text;
  std::vector<LabelBits> y;
};

double macro_f1(const std::vector<std::vector<double>>& scores, const std::vector<LabelBits>& y, const ThresholdSet& t) {
  std::vector<double> f;
  for (std::size_t c = 0; c < 5; ++c) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      bool g = has_class(y[i], c), p = scores[i][c] >= t.thresholds[c];
      tp += g && p;
      fp += !g && p;
      fn += g && !p;
    }
    f.push_back(prf1(tp, fp, fn).f1);
  }
  return macro_average(f);
}

// Grid search by validation mean AP, calibration on validation, F1 on test.
double fit_and_score(const TextSet& train_set, const TextSet& val, const TextSet& test) {
  Vocabulary vocab = build_vocabulary(train_set.text, FeatureConfig{});
  auto vec = [&](const TextSet& s) {
    std::vector<SparseVector> xs;
    for (const auto& t : s.text) xs.push_back(vocab.vectorize(t));
    return xs;
  };
  auto xtr = vec(train_set), xva = vec(val), xte = vec(test);
  Hyperparams hp;
  hp.workers = hw_workers();
  std::optional<LinearModel> best;
  double best_map = -1;
  for (double lambda : hp.lambda_grid) {
    hp.lambda = lambda;
    LinearModel m = train(xtr, train_set.y, Task::FiveClass, hp);
    double map = *mean_average_precision(score_all(m, xva), val.y, 5);
    if (map > best_map) {
      best_map = map;
      best = std::move(m);
    }
  }
  ThresholdSet t = calibrate_thresholds(score_all(*best, xva), val.y, Task::FiveClass);
  return macro_f1(score_all(*best, xte), test.y, t);
}

Outcome classifier_sanity() {
  std::mt19937_64 rng(404);
  TextSet pos[3], neg[3];  // train / val / test
  for (int i = 0; i < 500; ++i) {
    auto c = static_cast<std::size_t>(i % 5);
    int part = (i / 5) % 5 < 3 ? 0 : ((i / 5) % 5 == 3 ? 1 : 2);
    pos[part].text.push_back(synth::planted_sentence(rng, kAllRiskClasses[c]));
    pos[part].y.push_back(static_cast<LabelBits>(1u << c));
  }
  for (int i = 0; i < 500 * 20; ++i) {
    int part = i % 5 < 3 ? 0 : (i % 5 == 3 ? 1 : 2);
    neg[part].text.push_back(i % 4 == 0 ? synth::hard_negative_sentence(rng)
                                        : synth::filler_sentence(rng, 8 + static_cast<int>(rng() % 8)));
    neg[part].y.push_back(0);
  }
  auto join = [](const TextSet& a, const TextSet& b) {
    TextSet s = a;
    s.text.insert(s.text.end(), b.text.begin(), b.text.end());
    s.y.insert(s.y.end(), b.y.begin(), b.y.end());
    return s;
  };
  double disc = fit_and_score(pos[0], pos[1], pos[2]);
  double real = fit_and_score(join(pos[0], neg[0]), join(pos[1], neg[1]), join(pos[2], neg[2]));
  std::string detail = "discriminatory " + fmt(disc) + ", realistic " + fmt(real);
  if (disc < 0.95 || real < 0.85) return fail(detail);
  return {true, detail};
}

// 5 -------------------------------------------------------------------------

Outcome class_weight_effect() {
  std::mt19937_64 rng(505);
  std::vector<SparseVector> xs;
  std::vector<LabelBits> ys;
  auto noise = [&] { return (static_cast<double>(rng() % 1000) / 1000.0 - 0.5) * 0.8; };
  for (int i = 0; i < 2550; ++i) {
    bool p = i % 51 == 0;  // 50 negatives per positive
    SparseVector x;
    x.dimension = 3;
    x.entries = {{0, (p ? 0.6 : 0.4) + noise()}, {1, (p ? 0.4 : 0.6) + noise()}, {2, 1.0}};
    xs.push_back(x);
    ys.push_back(p ? 1 : 0);
  }
  auto recall = [&](bool balanced) {
    Hyperparams hp;
    hp.lambda = 1e-2;
    hp.seed = 5;
    hp.balanced_weights = balanced;
    LinearModel m = train(xs, ys, Task::Binary, hp);
    std::size_t tp = 0, pos = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!ys[i]) continue;
      ++pos;
      tp += score(m, xs[i])[0] >= 0.0;
    }
    return static_cast<double>(tp) / static_cast<double>(pos);
  };
  double weighted = recall(true), plain = recall(false);
  std::string detail = "recall balanced " + fmt(weighted) + " vs unweighted " + fmt(plain);
  if (!(weighted > plain)) return fail(detail);
  return {true, detail};
}

// 6 -------------------------------------------------------------------------

Outcome alpha_checks() {
  std::mt19937_64 rng(606);
  for (int m = 0; m < 100; ++m) {
    std::vector<std::pair<int, int>> u;
    for (int i = 0; i < 2 + static_cast<int>(rng() % 50); ++i) {
      int v = static_cast<int>(rng() % 3);
      u.emplace_back(v, v);
    }
    u.emplace_back(0, 0);
    u.emplace_back(1, 1);
    auto r = nominal_alpha(u);
    if (!r.alpha || *r.alpha != 1.0) return fail("perfect agreement matrix " + std::to_string(m) + " not 1");
  }
  std::vector<std::pair<int, int>> coins;
  for (int i = 0; i < 1000; ++i) coins.emplace_back(static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
  double random_alpha = *nominal_alpha(coins).alpha;
  if (std::abs(random_alpha) >= 0.1) return fail("random coders alpha " + fmt(random_alpha));
  std::vector<std::pair<int, int>> worked{{1, 1}, {1, 0}, {0, 0}, {0, 0}};
  double w = *nominal_alpha(worked).alpha;
  if (w != 1.0 - 7.0 * 2.0 / 30.0 || std::abs(w - 8.0 / 15.0) > 1e-15) return fail("worked example gives " + fmt(w, 17));
  return {true, "random coders " + fmt(random_alpha) + ", worked example " + fmt(w)};
}

// 7 -------------------------------------------------------------------------

Outcome keyword_filter() {
  const KeywordSet& kw = default_keywords();
  const std::string filler = "The board met twice during the reporting period to review operations.";
  std::size_t phrases = 0;
  for (int s = 0; s < 3; ++s) {
    for (const Keyword& k : kw.section(static_cast<KeywordSection>(s))) {
      for (int hit_page = 1; hit_page <= 5; hit_page += 2) {
        std::vector<std::string> pages(5, filler);
        pages[static_cast<std::size_t>(hit_page - 1)] = "Management noted that " + k.phrase + " may matter.";
        Report r = rmtest::make_report("r", "c", 2019, pages);
        if (match_page(pages[static_cast<std::size_t>(hit_page - 1)], kw) == std::vector<std::string>{})
          return fail("phrase '" + k.phrase + "' not matched");
        for (int radius = 0; radius <= 2; ++radius) {
          std::set<int> expected;
          for (int p = std::max(1, hit_page - radius); p <= std::min(5, hit_page + radius); ++p) expected.insert(p);
          if (relevant_pages(r, kw, radius).relevant_pages != expected)
            return fail("pages around '" + k.phrase + "' wrong at radius " + std::to_string(radius));
        }
      }
      ++phrases;
    }
  }
  // Monotonicity under random extensions.
  SynthConfig sc;
  sc.n_companies = 4;
  sc.seed = 77;
  Corpus corpus = generate_synth(sc).corpus;
  static const std::vector<std::string> extra{"board", "revenue", "board meeting", "operating", "dividend",
                                              "segment", "customer", "market share", "year", "report"};
  std::mt19937_64 rng(707);
  for (int ext = 0; ext < 20; ++ext) {
    KeywordSet bigger = kw;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i)
      bigger.add(static_cast<KeywordSection>(rng() % 3), extra[rng() % extra.size()]);
    for (const Report& r : corpus.reports()) {
      for (int radius = 0; radius <= 1; ++radius) {
        auto base = relevant_pages(r, kw, radius).relevant_pages;
        auto ext_pages = relevant_pages(r, bigger, radius).relevant_pages;
        if (!std::includes(ext_pages.begin(), ext_pages.end(), base.begin(), base.end()))
          return fail("extension " + std::to_string(ext) + " lost pages in " + r.id());
      }
    }
  }
  return {true, std::to_string(phrases) + " phrases matched; 20 extensions monotone"};
}

// 8 -------------------------------------------------------------------------

Outcome planted_trend() {
  SynthConfig sc;
  sc.n_companies = 200;
  sc.year_from = 2010;
  sc.year_to = 2019;
  sc.base_rate = {0.1, 0.1, 0.1, 0.1, 0.1};  // 0.5 mentions per report in total
  sc.trend_multiplier = 4.0;                 // 2.0 from 2015 on
  sc.breakpoint_year = 2015;
  sc.seed = 808;
  SynthOutput data = generate_synth(sc);
  TrainOptions opt;
  opt.workers = hw_workers();
  TrainResult tr = train_pipeline(data.corpus, data.labels, default_keywords(), opt);
  auto mentions = infer_corpus(data.corpus, default_keywords(), tr.bundle, 1, hw_workers());
  AggregateOptions ao;
  ao.classes = ClassGrouping::All;
  ao.seed = 8;
  auto rows = aggregate(mentions, data.corpus, ao);
  double pre = 0, post = 0;
  int n_pre = 0, n_post = 0;
  const AggregateRow *y2013 = nullptr, *y2019 = nullptr;
  for (const auto& row : rows) {
    int year = std::stoi(row.group_key);
    (year >= 2015 ? post : pre) += row.mean;
    (year >= 2015 ? n_post : n_pre) += 1;
    if (year == 2013) y2013 = &row;
    if (year == 2019) y2019 = &row;
  }
  if (!y2013 || !y2019 || n_pre == 0 || n_post == 0) return fail("missing years in aggregate");
  double ratio = (post / n_post) / (pre / n_pre);
  std::string detail = "ratio " + fmt(ratio) + ", 2013 CI [" + fmt(y2013->ci_low) + "," + fmt(y2013->ci_high) +
                       "], 2019 CI [" + fmt(y2019->ci_low) + "," + fmt(y2019->ci_high) + "], val macro-F1 " +
                       fmt(tr.val_report.macro.f1);
  if (ratio < 2.0) return fail(detail);
  if (!(y2013->ci_high < y2019->ci_low)) return fail(detail);
  return {true, detail};
}

// 9 -------------------------------------------------------------------------

Outcome aggregation_exactness() {
  std::mt19937_64 rng(909);
  static const std::vector<std::string> countries{"DE", "FR", "US"}, industries{"energy", "finance"};
  for (int set = 0; set < 50; ++set) {
    Corpus c;
    std::size_t n_reports = 1 + rng() % 40;
    for (std::size_t r = 0; r < n_reports; ++r)
      c.add(rmtest::make_report("r" + std::to_string(r), "c" + std::to_string(r % 7), 2012 + static_cast<int>(rng() % 6),
                                {"x"}, countries[rng() % 3], industries[rng() % 2]));
    std::vector<MentionRecord> recs;
    std::array<std::size_t, 5> per_class{};
    std::size_t n = rng() % 300;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t cls = rng() % 5;
      recs.push_back({"r" + std::to_string(rng() % n_reports), "r:1:" + std::to_string(i), kAllRiskClasses[cls]});
      ++per_class[cls];
    }
    for (GroupBy g : {GroupBy::Year, GroupBy::CountryYear, GroupBy::Industry}) {
      AggregateOptions ao;
      ao.group_by = g;
      ao.industry_year_from = 2000;
      ao.industry_year_to = 2030;
      ao.bootstrap_resamples = 20;
      std::array<std::size_t, 5> totals{};
      std::array<std::size_t, 5> reports{};
      for (const auto& row : aggregate(recs, c, ao)) {
        auto idx = *class_index(Task::FiveClass, row.class_name);
        totals[idx] += row.total_mentions;
        reports[idx] += row.n_reports;
        if (row.mean != static_cast<double>(row.total_mentions) / static_cast<double>(row.n_reports))
          return fail("mean is not total / n");
        if (std::llround(row.mean * static_cast<double>(row.n_reports)) != static_cast<long long>(row.total_mentions))
          return fail("mean x n does not recover the total");
      }
      if (totals != per_class) return fail("class totals differ, set " + std::to_string(set));
      for (std::size_t r : reports)
        if (r != n_reports) return fail("groups not exhaustive, set " + std::to_string(set));
    }
    auto five = per_report_counts(recs, c, ClassGrouping::Five);
    auto two = per_report_counts(recs, c, ClassGrouping::Two);
    for (const auto& r : c.reports()) {
      const auto& f = five.at(r.id());
      if (two.at(r.id())[0] != f[0] + f[1] || two.at(r.id())[1] != f[2] + f[3] + f[4])
        return fail("projection broken for " + r.id());
    }
  }
  return {true, "50 mention sets, 3 groupings each"};
}

// 10 ------------------------------------------------------------------------

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "riskminer");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) std::cerr << err.str();
  return code;
}

Outcome reproducibility() {
  rmtest::TempDir tmp;
  std::vector<std::string> files{"data/corpus.jsonl", "data/labels.csv", "data/planted.csv", "bundle.json",
                                 "val.csv", "mentions.csv", "aggregate.csv", "coverage.csv", "eval.csv"};
  for (const std::string run : {"a", "b"}) {
    auto p = [&](const std::string& f) { return (tmp.path() / run / f).string(); };
    std::string workers = run == "a" ? "1" : "4";
    if (run_cli({"synth", "--out", p("data"), "--companies", "40", "--base-rate", "0.1", "--trend-multiplier", "4",
             "--seed", "10"}) != 0 ||
        run_cli({"train", "--corpus", p("data/corpus.jsonl"), "--labels", p("data/labels.csv"), "--bundle",
             p("bundle.json"), "--out", p("val.csv"), "--workers", workers}) != 0 ||
        run_cli({"infer", "--corpus", p("data/corpus.jsonl"), "--bundle", p("bundle.json"), "--out", p("mentions.csv"),
             "--workers", workers}) != 0 ||
        run_cli({"aggregate", "--corpus", p("data/corpus.jsonl"), "--mentions", p("mentions.csv"), "--out",
             p("aggregate.csv")}) != 0 ||
        run_cli({"coverage", "--corpus", p("data/corpus.jsonl"), "--mentions", p("mentions.csv"), "--out",
             p("coverage.csv")}) != 0 ||
        run_cli({"eval", "--corpus", p("data/corpus.jsonl"), "--labels", p("data/labels.csv"), "--bundle",
             p("bundle.json"), "--out", p("eval.csv")}) != 0)
      return fail("pipeline run " + run + " failed");
  }
  for (const auto& f : files)
    if (io::read_file(tmp.path() / "a" / f) != io::read_file(tmp.path() / "b" / f)) return fail(f + " differs");
  return {true, std::to_string(files.size()) + " files byte-identical"};
}

// 11 ------------------------------------------------------------------------

Outcome bundle_round_trip() {
  rmtest::TempDir tmp;
  ModelBundle b = rmtest::toy_bundle(1111);
  save_bundle(b, tmp / "a.json");
  ModelBundle loaded = load_bundle(tmp / "a.json");
  save_bundle(loaded, tmp / "b.json");
  if (io::read_file(tmp / "a.json") != io::read_file(tmp / "b.json")) return fail("save-load-save changed bytes");
  std::mt19937_64 rng(1112);
  for (int i = 0; i < 1000; ++i) {
    SparseVector x;
    x.dimension = b.vocabulary.size();
    for (std::uint32_t j = 0; j < x.dimension; ++j)
      if (rng() % 3 == 0) x.entries.emplace_back(j, static_cast<double>(rng() % 2001) / 1000.0 - 1.0);
    if (score(b.model, x) != score(loaded.model, x) ||
        predict(b.model, b.thresholds, x) != predict(loaded.model, loaded.thresholds, x))
      return fail("prediction differs on vector " + std::to_string(i));
  }
  return {true, "byte-identical; 1000 vectors agree"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"tfidf-oracle", 5, tfidf_oracle},
      {"threshold-calibration-optimality", 5, calibration_optimality},
      {"metric-oracle", 0, metric_oracle},
      {"classifier-sanity", 60, classifier_sanity},
      {"class-weight-effect", 0, class_weight_effect},
      {"krippendorff-alpha", 0, alpha_checks},
      {"keyword-filter", 0, keyword_filter},
      {"planted-trend", 300, planted_trend},
      {"aggregation-exactness", 0, aggregation_exactness},
      {"reproducibility", 0, reproducibility},
      {"bundle-round-trip", 0, bundle_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.limit_s > 0 && secs > c.limit_s) o = fail(o.detail + "; too slow");
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
