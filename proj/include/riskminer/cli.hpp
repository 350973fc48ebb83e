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

//! The `riskminer` command line.
//!
//! Exit codes: 0 success, 1 invalid input or usage, 2 runtime failure.
//! Options can also come from a TOML/INI file given with --config; keys
//! of subcommand options live in a section named after the subcommand.
//! Command-line flags win over the file.

#ifndef RISKMINER_CLI_HPP
#define RISKMINER_CLI_HPP

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskminer/agreement.hpp"
#include "riskminer/analytics.hpp"
#include "riskminer/bundle.hpp"
#include "riskminer/classifier.hpp"
#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/evaluation.hpp"
#include "riskminer/io.hpp"
#include "riskminer/keywords.hpp"
#include "riskminer/labels.hpp"
#include "riskminer/log.hpp"
#include "riskminer/pipeline.hpp"
#include "riskminer/segmenter.hpp"
#include "riskminer/synth.hpp"

namespace riskminer::cli {

namespace fs = std::filesystem;

/// Writes to `path`, or stdout when the path is empty.
inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) out << content;
  else io::write_file_atomic(path, content);
}

template <typename Enum, typename Parse>
Enum parse_enum(const std::string& text, Parse parse, const char* what) {
  auto v = parse(text);
  if (!v) throw ValidationError(std::string("unknown ") + what + " '" + text + "'");
  return *v;
}

inline SegmenterConfig segmenter_with(int min_tokens) {
  SegmenterConfig c;
  c.min_tokens = min_tokens;
  c.validate();
  return c;
}

inline KeywordSet keywords_from(const std::string& path) {
  return path.empty() ? default_keywords() : load_keywords(path);
}

/// Five-class prediction viewed as a coarser task: labels are projected,
/// scores max-pooled within each target class.
inline Prediction project_prediction(const Prediction& p, Task to) {
  if (to == Task::FiveClass) return p;
  Prediction out;
  RiskSet set;
  for (std::size_t c = 0; c < kAllRiskClasses.size(); ++c)
    if (has_class(p.labels, c)) set.insert(kAllRiskClasses[c]);
  out.labels = project(set, to);
  if (!p.scores.empty()) {
    out.scores.assign(num_classes(to), std::numeric_limits<double>::lowest());
    for (std::size_t c = 0; c < kAllRiskClasses.size(); ++c) {
      std::size_t t = to == Task::Binary ? 0 : (group_of(kAllRiskClasses[c]) == RiskGroup::Physical ? 0 : 1);
      out.scores[t] = std::max(out.scores[t], p.scores[c]);
    }
  }
  return out;
}

struct Options {
  std::string corpus, labels, keywords, bundle, out, mentions, split = "test", coder;
  std::vector<std::string> bundles, predictions, coders;
  std::string val_predictions;
  std::string task = "five", setting = "realistic", train_setting = "realistic", mode = "both";
  std::string group_by = "year", classes = "five", created_at = "unspecified";
  std::uint64_t seed = 42;
  int workers = 1, neighbor_radius = 1, min_tokens = 5, min_df = 2, epochs = 10;
  int year_from = 2015, year_to = 2020;
  std::size_t bootstrap_b = 1000;
  double threshold = 0.5;
  std::vector<double> lambda_grid = default_lambda_grid();
  bool unweighted = false;
  // synth
  int companies = 20, synth_from = 2010, synth_to = 2019, breakpoint = 2015, pages = 8;
  std::vector<double> base_rate{0.5};
  double trend = 1.0, hard_negative_rate = 0.5, multi_label = 0.0;
};

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_validate(const Options& o, std::ostream& out) {
  Corpus corpus = load_corpus(o.corpus);
  SegmenterConfig seg = segmenter_with(o.min_tokens);
  ParagraphIndex index(corpus, seg);
  std::size_t pages = 0;
  for (const Report& r : corpus.reports()) pages += r.pages.size();
  std::ostringstream s;
  s << "reports," << corpus.size() << "\npages," << pages << "\nparagraphs," << index.size() << "\n";
  if (!o.labels.empty()) {
    LabelSet labels = load_labels(o.labels, index);
    for (Split sp : {Split::Train, Split::Val, Split::Test}) {
      ClassCounts c = labels.counts(sp);
      for (RiskClass rc : kAllRiskClasses)
        s << to_string(sp) << "." << to_string(rc) << "," << c.per_class[static_cast<int>(rc)] << "\n";
      s << to_string(sp) << ".unique_positive," << c.unique_positive << "\n";
      s << to_string(sp) << ".negative," << c.negative << "\n";
      s << to_string(sp) << ".hard_negative," << c.hard_negative << "\n";
    }
    SplitCheck check = check_split_disjointness(labels, corpus);
    if (!check.ok()) {
      std::string list;
      for (const auto& c : check.shared_companies) list += (list.empty() ? "" : ", ") + c;
      throw ValidationError("companies appear in both val and test splits: " + list);
    }
  }
  emit(o.out, s.str(), out);
  return 0;
}

inline int cmd_segment(const Options& o, std::ostream& out) {
  Corpus corpus = load_corpus(o.corpus);
  SegmenterConfig seg = segmenter_with(o.min_tokens);
  const auto& reports = corpus.reports();
  std::vector<std::vector<Paragraph>> per(reports.size());
  parallel_for(reports.size(), o.workers, [&](std::size_t i) { per[i] = segment_report(reports[i], seg); });
  io::CsvWriter w({"paragraph_id", "report_id", "page", "index", "text"});
  for (const auto& ps : per)
    for (const Paragraph& p : ps)
      w.row({p.paragraph_id, p.report_id, std::to_string(p.page_number), std::to_string(p.index_on_page), p.text});
  emit(o.out, w.str(), out);
  return 0;
}

inline int cmd_filter(const Options& o, std::ostream& out) {
  Corpus corpus = load_corpus(o.corpus);
  KeywordSet keywords = keywords_from(o.keywords);
  RelevanceMap rel = compute_relevance(corpus, keywords, o.neighbor_radius, o.workers);
  io::CsvWriter w({"report_id", "page", "direct_hit", "keywords"});
  for (const Report& r : corpus.reports()) {
    const PageRelevance& pr = rel.at(r.id());
    for (int page : pr.relevant_pages) {
      auto hit = pr.direct_hits.find(page);
      std::string phrases;
      if (hit != pr.direct_hits.end())
        for (const auto& k : hit->second) phrases += (phrases.empty() ? "" : ";") + k;
      w.row({r.id(), std::to_string(page), hit != pr.direct_hits.end() ? "true" : "false", phrases});
    }
  }
  emit(o.out, w.str(), out);
  return 0;
}

inline int cmd_train(const Options& o, std::ostream& out) {
  Corpus corpus = load_corpus(o.corpus);
  TrainOptions t;
  t.task = parse_enum<Task>(o.task, parse_task, "task");
  t.val_setting = parse_enum<Setting>(o.setting, parse_setting, "setting");
  t.train_setting = parse_enum<Setting>(o.train_setting, parse_setting, "setting");
  t.segmenter = segmenter_with(o.min_tokens);
  t.features.min_df = o.min_df;
  t.hyper.seed = o.seed;
  t.hyper.epochs = o.epochs;
  t.hyper.lambda_grid = o.lambda_grid;
  t.hyper.balanced_weights = !o.unweighted;
  t.neighbor_radius = o.neighbor_radius;
  t.workers = o.workers;
  t.created_at = o.created_at;
  if (!o.coder.empty()) t.coder = o.coder;
  ParagraphIndex index(corpus, t.segmenter);
  LabelSet labels = load_labels(o.labels, index);
  SplitCheck check = check_split_disjointness(labels, corpus);
  if (!check.ok()) log::warn("val and test splits share " + std::to_string(check.shared_companies.size()) + " companies");
  TrainResult res = train_pipeline(corpus, labels, keywords_from(o.keywords), t);
  save_bundle(res.bundle, o.bundle);
  log::info("selected lambda " + io::format_real(res.bundle.model.lambda));
  emit(o.out, eval_report_csv(res.val_report), out);
  return 0;
}

struct Candidate {
  std::string id;
  double lambda = std::numeric_limits<double>::infinity();  // external models
  EvalReport report;
};

inline int cmd_eval(const Options& o, std::ostream& out) {
  if (o.bundles.empty() && o.predictions.empty()) throw ValidationError("eval needs --bundle or --predictions");
  Corpus corpus = load_corpus(o.corpus);
  Task task = parse_enum<Task>(o.task, parse_task, "task");
  Setting setting = parse_enum<Setting>(o.setting, parse_setting, "setting");
  Split split = parse_enum<Split>(o.split, parse_split, "split");
  KeywordSet keywords = keywords_from(o.keywords);
  RelevanceMap rel = compute_relevance(corpus, keywords, o.neighbor_radius, o.workers);
  std::optional<std::string> coder;
  if (!o.coder.empty()) coder = o.coder;

  std::vector<Candidate> cands;
  for (const std::string& path : o.bundles) {
    ModelBundle b = load_bundle(path);
    if (b.task != task && b.task != Task::FiveClass)
      throw ValidationError("bundle " + path + " is a '" + std::string(to_string(b.task)) + "' model; cannot evaluate as '" +
                            o.task + "'");
    if (b.keyword_hash != keywords.hash()) log::warn("bundle " + path + " was trained with a different keyword set");
    ParagraphIndex index(corpus, b.segmenter);
    LabelSet labels = load_labels(o.labels, index);
    auto items = split_items(labels, index, split, setting, rel, coder);
    PredictionMap preds = predict_items(b, index, items);
    if (b.task != task)
      for (auto& [id, p] : preds) p = project_prediction(p, task);
    cands.push_back(Candidate{fs::path(path).stem().string(), b.model.lambda, evaluate(preds, items, task, setting)});
  }
  if (!o.predictions.empty()) {
    ParagraphIndex index(corpus, segmenter_with(o.min_tokens));
    LabelSet labels = load_labels(o.labels, index);
    auto items = split_items(labels, index, split, setting, rel, coder);
    std::optional<ThresholdSet> thresholds;
    if (!o.val_predictions.empty()) {
      auto val = import_external_predictions(o.val_predictions, task, &index, o.threshold);
      if (!val.has_scores) throw ValidationError("--val-predictions must carry scores");
      auto val_items = split_items(labels, index, Split::Val, setting, rel, coder);
      thresholds = calibrate_from_predictions(val.predictions, val_items, task);
    }
    for (const std::string& path : o.predictions) {
      auto ext = import_external_predictions(path, task, &index, o.threshold);
      if (thresholds) apply_thresholds(ext.predictions, *thresholds);
      cands.push_back(Candidate{fs::path(path).stem().string(), std::numeric_limits<double>::infinity(),
                                evaluate(ext.predictions, items, task, setting)});
    }
  }

  if (cands.size() == 1) {
    emit(o.out, eval_report_csv(cands.front().report), out);
    return 0;
  }
  if (o.out.empty()) throw ValidationError("evaluating several candidates needs --out <directory>");
  std::vector<SelectionCandidate> sel;
  std::map<std::string, int> seen;
  for (Candidate& c : cands) {
    if (seen[c.id]++) c.id += "_" + std::to_string(seen[c.id] - 1);
    sel.push_back(SelectionCandidate{c.id, c.lambda, c.report.macro.f1});
  }
  std::size_t best = select_model(sel);
  io::CsvWriter w({"id", "lambda", "macro_f1", "selected"});
  for (std::size_t i = 0; i < cands.size(); ++i) {
    io::write_file_atomic(fs::path(o.out) / (cands[i].id + ".csv"), eval_report_csv(cands[i].report));
    w.row({cands[i].id, std::isfinite(cands[i].lambda) ? io::format_real(cands[i].lambda) : "",
           io::format_real(cands[i].report.macro.f1), i == best ? "true" : "false"});
  }
  io::write_file_atomic(fs::path(o.out) / "selection.csv", w.str());
  out << cands[best].id << "\n";
  return 0;
}

inline int cmd_icr(const Options& o, std::ostream& out) {
  std::optional<ParagraphIndex> index;
  if (!o.corpus.empty()) index.emplace(load_corpus(o.corpus), segmenter_with(o.min_tokens));
  LabelSet labels = parse_labels(io::read_file(o.labels), index ? &*index : nullptr, o.labels);
  std::vector<std::string> coders = o.coders;
  if (coders.empty()) {
    auto all = labels.coders();
    if (all.size() != 2) throw ValidationError("label file has " + std::to_string(all.size()) + " coders; pick two with --coders");
    coders.assign(all.begin(), all.end());
  }
  if (coders.size() != 2) throw ValidationError("--coders takes exactly two coder ids");
  CoderMatrix m = build_coder_matrix(labels, coders[0], coders[1]);
  std::vector<AlphaMode> modes;
  if (o.mode == "both") modes = {AlphaMode::Union, AlphaMode::Intersection};
  else modes = {parse_enum<AlphaMode>(o.mode, parse_alpha_mode, "alpha mode")};
  io::CsvWriter w({"mode", "scope", "alpha", "units"});
  for (AlphaMode mode : modes)
    for (const AlphaRow& r : alpha_report(m, mode))
      w.row({std::string(to_string(mode)), r.scope, r.result.alpha ? io::format_real(*r.result.alpha) : "",
             std::to_string(r.result.units)});
  emit(o.out, w.str(), out);
  return 0;
}

inline int cmd_infer(const Options& o, std::ostream& out, bool min_tokens_given) {
  Corpus corpus = load_corpus(o.corpus);
  ModelBundle b = load_bundle(o.bundle);
  if (min_tokens_given && o.min_tokens != b.segmenter.min_tokens)
    throw ValidationError("--min-tokens " + std::to_string(o.min_tokens) + " differs from the bundle's segmenter (" +
                          b.segmenter.fingerprint() + ")");
  if (b.segmenter.version != kSegmenterVersion)
    throw ValidationError("bundle segmenter '" + b.segmenter.version + "' is not available here");
  KeywordSet keywords = keywords_from(o.keywords);
  if (b.keyword_hash != keywords.hash()) log::warn("keyword set differs from the one recorded in the bundle");
  auto mentions = infer_corpus(corpus, keywords, b, o.neighbor_radius, o.workers);
  log::info(std::to_string(mentions.size()) + " mentions");
  emit(o.out, mentions_csv(mentions), out);
  return 0;
}

inline int cmd_aggregate(const Options& o, std::ostream& out) {
  Corpus corpus = load_corpus(o.corpus);
  auto mentions = parse_mentions(io::read_file(o.mentions), corpus, o.mentions);
  AggregateOptions a;
  a.group_by = parse_enum<GroupBy>(o.group_by, parse_group_by, "grouping");
  a.classes = parse_enum<ClassGrouping>(o.classes, parse_class_grouping, "class grouping");
  a.industry_year_from = o.year_from;
  a.industry_year_to = o.year_to;
  a.bootstrap_resamples = o.bootstrap_b;
  a.seed = o.seed;
  emit(o.out, aggregate_csv(aggregate(mentions, corpus, a)), out);
  return 0;
}

inline int cmd_coverage(const Options& o, std::ostream& out) {
  Corpus corpus = load_corpus(o.corpus);
  auto mentions = parse_mentions(io::read_file(o.mentions), corpus, o.mentions);
  emit(o.out, coverage_csv(coverage_stats(mentions, corpus)), out);
  return 0;
}

inline int cmd_synth(const Options& o, std::ostream& out) {
  SynthConfig c;
  c.n_companies = o.companies;
  c.year_from = o.synth_from;
  c.year_to = o.synth_to;
  c.breakpoint_year = o.breakpoint;
  c.trend_multiplier = o.trend;
  c.pages_per_report = o.pages;
  c.hard_negative_rate = o.hard_negative_rate;
  c.multi_label_fraction = o.multi_label;
  c.seed = o.seed;
  if (o.base_rate.size() == 1) c.base_rate.fill(o.base_rate[0]);
  else if (o.base_rate.size() == 5) std::copy(o.base_rate.begin(), o.base_rate.end(), c.base_rate.begin());
  else throw ValidationError("--base-rate takes one value or five (one per class)");
  SynthOutput s = generate_synth(c);
  fs::path dir(o.out);
  io::write_file_atomic(dir / "corpus.jsonl", serialize_corpus(s.corpus));
  io::write_file_atomic(dir / "labels.csv", serialize_labels(s.labels));
  io::write_file_atomic(dir / "planted.csv", mentions_csv(s.planted));
  out << s.corpus.size() << " reports, " << s.planted.size() << " planted mentions\n";
  return 0;
}

// ---------------------------------------------------------------------------

/// Entry point; never throws.
inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Climate-risk disclosure mining: segment, filter, classify and aggregate annual reports."};
  app.name("riskminer");
  app.set_config("--config", "", "TOML/INI file with option values; flags win");
  app.require_subcommand(1);
  Options o;

  auto corpus_opt = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--corpus", o.corpus, "Corpus file (JSON lines)");
    if (required) opt->required();
  };
  auto out_opt = [&](CLI::App* s, const char* what = "Output file (default: stdout)") {
    s->add_option("--out", o.out, what);
  };
  auto workers_opt = [&](CLI::App* s) {
    s->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto radius_opt = [&](CLI::App* s) {
    s->add_option("--neighbor-radius", o.neighbor_radius, "Neighboring pages kept around keyword hits")
        ->check(CLI::NonNegativeNumber);
  };
  auto keywords_opt = [&](CLI::App* s) {
    s->add_option("--keywords", o.keywords, "Keyword file (default: built-in lists)");
  };
  auto min_tokens_opt = [&](CLI::App* s) {
    return s->add_option("--min-tokens", o.min_tokens, "Minimum tokens per paragraph")->check(CLI::PositiveNumber);
  };
  auto task_opt = [&](CLI::App* s) {
    s->add_option("--task", o.task, "binary|two|five")->check(CLI::IsMember({"binary", "two", "five"}));
  };
  auto setting_opt = [&](CLI::App* s, const char* help) {
    s->add_option("--setting", o.setting, help)->check(CLI::IsMember({"discriminatory", "hardneg", "realistic"}));
  };

  auto* validate = app.add_subcommand("validate", "Check corpus and label files");
  corpus_opt(validate);
  validate->add_option("--labels", o.labels, "Label file");
  min_tokens_opt(validate);
  out_opt(validate);

  auto* segment = app.add_subcommand("segment", "Split pages into paragraphs");
  corpus_opt(segment);
  min_tokens_opt(segment);
  workers_opt(segment);
  out_opt(segment);

  auto* filter = app.add_subcommand("filter", "List keyword-relevant pages");
  corpus_opt(filter);
  keywords_opt(filter);
  radius_opt(filter);
  workers_opt(filter);
  out_opt(filter);

  auto* train_cmd = app.add_subcommand("train", "Grid-search, calibrate and save a model bundle");
  corpus_opt(train_cmd);
  train_cmd->add_option("--labels", o.labels, "Label file")->required();
  train_cmd->add_option("--bundle", o.bundle, "Bundle file to write")->required();
  keywords_opt(train_cmd);
  task_opt(train_cmd);
  setting_opt(train_cmd, "Validation setting used for scoring and calibration");
  train_cmd->add_option("--train-setting", o.train_setting, "Training setting")
      ->check(CLI::IsMember({"discriminatory", "hardneg", "realistic"}));
  train_cmd->add_option("--seed", o.seed, "Shuffle seed");
  train_cmd->add_option("--epochs", o.epochs, "Epochs")->check(CLI::PositiveNumber);
  train_cmd->add_option("--lambda-grid", o.lambda_grid, "Regularization values to search")->delimiter(',');
  train_cmd->add_option("--min-df", o.min_df, "Minimum document frequency")->check(CLI::PositiveNumber);
  train_cmd->add_flag("--unweighted", o.unweighted, "Disable balanced class weights");
  train_cmd->add_option("--created-at", o.created_at, "Timestamp recorded in the bundle");
  train_cmd->add_option("--coder", o.coder, "Use this coder's labels as gold");
  min_tokens_opt(train_cmd);
  radius_opt(train_cmd);
  workers_opt(train_cmd);
  out_opt(train_cmd, "Validation report CSV (default: stdout)");

  auto* eval = app.add_subcommand("eval", "Evaluate bundles or imported predictions");
  corpus_opt(eval);
  eval->add_option("--labels", o.labels, "Label file")->required();
  eval->add_option("--bundle", o.bundles, "Model bundle (repeatable)");
  eval->add_option("--predictions", o.predictions, "External prediction file (repeatable)");
  eval->add_option("--val-predictions", o.val_predictions, "Validation scores used to calibrate external thresholds");
  eval->add_option("--threshold", o.threshold, "Fixed threshold for uncalibrated external scores");
  eval->add_option("--split", o.split, "train|val|test")->check(CLI::IsMember({"train", "val", "test"}));
  eval->add_option("--coder", o.coder, "Use this coder's labels as gold");
  keywords_opt(eval);
  task_opt(eval);
  setting_opt(eval, "Evaluation setting");
  min_tokens_opt(eval);
  radius_opt(eval);
  workers_opt(eval);
  out_opt(eval, "Report CSV, or a directory when several candidates are given");

  auto* icr = app.add_subcommand("icr", "Krippendorff's alpha between two coders");
  icr->add_option("--labels", o.labels, "Label file")->required();
  corpus_opt(icr, false);
  icr->add_option("--coders", o.coders, "Two coder ids")->delimiter(',');
  icr->add_option("--mode", o.mode, "union|intersection|both")->check(CLI::IsMember({"union", "intersection", "both"}));
  min_tokens_opt(icr);
  out_opt(icr);

  auto* infer = app.add_subcommand("infer", "Predict risk mentions over a corpus");
  corpus_opt(infer);
  infer->add_option("--bundle", o.bundle, "Five-class model bundle")->required();
  keywords_opt(infer);
  radius_opt(infer);
  workers_opt(infer);
  auto* infer_min_tokens = min_tokens_opt(infer);
  out_opt(infer);

  auto* agg = app.add_subcommand("aggregate", "Mean mentions per report by group with bootstrap CIs");
  corpus_opt(agg);
  agg->add_option("--mentions", o.mentions, "Mentions CSV")->required();
  agg->add_option("--group-by", o.group_by, "year|country_year|industry")
      ->check(CLI::IsMember({"year", "country_year", "industry"}));
  agg->add_option("--classes", o.classes, "five|two|all")->check(CLI::IsMember({"five", "two", "all"}));
  agg->add_option("--year-from", o.year_from, "First year for industry grouping");
  agg->add_option("--year-to", o.year_to, "Last year for industry grouping");
  agg->add_option("--bootstrap-b", o.bootstrap_b, "Bootstrap resamples")->check(CLI::PositiveNumber);
  agg->add_option("--seed", o.seed, "Bootstrap seed");
  out_opt(agg);

  auto* cov = app.add_subcommand("coverage", "Per-class coverage statistics");
  corpus_opt(cov);
  cov->add_option("--mentions", o.mentions, "Mentions CSV")->required();
  out_opt(cov);

  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus with planted disclosures");
  synth_cmd->add_option("--out", o.out, "Output directory")->required();
  synth_cmd->add_option("--companies", o.companies, "Number of companies")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--year-from", o.synth_from, "First year");
  synth_cmd->add_option("--year-to", o.synth_to, "Last year");
  synth_cmd->add_option("--breakpoint", o.breakpoint, "First year of the trend multiplier");
  synth_cmd->add_option("--trend-multiplier", o.trend, "Rate multiplier from the breakpoint on");
  synth_cmd->add_option("--base-rate", o.base_rate, "Planted paragraphs per report (one value or five)")->delimiter(',');
  synth_cmd->add_option("--pages", o.pages, "Pages per report")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--hard-negative-rate", o.hard_negative_rate, "Hard negatives per report");
  synth_cmd->add_option("--multi-label-fraction", o.multi_label, "Chance of merging two planted paragraphs");
  synth_cmd->add_option("--seed", o.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = nullptr;
    for (const CLI::App* s : app.get_subcommands()) sub = s;
    err << (sub ? sub->help() : app.help());
    return 1;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*segment) return cmd_segment(o, out);
    if (*filter) return cmd_filter(o, out);
    if (*train_cmd) return cmd_train(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*icr) return cmd_icr(o, out);
    if (*infer) return cmd_infer(o, out, infer_min_tokens->count() > 0);
    if (*agg) return cmd_aggregate(o, out);
    if (*cov) return cmd_coverage(o, out);
    if (*synth_cmd) return cmd_synth(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace riskminer::cli

#endif  // RISKMINER_CLI_HPP
