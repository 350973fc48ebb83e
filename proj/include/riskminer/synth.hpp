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

//! Seeded synthetic corpora with planted risk disclosures.
//!
//! Each report gets a Poisson number of planted paragraphs per class. A
//! planted paragraph combines one keyword phrase of its class, a few
//! class-specific cue words and neutral filler. Filler never contains a
//! keyword, so only planted paragraphs and hard negatives make a page
//! relevant.
//!
//! All draws go through std::mt19937_64 with explicit arithmetic (no
//! library distributions), so output bytes do not depend on the standard
//! library in use.

#ifndef RISKMINER_SYNTH_HPP
#define RISKMINER_SYNTH_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "riskminer/analytics.hpp"
#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/labels.hpp"
#include "riskminer/text.hpp"

namespace riskminer {

struct SynthConfig {
  int n_companies = 20;
  int year_from = 2010;
  int year_to = 2019;
  std::array<double, 5> base_rate{0.5, 0.5, 0.5, 0.5, 0.5};  // planted paragraphs per report, by class
  double trend_multiplier = 1.0;                             // applied from breakpoint_year on
  int breakpoint_year = 2015;
  std::vector<std::string> countries{"DE", "FR", "GB", "US", "JP"};
  std::vector<std::string> industries{"energy", "finance", "industrials", "utilities", "consumer"};
  int pages_per_report = 8;
  int filler_per_page = 2;             // neutral paragraphs on every page
  double hard_negative_rate = 0.5;     // per report
  double labeled_negative_rate = 1.0;  // filler paragraphs labeled as negatives, per report
  double multi_label_fraction = 0.0;   // chance a planted pair of distinct classes shares one paragraph
  double train_fraction = 0.6;
  double val_fraction = 0.2;
  std::uint64_t seed = 42;

  void validate() const {
    if (n_companies < 1) throw ValidationError("synth needs at least one company");
    if (year_from > year_to) throw ValidationError("synth year range is empty");
    if (year_from < 1990 || year_to > 2100) throw ValidationError("synth years must lie in [1990, 2100]");
    for (double r : base_rate)
      if (!(r >= 0.0) || !std::isfinite(r)) throw ValidationError("synth rates must be finite and >= 0");
    if (!(trend_multiplier >= 0.0) || !std::isfinite(trend_multiplier))
      throw ValidationError("trend multiplier must be finite and >= 0");
    if (breakpoint_year < year_from || breakpoint_year > year_to)
      throw ValidationError("breakpoint year must lie within the year range");
    if (countries.empty() || industries.empty()) throw ValidationError("synth needs countries and industries");
    for (const auto& c : countries)
      if (c.size() != 2 || c[0] < 'A' || c[0] > 'Z' || c[1] < 'A' || c[1] > 'Z')
        throw ValidationError("invalid country code '" + c + "'");
    if (pages_per_report < 1) throw ValidationError("synth needs at least one page per report");
    if (filler_per_page < 0) throw ValidationError("filler_per_page must be >= 0");
    if (!(hard_negative_rate >= 0.0) || !(labeled_negative_rate >= 0.0))
      throw ValidationError("synth negative rates must be >= 0");
    if (!(multi_label_fraction >= 0.0 && multi_label_fraction <= 1.0))
      throw ValidationError("multi_label_fraction must lie in [0, 1]");
    if (!(train_fraction >= 0.0 && val_fraction >= 0.0 && train_fraction + val_fraction <= 1.0))
      throw ValidationError("split fractions must be >= 0 and sum to at most 1");
  }

  /// Expected planted paragraphs of class `c` in a report of `year`.
  double rate(RiskClass c, int year) const {
    double r = base_rate[static_cast<std::size_t>(c)];
    return year >= breakpoint_year ? r * trend_multiplier : r;
  }
};

struct SynthOutput {
  Corpus corpus;
  LabelSet labels;
  std::vector<MentionRecord> planted;  // ground-truth mentions, corpus order
};

namespace synth {

inline constexpr std::string_view kCoder = "synth";

// Keyword phrases per class, drawn from the default lists.
inline const std::array<std::vector<std::string_view>, 5>& class_phrases() {
  static const std::array<std::vector<std::string_view>, 5> p = {{
      {"storm", "hurricane", "floods", "extreme weather", "windstorm", "extreme event", "catastrophic event",
       "natural hazard", "disaster"},
      {"sea level", "drought", "temperature rise", "global temperature", "rainfall", "monsoon", "climate variability",
       "biodiversity"},
      {"emission regulation", "emission standard", "emission trading", "cap and trade", "climate legislation",
       "environmental legislation", "energy legislation"},
      {"oil price", "energy price", "fossil fuel", "emission reduction"},
      {"climate change", "climate risk", "paris agreement", "global warming", "changing climate"},
  }};
  return p;
}

inline const std::array<std::vector<std::string_view>, 5>& class_cues() {
  static const std::array<std::vector<std::string_view>, 5> c = {{
      {"damage", "outage", "destroyed", "evacuation", "repair", "interruption", "physical", "sudden"},
      {"gradual", "yields", "scarcity", "shifting", "persistent", "agricultural", "water", "decades"},
      {"regulation", "compliance", "penalties", "permits", "lawsuits", "regulatory", "litigation", "fines"},
      {"demand", "technology", "pricing", "competitors", "substitution", "innovation", "consumers", "costs"},
      {"reputation", "stakeholders", "perception", "investors", "activists", "image", "trust", "criticism"},
  }};
  return c;
}

inline const std::vector<std::string_view>& hard_negative_phrases() {
  static const std::vector<std::string_view> p = {"renewable", "co2", "carbon", "ghg", "greenhouse",
                                                  "sustainable energy"};
  return p;
}

inline const std::vector<std::string_view>& filler_words() {
  static const std::vector<std::string_view> w = {
      "revenue",    "dividend",  "shareholders", "board",     "audit",      "governance", "employees",
      "customers",  "products",  "segment",      "growth",    "margin",     "operating",  "capital",
      "investment", "strategy",  "quarter",      "subsidiary", "acquisition", "financing", "liquidity",
      "balance",    "sheet",     "pension",      "facilities", "headcount",  "management", "directors",
      "committee",  "accounting", "statements",  "payments",  "contracts",  "suppliers",  "logistics",
      "software",   "brand",     "office",       "group",     "annual",     "results",    "report"};
  return w;
}

/// Uniform index in [0, n).
inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Uniform real in [0, 1) from the top 53 bits.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Poisson draw by multiplication of uniforms; rates above 30 are split
/// into independent chunks so exp(-rate) stays well above underflow.
inline int poisson(std::mt19937_64& rng, double rate) {
  int total = 0;
  while (rate > 0.0) {
    double chunk = std::min(rate, 30.0);
    rate -= chunk;
    const double limit = std::exp(-chunk);
    double prod = unit(rng);
    while (prod > limit) {
      ++total;
      prod *= unit(rng);
    }
  }
  return total;
}

inline bool bernoulli(std::mt19937_64& rng, double p) { return unit(rng) < p; }

inline void append_words(std::string& out, std::mt19937_64& rng, const std::vector<std::string_view>& pool,
                         int count) {
  for (int i = 0; i < count; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += pool[pick(rng, pool.size())];
  }
}

inline std::string filler_sentence(std::mt19937_64& rng, int words) {
  std::string s;
  append_words(s, rng, filler_words(), words);
  s[0] = static_cast<char>(s[0] - 'a' + 'A');
  s.push_back('.');
  return s;
}

/// Planted text for one class: cue words around the keyword phrase plus
/// filler.
inline std::string planted_sentence(std::mt19937_64& rng, RiskClass c) {
  const auto k = static_cast<std::size_t>(c);
  std::string s;
  append_words(s, rng, filler_words(), 2);
  append_words(s, rng, class_cues()[k], 2);
  s += ' ';
  s += class_phrases()[k][pick(rng, class_phrases()[k].size())];
  s += ' ';
  std::string tail;
  append_words(tail, rng, class_cues()[k], 2);
  append_words(tail, rng, filler_words(), 3);
  s += tail;
  s[0] = static_cast<char>(s[0] - 'a' + 'A');
  s.push_back('.');
  return s;
}

inline std::string hard_negative_sentence(std::mt19937_64& rng) {
  std::string s;
  append_words(s, rng, filler_words(), 3);
  s += ' ';
  s += hard_negative_phrases()[pick(rng, hard_negative_phrases().size())];
  s += ' ';
  std::string tail;
  append_words(tail, rng, filler_words(), 4);
  s += tail;
  s[0] = static_cast<char>(s[0] - 'a' + 'A');
  s.push_back('.');
  return s;
}

/// Breaks a paragraph over lines the way PDF extraction does.
inline std::string wrap(const std::string& text, std::size_t width = 60) {
  std::string out;
  std::size_t col = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(' ', start);
    if (end == std::string::npos) end = text.size();
    std::size_t len = end - start;
    if (col > 0 && col + 1 + len > width) {
      out.push_back('\n');
      col = 0;
    } else if (col > 0) {
      out.push_back(' ');
      ++col;
    }
    out.append(text, start, len);
    col += len;
    start = end + 1;
  }
  return out;
}

enum class BlockKind : std::uint8_t { Filler, Planted, HardNegative };

struct Block {
  BlockKind kind = BlockKind::Filler;
  RiskSet classes;
  std::string text;
};

}  // namespace synth

inline SynthOutput generate_synth(const SynthConfig& config) {
  config.validate();
  using namespace synth;
  std::mt19937_64 rng(config.seed);
  SynthOutput out;

  // Company metadata and company-level splits.
  const auto n = static_cast<std::size_t>(config.n_companies);
  std::vector<std::string> country(n), industry(n);
  for (std::size_t i = 0; i < n; ++i) {
    country[i] = config.countries[pick(rng, config.countries.size())];
    industry[i] = config.industries[pick(rng, config.industries.size())];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[pick(rng, i)]);
  std::vector<Split> split(n, Split::Test);
  const auto n_train = static_cast<std::size_t>(std::llround(config.train_fraction * static_cast<double>(n)));
  const auto n_val = static_cast<std::size_t>(std::llround(config.val_fraction * static_cast<double>(n)));
  for (std::size_t r = 0; r < n; ++r)
    split[order[r]] = r < n_train ? Split::Train : (r < n_train + n_val ? Split::Val : Split::Test);

  std::vector<LabelRecord> labels;
  const int digits = static_cast<int>(std::to_string(n).size());
  for (std::size_t ci = 0; ci < n; ++ci) {
    char company_id[32];
    std::snprintf(company_id, sizeof company_id, "C%0*zu", digits, ci + 1);
    for (int year = config.year_from; year <= config.year_to; ++year) {
      Report report;
      report.meta.company_id = company_id;
      report.meta.report_id = std::string(company_id) + "-" + std::to_string(year);
      report.meta.company_name = "Company " + std::string(company_id + 1);
      report.meta.country = country[ci];
      report.meta.industry = industry[ci];
      report.meta.year = year;

      // Content blocks: planted first, then optional merging into
      // multi-label paragraphs, then hard negatives.
      std::vector<Block> special;
      for (RiskClass c : kAllRiskClasses) {
        int k = poisson(rng, config.rate(c, year));
        for (int i = 0; i < k; ++i) special.push_back(Block{BlockKind::Planted, RiskSet{c}, planted_sentence(rng, c)});
      }
      if (config.multi_label_fraction > 0.0) {
        std::vector<Block> merged;
        for (std::size_t i = 0; i < special.size(); ++i) {
          if (i + 1 < special.size() && special[i].classes.bits() != special[i + 1].classes.bits() &&
              bernoulli(rng, config.multi_label_fraction)) {
            merged.push_back(Block{BlockKind::Planted, special[i].classes | special[i + 1].classes,
                                   special[i].text + " " + special[i + 1].text});
            ++i;
          } else {
            merged.push_back(std::move(special[i]));
          }
        }
        special = std::move(merged);
      }
      int hard = poisson(rng, config.hard_negative_rate);
      for (int i = 0; i < hard; ++i) special.push_back(Block{BlockKind::HardNegative, {}, hard_negative_sentence(rng)});

      const auto pages = static_cast<std::size_t>(config.pages_per_report);
      std::vector<std::vector<Block>> page_blocks(pages);
      for (std::size_t p = 0; p < pages; ++p)
        for (int f = 0; f < config.filler_per_page; ++f)
          page_blocks[p].push_back(Block{BlockKind::Filler, {}, filler_sentence(rng, 8 + static_cast<int>(pick(rng, 8)))});
      for (Block& b : special) {
        auto& blocks = page_blocks[pick(rng, pages)];
        blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(pick(rng, blocks.size() + 1)), std::move(b));
      }

      std::vector<std::string> filler_ids;
      for (std::size_t p = 0; p < pages; ++p) {
        Page page;
        page.number = static_cast<int>(p + 1);
        // Running header: below the paragraph token minimum, so dropped.
        page.text = "Annual report " + std::to_string(year) + "\n\n";
        int index = 0;
        for (const Block& b : page_blocks[p]) {
          page.text += wrap(b.text);
          page.text += "\n\n";
          std::string pid = make_paragraph_id(report.meta.report_id, page.number, index++);
          if (b.kind == BlockKind::Planted) {
            labels.push_back(LabelRecord{pid, b.classes, false, std::string(kCoder), split[ci]});
            for (RiskClass c : b.classes.members()) out.planted.push_back(MentionRecord{report.meta.report_id, pid, c});
          } else if (b.kind == BlockKind::HardNegative) {
            labels.push_back(LabelRecord{pid, {}, true, std::string(kCoder), split[ci]});
          } else {
            filler_ids.push_back(std::move(pid));
          }
        }
        page.text += std::to_string(page.number);  // page-number furniture
        report.pages.push_back(std::move(page));
      }
      int negatives = std::min<int>(poisson(rng, config.labeled_negative_rate), static_cast<int>(filler_ids.size()));
      for (int i = 0; i < negatives; ++i) {
        std::size_t j = static_cast<std::size_t>(i) + pick(rng, filler_ids.size() - static_cast<std::size_t>(i));
        std::swap(filler_ids[static_cast<std::size_t>(i)], filler_ids[j]);
        labels.push_back(LabelRecord{filler_ids[static_cast<std::size_t>(i)], {}, false, std::string(kCoder), split[ci]});
      }
      out.corpus.add(std::move(report));
    }
  }
  std::sort(labels.begin(), labels.end(),
            [](const LabelRecord& a, const LabelRecord& b) { return a.paragraph_id < b.paragraph_id; });
  out.labels = LabelSet(std::move(labels));
  return out;
}

}  // namespace riskminer

#endif  // RISKMINER_SYNTH_HPP
