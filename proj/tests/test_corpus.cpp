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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>
#include <string>

#include "riskminer/corpus.hpp"
#include "riskminer/labels.hpp"
#include "support.hpp"

using namespace riskminer;

namespace {

std::string record(const std::string& id, const std::string& company, const std::string& country, int year,
                   const std::string& pages = R"([{"number":1,"text":"a"},{"number":2,"text":""}])") {
  return R"({"report_id":")" + id + R"(","company_id":")" + company + R"(","company_name":"X","country":")" + country +
         R"(","industry":"Energy","year":)" + std::to_string(year) + R"(,"pages":)" + pages + "}";
}

std::size_t error_line(const std::string& text) {
  try {
    parse_corpus(text);
  } catch (const ValidationError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Corpus, ParsesMinimalReport) {
  Corpus c = parse_corpus(record("r1", "c1", "DE", 2019) + "\n");
  ASSERT_EQ(c.size(), 1u);
  const Report& r = c.reports().front();
  EXPECT_EQ(r.meta.report_id, "r1");
  ASSERT_EQ(r.pages.size(), 2u);
  EXPECT_EQ(r.pages[0].number, 1);
  EXPECT_EQ(r.pages[1].number, 2);
  EXPECT_EQ(r.pages[1].text, "");
}

TEST(Corpus, DuplicateReportIdCitesSecondLine) {
  std::ostringstream s;
  for (int line = 1; line <= 7; ++line)
    s << record(line == 7 ? "r3" : "r" + std::to_string(line), "c", "DE", 2019) << "\n";
  EXPECT_EQ(error_line(s.str()), 7u);
}

TEST(Corpus, RejectsInvalidFields) {
  EXPECT_EQ(error_line(record("r", "c", "de", 2019)), 1u);
  EXPECT_EQ(error_line(record("r", "c", "DEU", 2019)), 1u);
  EXPECT_EQ(error_line(record("r", "c", "DE", 1989)), 1u);
  EXPECT_EQ(error_line(record("r", "c", "DE", 2101)), 1u);
  EXPECT_EQ(error_line("\n" + record("r", "c", "DE", 2000, R"([{"number":2,"text":""},{"number":2,"text":""}])")), 2u);
  EXPECT_EQ(error_line(record("r", "c", "DE", 2000, R"([{"number":0,"text":""}])")), 1u);
  EXPECT_EQ(error_line("{not json"), 1u);
  EXPECT_EQ(error_line(R"({"report_id":"r"})"), 1u);
}

TEST(Corpus, AcceptsBoundaryYears) {
  EXPECT_EQ(parse_corpus(record("a", "c", "DE", 1990) + "\n" + record("b", "c", "DE", 2100)).size(), 2u);
}

TEST(Corpus, RoundTripIsIdentical) {
  Corpus c;
  c.add(rmtest::make_report("r1", "c1", 2019, {"Line one\n\nLine \"two\" ü", ""}));
  c.add(rmtest::make_report("r:2", "c2", 2020, {"x"}, "FR", "Utilities"));
  std::string text = serialize_corpus(c);
  Corpus back = parse_corpus(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(serialize_corpus(back), text);

  rmtest::TempDir dir;
  write_corpus(c, dir / "c.jsonl");
  EXPECT_EQ(load_corpus(dir / "c.jsonl"), c);
}

TEST(ParagraphId, ParseInvertsMake) {
  std::mt19937_64 rng(3);
  const std::string alphabet = "ab:-_9Z";
  for (int i = 0; i < 2000; ++i) {
    std::string rid;
    int len = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) rid += alphabet[rng() % alphabet.size()];
    int page = 1 + static_cast<int>(rng() % 500);
    int index = static_cast<int>(rng() % 40);
    auto key = parse_paragraph_id(make_paragraph_id(rid, page, index));
    ASSERT_TRUE(key.has_value()) << rid;
    EXPECT_EQ(key->report_id, rid);
    EXPECT_EQ(key->page_number, page);
    EXPECT_EQ(key->index_on_page, index);
  }
}

TEST(ParagraphId, RejectsMalformed) {
  for (const char* bad : {"", "r", "r:1", ":1:0", "r:0:0", "r:01:0", "r:1:-1", "r:1:x", "r:1:", "r::0"})
    EXPECT_FALSE(parse_paragraph_id(bad).has_value()) << bad;
}

TEST(RiskClasses, GroupsPartitionTheFiveClasses) {
  int physical = 0, transition = 0;
  for (RiskClass c : kAllRiskClasses) (group_of(c) == RiskGroup::Physical ? physical : transition)++;
  EXPECT_EQ(physical, 2);
  EXPECT_EQ(transition, 3);
  EXPECT_EQ(group_of(RiskClass::Acute), RiskGroup::Physical);
  EXPECT_EQ(group_of(RiskClass::Chronic), RiskGroup::Physical);
  for (RiskClass c : kAllRiskClasses) EXPECT_EQ(parse_risk_class(to_string(c)), c);
}

TEST(RiskSet, ParseAndFormat) {
  RiskSet s = parse_risk_set("policy_legal;acute");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(RiskClass::Acute));
  EXPECT_EQ(format_risk_set(s), "acute;policy_legal");
  EXPECT_TRUE(parse_risk_set("").empty());
  EXPECT_THROW(parse_risk_set("acute;flood"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Labels

TEST(Labels, MultiLabelRecord) {
  LabelSet l = parse_labels("paragraph_id,classes,hard_negative,coder_id,split\nr1:1:0,acute;policy_legal,false,a,train\n",
                            nullptr);
  ASSERT_EQ(l.records().size(), 1u);
  EXPECT_EQ(l.records()[0].classes, (RiskSet{RiskClass::Acute, RiskClass::PolicyLegal}));
  EXPECT_EQ(serialize_labels(l), "paragraph_id,classes,hard_negative,coder_id,split\nr1:1:0,acute;policy_legal,false,a,train\n");
}

TEST(Labels, Errors) {
  const std::string h = "paragraph_id,classes,hard_negative,coder_id,split\n";
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_labels(text, nullptr);
    } catch (const ValidationError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of(h + "r:1:0,acute,true,a,train\n"), 2u);
  EXPECT_EQ(line_of(h + "r:1:0,,false,a,train\nr:1:1,storm,false,a,train\n"), 3u);
  EXPECT_EQ(line_of(h + "r:1:0,,maybe,a,train\n"), 2u);
  EXPECT_EQ(line_of(h + "r:1:0,,false,a,dev\n"), 2u);
  EXPECT_EQ(line_of(h + "r:1:0,,false,a,train\nr:1:0,acute,false,a,val\n"), 3u);
  EXPECT_EQ(line_of(h + "bad,,false,a,train\n"), 2u);
  EXPECT_EQ(line_of("id,classes\n"), 1u);
  // The same paragraph from two coders is fine.
  EXPECT_NO_THROW(parse_labels(h + "r:1:0,,false,a,train\nr:1:0,acute,false,b,train\n", nullptr));
}

TEST(Labels, UnknownParagraphAgainstCorpus) {
  Corpus c;
  c.add(rmtest::make_report("r", "c", 2019, {"one two three four five six"}));
  ParagraphIndex index(c, SegmenterConfig{});
  const std::string h = "paragraph_id,classes,hard_negative,coder_id,split\n";
  EXPECT_NO_THROW(parse_labels(h + "r:1:0,acute,false,a,train\n", &index));
  EXPECT_THROW(parse_labels(h + "r:1:1,acute,false,a,train\n", &index), ValidationError);
}

// Per-class counts against a tally of the raw file; class sizes as in the
// published training split.
TEST(Labels, CountsMatchRawTally) {
  const std::map<std::string, int> wanted = {
      {"acute", 133}, {"chronic", 54}, {"policy_legal", 43}, {"tech_market", 37}, {"reputation", 23}};
  std::mt19937_64 rng(11);
  std::ostringstream s;
  s << "paragraph_id,classes,hard_negative,coder_id,split\n";
  int next = 0;
  for (const auto& [name, n] : wanted)
    for (int i = 0; i < n; ++i) s << "r:1:" << next++ << "," << name << ",false,a,train\n";
  for (int i = 0; i < 40; ++i) s << "r:2:" << i << ",," << (i % 4 == 0 ? "true" : "false") << ",a,train\n";
  for (int i = 0; i < 10; ++i) s << "q:1:" << i << ",acute,false,a,val\n";
  const std::string text = s.str();

  LabelSet labels = parse_labels(text, nullptr);
  ClassCounts c = labels.counts(Split::Train);

  std::map<std::string, int> tally;
  int negatives = 0, hard = 0;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    while (f.size() < 5) f.insert(f.begin() + 1, "");
    if (f[4] != "train") continue;
    if (f[1].empty()) {
      ++negatives;
      hard += f[2] == "true";
    } else {
      ++tally[f[1]];
    }
  }
  EXPECT_EQ(tally, wanted);
  for (RiskClass rc : kAllRiskClasses)
    EXPECT_EQ(c.per_class[static_cast<int>(rc)], static_cast<std::size_t>(tally[std::string(to_string(rc))]));
  EXPECT_EQ(c.per_class[0], 133u);
  EXPECT_EQ(c.per_class[4], 23u);
  EXPECT_EQ(c.unique_positive, 290u);
  EXPECT_EQ(c.negative, static_cast<std::size_t>(negatives));
  EXPECT_EQ(c.hard_negative, static_cast<std::size_t>(hard));
  EXPECT_EQ(labels.counts(Split::Val).per_class[0], 10u);
}

TEST(Labels, GoldPrefersSmallestCoderUnlessChosen) {
  LabelSet l = parse_labels(
      "paragraph_id,classes,hard_negative,coder_id,split\nr:1:0,acute,false,zed,test\nr:1:0,chronic,false,amy,test\n",
      nullptr);
  EXPECT_EQ(l.gold(Split::Test).at("r:1:0").classes, RiskSet{RiskClass::Chronic});
  EXPECT_EQ(l.gold(Split::Test, "zed").at("r:1:0").classes, RiskSet{RiskClass::Acute});
}

TEST(SplitDisjointness, Examples) {
  Corpus c;
  for (const char* co : {"A", "B", "C"}) c.add(rmtest::make_report(std::string("r") + co, co, 2019, {"x"}));
  auto labels = [](const std::string& rows) {
    return parse_labels("paragraph_id,classes,hard_negative,coder_id,split\n" + rows, nullptr);
  };
  EXPECT_TRUE(check_split_disjointness(labels("rA:1:0,,false,a,val\nrB:1:0,,false,a,val\nrC:1:0,,false,a,test\n"), c).ok());
  SplitCheck bad =
      check_split_disjointness(labels("rA:1:0,,false,a,val\nrB:1:0,,false,a,val\nrB:1:1,,false,a,test\nrC:1:0,,false,a,test\n"), c);
  EXPECT_EQ(bad.shared_companies, std::vector<std::string>{"B"});
  EXPECT_TRUE(check_split_disjointness(LabelSet{}, c).ok());
}
