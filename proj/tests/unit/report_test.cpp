#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>
#include <random>
#include <sstream>

#include "etr/bench/report.hpp"

namespace etr::bench {
namespace {

ScoreRecord Rec(const std::string& problem, const std::string& group, bool correct) {
  ScoreRecord r;
  r.problem = problem;
  r.tmpl = "none";
  r.group = group;
  r.has_production = r.has_query = true;
  r.correct_produced = correct;
  return r;
}

TEST(Report, FiftyPercent) {
  std::vector<ScoreRecord> rs;
  for (int i = 0; i < 10; ++i) rs.push_back(Rec("p" + std::to_string(i), "g", i < 5));
  Report rep = Aggregate(rs);
  ASSERT_EQ(rep.groups.size(), 1u);
  EXPECT_EQ(rep.groups[0].measures[0].num, 5u);
  EXPECT_EQ(rep.groups[0].measures[0].den, 10u);
  EXPECT_NE(RenderText(rep).find("50%"), std::string::npos);
}

TEST(Report, IdenticalGroupsHavePOne) {
  std::vector<ScoreRecord> rs;
  for (int i = 0; i < 8; ++i)
    for (const char* g : {"a", "b"}) rs.push_back(Rec("p" + std::to_string(i), g, i % 3 == 0));
  Report rep = Aggregate(rs);
  ASSERT_EQ(rep.pairwise.size(), std::size(kAllMeasures));
  for (const PairwiseTest& t : rep.pairwise) EXPECT_EQ(t.test.p, 1.0);
}

TEST(Report, ContrastsPerGroup) {
  std::vector<ScoreRecord> rs{Rec("p", "a", true), Rec("p", "b", false)};
  EXPECT_EQ(Aggregate(rs).contrasts.size(), 6u);
}

// Recompute every displayed percentage straight from the records.
TEST(Report, PercentagesMatchRecords) {
  std::mt19937 rng(2);
  std::vector<ScoreRecord> rs;
  for (int i = 0; i < 37; ++i)
    for (const char* g : {"control", "etr", "none"}) {
      ScoreRecord r;
      r.problem = "p" + std::to_string(i);
      r.tmpl = g;
      r.group = g;
      r.fallacious = rng() % 2;
      r.has_production = rng() % 5 != 0;
      r.has_query = rng() % 5 != 0;
      r.correct_produced = r.has_production && rng() % 2;
      r.etr_produced = r.has_production && rng() % 2;
      r.correct_endorsed = r.has_query && rng() % 2;
      r.etr_endorsed = r.has_query && rng() % 2;
      r.fallacy_produced = r.etr_produced && r.fallacious;
      r.fallacy_endorsed = r.etr_endorsed && r.fallacious;
      rs.push_back(r);
    }
  const Report rep = Aggregate(rs);
  const std::string jsonl = RenderJsonl(rep);
  const std::string text = RenderText(rep);

  std::map<std::pair<std::string, std::string>, std::pair<long, long>> from_json;
  std::istringstream in(jsonl);
  for (std::string line; std::getline(in, line);) {
    auto j = nlohmann::json::parse(line);
    if (j["type"] == "measure") from_json[{j["group"], j["measure"]}] = {j["num"], j["den"]};
  }
  for (const char* g : {"control", "etr", "none"}) {
    for (Measure m : kAllMeasures) {
      long num = 0, den = 0;
      for (const ScoreRecord& r : rs) {
        if (r.group != g) continue;
        bool ok = false, v = false;
        switch (m) {
          case Measure::kCorrectProduced: ok = r.has_production, v = r.correct_produced; break;
          case Measure::kCorrectEndorsed: ok = r.has_query, v = r.correct_endorsed; break;
          case Measure::kCorrectBoth: ok = r.has_production && r.has_query, v = r.correct_produced && r.correct_endorsed; break;
          case Measure::kEtrProduced: ok = r.has_production, v = r.etr_produced; break;
          case Measure::kEtrEndorsed: ok = r.has_query, v = r.etr_endorsed; break;
          case Measure::kEtrEither: ok = r.has_production && r.has_query, v = r.etr_produced || r.etr_endorsed; break;
          case Measure::kFallacyProduced: ok = r.has_production, v = r.fallacy_produced; break;
          case Measure::kFallacyEndorsed: ok = r.has_query, v = r.fallacy_endorsed; break;
          case Measure::kFallacyEither: ok = r.has_production && r.has_query, v = r.fallacy_produced || r.fallacy_endorsed; break;
        }
        den += ok;
        num += ok && v;
      }
      const auto got = from_json.at({g, std::string(ToString(m))});
      EXPECT_EQ(got.first, num) << g << " " << ToString(m);
      EXPECT_EQ(got.second, den) << g << " " << ToString(m);
    }
  }
  // the text table carries the same values rounded
  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  for (Measure m : kAllMeasures) {
    std::string row;
    std::getline(lines, row);
    ASSERT_EQ(row.rfind(std::string(Caption(m)), 0), 0u) << row;
    std::istringstream cells(row.substr(38));
    for (const char* g : {"control", "etr", "none"}) {
      std::string cell;
      cells >> cell;
      const auto [num, den] = from_json.at({g, std::string(ToString(m))});
      const long pct = std::lround(100.0 * num / den);
      EXPECT_EQ(cell, std::to_string(pct) + "%") << g << " " << ToString(m);
    }
  }
}

}  // namespace
}  // namespace etr::bench
