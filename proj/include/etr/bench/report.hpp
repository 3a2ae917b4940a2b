// Per-group percentages, within-group contrasts and between-group tests.

#pragma once

#include <string>
#include <vector>

#include "etr/bench/score.hpp"
#include "etr/bench/wilcoxon.hpp"

namespace etr::bench {

enum class Measure {
  kCorrectProduced,
  kCorrectEndorsed,
  kCorrectBoth,
  kEtrProduced,
  kEtrEndorsed,
  kEtrEither,
  kFallacyProduced,
  kFallacyEndorsed,
  kFallacyEither,
};

inline constexpr Measure kAllMeasures[] = {
    Measure::kCorrectProduced, Measure::kCorrectEndorsed, Measure::kCorrectBoth,
    Measure::kEtrProduced,     Measure::kEtrEndorsed,     Measure::kEtrEither,
    Measure::kFallacyProduced, Measure::kFallacyEndorsed, Measure::kFallacyEither};

std::string_view ToString(Measure m);   // machine name, e.g. "correct_produced"
std::string_view Caption(Measure m);    // table row, e.g. "Correct answer produced"

// nullopt when the record lacks the condition(s) the measure needs.
std::optional<bool> Value(const ScoreRecord& r, Measure m);

struct Fraction {
  std::size_t num = 0;
  std::size_t den = 0;
  double value() const { return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0; }
};

struct GroupSummary {
  std::string group;
  std::vector<Fraction> measures;  // indexed like kAllMeasures
  std::size_t items = 0;
  std::size_t needs_review = 0;
};

struct Contrast {
  std::string group;
  Measure a, b;
  WilcoxonResult test;
};

struct PairwiseTest {
  Measure measure;
  std::string group_a, group_b;
  std::size_t paired = 0;
  WilcoxonResult test;
};

struct Report {
  std::vector<GroupSummary> groups;   // sorted by group name
  std::vector<Contrast> contrasts;    // the three production-vs-endorsement pairs per group
  std::vector<PairwiseTest> pairwise; // every measure for every pair of groups
};

Report Aggregate(const std::vector<ScoreRecord>& rs, ZeroMethod zeros = ZeroMethod::kDiscard);

// Whole percents for display.
std::string RenderText(const Report& r);
// One JSON object per line with exact numerators and denominators.
std::string RenderJsonl(const Report& r);

}  // namespace etr::bench
