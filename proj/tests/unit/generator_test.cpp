#include <gtest/gtest.h>

#include <set>

#include "etr/error.hpp"
#include "etr/generator.hpp"

namespace etr {
namespace {

std::string Dump(const std::vector<GeneratedInstance>& gs) {
  std::string out;
  for (const auto& g : gs) out += ToJsonLine(g) + "\n";
  return out;
}

TEST(Generate, SameSeedSameBytes) {
  for (Family f : {Family::kIllusory, Family::kModusPonens, Family::kConjunctionRanking, Family::kDecisionFraming}) {
    GenConfig cfg;
    cfg.family = f;
    cfg.count = 50;
    cfg.seed = 7;
    cfg.order = Order::kBoth;
    EXPECT_EQ(Dump(Generate(cfg)), Dump(Generate(cfg))) << ToString(f);
    GenConfig other = cfg;
    other.seed = 8;
    EXPECT_NE(Dump(Generate(cfg)), Dump(Generate(other))) << ToString(f);
  }
}

TEST(Generate, RelabelReproducesRecords) {
  for (Family f : {Family::kIllusory, Family::kModusPonens, Family::kConjunctionRanking, Family::kDecisionFraming}) {
    GenConfig cfg;
    cfg.family = f;
    cfg.count = 100;
    cfg.disjuncts = 3;
    cfg.order = Order::kBoth;
    for (const auto& g : Generate(cfg)) {
      const std::string line = ToJsonLine(g);
      GeneratedInstance back = FromJsonLine(line);
      EXPECT_EQ(Label(back.problem), g.prediction);
      back.prediction = Label(back.problem);
      EXPECT_EQ(ToJsonLine(back), line);
    }
  }
}

TEST(Generate, FirstIllusoryLooksLikeTheAceQueenProblem) {
  GenConfig cfg;
  const auto gs = Generate(cfg);
  ASSERT_EQ(gs.size(), 1u);
  const Problem& p = gs[0].problem;
  ASSERT_EQ(p.premises.size(), 2u);
  const auto* disj = std::get_if<Disj>(&p.premises[0]);
  const auto* cat = std::get_if<Conj>(&p.premises[1]);
  ASSERT_TRUE(disj && cat);
  ASSERT_EQ(disj->disjuncts.size(), 2u);
  for (const Conj& c : disj->disjuncts) EXPECT_EQ(c.literals.size(), 2u);
  ASSERT_EQ(cat->literals.size(), 1u);
  const Conj& chosen = disj->disjuncts[0].literals[0] == cat->literals[0] ||
                               disj->disjuncts[0].literals[1] == cat->literals[0]
                           ? disj->disjuncts[0]
                           : disj->disjuncts[1];
  Literal other = chosen.literals[0] == cat->literals[0] ? chosen.literals[1] : chosen.literals[0];
  EXPECT_EQ(gs[0].prediction.etr_prediction, ToDsl(other));
  EXPECT_TRUE(gs[0].prediction.fallacy);
}

TEST(Generate, IllusoryQuestionFirstIsFallacious) {
  GenConfig cfg;
  cfg.count = 1000;
  std::size_t fallacies = 0;
  for (const auto& g : Generate(cfg)) fallacies += g.prediction.fallacy;
  EXPECT_GE(fallacies, 950u);
}

TEST(Generate, OrderPairs) {
  GenConfig cfg;
  cfg.count = 300;
  cfg.order = Order::kBoth;
  cfg.disjuncts = 4;
  cfg.atoms_per_conjunct = 3;
  const auto gs = Generate(cfg);
  ASSERT_EQ(gs.size(), 600u);
  for (std::size_t i = 0; i < gs.size(); i += 2) {
    EXPECT_EQ(gs[i].group, gs[i + 1].group);
    EXPECT_EQ(gs[i].order, "question-first");
    EXPECT_EQ(gs[i + 1].order, "answer-first");
    EXPECT_FALSE(gs[i + 1].prediction.fallacy);
    EXPECT_NE(gs[i + 1].prediction.etr_prediction, gs[i].prediction.etr_prediction);
  }
}

TEST(Generate, UniqueIds) {
  for (Family f : {Family::kIllusory, Family::kModusPonens, Family::kConjunctionRanking, Family::kDecisionFraming}) {
    GenConfig cfg;
    cfg.family = f;
    cfg.count = 200;
    cfg.order = Order::kBoth;
    std::set<std::string> ids;
    for (const auto& g : Generate(cfg)) EXPECT_TRUE(ids.insert(g.problem.id).second) << g.problem.id;
  }
}

TEST(Generate, ConfigErrors) {
  GenConfig cfg;
  cfg.count = 0;
  EXPECT_THROW(Validate(cfg), ConfigError);
  cfg = {};
  cfg.disjuncts = 5;
  EXPECT_THROW(Validate(cfg), ConfigError);
  cfg = {};
  cfg.atoms_per_conjunct = 4;
  EXPECT_THROW(Validate(cfg), ConfigError);
  cfg = {};
  cfg.vocabulary = {"a", "b", "c"};
  EXPECT_THROW(Generate(cfg), ConfigError);
  cfg = {};
  cfg.vocabulary = {"a", "a", "b", "c", "d", "e"};
  EXPECT_THROW(Validate(cfg), ConfigError);
}

TEST(Label, Examples) {
  auto mp = ParseProblem("problem mp\nkind: inference\npremise: if ace then king\npremise: ace\n");
  const PredictionRecord r = Label(mp);
  EXPECT_EQ(r.etr_prediction, "king");
  EXPECT_EQ(r.classical_label, "valid");
  EXPECT_FALSE(r.fallacy);
  EXPECT_EQ(r.equilibrium, std::optional<std::string>("king"));
}

}  // namespace
}  // namespace etr
