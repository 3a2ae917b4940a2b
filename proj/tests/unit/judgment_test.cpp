#include <gtest/gtest.h>

#include <random>

#include "etr/error.hpp"
#include "etr/judgment.hpp"
#include "helpers.hpp"

namespace etr {
namespace {

using testing::S;

std::vector<CardSpec> Cards(std::initializer_list<const char*> ts) {
  std::vector<CardSpec> out;
  for (const char* t : ts) out.push_back(CardSpec::FromToken(t));
  return out;
}

TEST(WasonPredicted, Examples) {
  const WasonRule rule{"E", "4"};
  EXPECT_EQ(WasonPredicted(Cards({"E", "C", "4", "5"}), rule), (std::vector<std::string>{"4", "E"}));
  EXPECT_TRUE(WasonPredicted(Cards({"K", "7"}), rule).empty());
  EXPECT_EQ(WasonPredicted(Cards({"E", "E"}), rule), (std::vector<std::string>{"E", "E"}));
}

TEST(WasonPredicted, DiffersFromCorrectOnFourAndFive) {
  const auto cards = Cards({"E", "C", "4", "5"});
  const WasonRule rule{"E", "4"};
  const auto pred = WasonPredicted(cards, rule), correct = WasonCorrect(cards, rule);
  std::vector<std::string> diff;
  for (const auto& c : cards) {
    const bool p = std::count(pred.begin(), pred.end(), c.visible) > 0;
    const bool k = std::count(correct.begin(), correct.end(), c.visible) > 0;
    if (p != k) diff.push_back(c.visible);
  }
  EXPECT_EQ(diff, (std::vector<std::string>{"4", "5"}));
}

TEST(Support, Examples) {
  const Congruence cong{{Atom("math-genius"), Atom("computer-scientist")}, {Atom("outdoorswoman"), Atom("climber")}};
  EXPECT_EQ(Support(S("math-genius & outdoorswoman"), S("computer-scientist & climber"), cong), 2u);
  EXPECT_EQ(Support(S("a & b"), S("c")), 0u);
  EXPECT_EQ(Support(S("a & b & c"), S("a & b & c")), 3u);
}

TEST(Rank, Linda) {
  const Congruence cong{{Atom("social-justice"), Atom("feminist")}};
  auto r = RankHypotheses(S("philosophy & social-justice"), {{"teller", S("teller")}, {"both", S("teller & feminist")}}, cong);
  EXPECT_GT(r.rank[1], r.rank[0]);
  EXPECT_EQ(CoherenceViolations(r).size(), 1u);
}

TEST(Rank, EmptyEvidenceTies) {
  auto r = RankHypotheses(State{}, {{"a", S("a")}, {"b", S("b")}, {"c", S("a & b")}});
  EXPECT_EQ(r.rank[0], r.rank[1]);
  EXPECT_EQ(r.rank[1], r.rank[2]);
}

TEST(Rank, StrictTopThenTie) {
  auto r = RankHypotheses(S("a & b & c"), {{"two", S("a & b")}, {"three", S("a & b & c")}, {"two2", S("b & c")}});
  EXPECT_GT(r.rank[1], r.rank[0]);
  EXPECT_EQ(r.rank[0], r.rank[2]);
}

TEST(Rank, FallacyExactlyWhenSupersetHasMoreSupport) {
  std::mt19937 rng(4);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  for (int i = 0; i < 300; ++i) {
    std::vector<Literal> ev, base;
    for (const auto& a : atoms) {
      if (rng() % 2) ev.push_back(Pos(a));
      if (rng() % 3 == 0) base.push_back(Pos(a));
    }
    std::vector<Literal> sup = base;
    sup.push_back(Pos(atoms[rng() % 4]));
    const State h1(base), h2(sup);
    if (h1 == h2) continue;
    auto r = RankHypotheses(State(ev), {{"h1", h1}, {"h2", h2}});
    EXPECT_EQ(!CoherenceViolations(r).empty(), Support(State(ev), h2) > Support(State(ev), h1));
  }
}

TEST(Choose, OpportunityCost) {
  DecisionQuestion d{{{"buy", S("fun")}, {"not-buy", State{}}}, S("fun"), {{"not-buy", S("fun")}}};
  EXPECT_EQ(Choose(d).chosen, std::optional<std::string>("buy"));
  ChoiceMode expanded;
  expanded.expanded = true;
  EXPECT_FALSE(Choose(d, expanded).chosen.has_value());
  EXPECT_EQ(Choose(d, expanded).tied, (std::vector<std::string>{"buy", "not-buy"}));
}

TEST(Choose, DecoyShiftsToDominatingOption) {
  ChoiceMode decoy;
  decoy.decoy_sensitive = true;
  DecisionQuestion two{{{"web-only", S("web & cheap")}, {"print-web", S("print & web")}}, S("web"), {}};
  EXPECT_FALSE(Choose(two, decoy).chosen.has_value());
  DecisionQuestion three = two;
  three.options.push_back({"print-only", S("print")});
  EXPECT_EQ(Choose(three, decoy).chosen, std::optional<std::string>("print-web"));
  EXPECT_FALSE(Choose(three).chosen.has_value());
}

TEST(Choose, DefaultModeMenuMonotone) {
  std::mt19937 rng(6);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  auto draw = [&] {
    std::vector<Literal> ls;
    for (const auto& a : atoms)
      if (rng() % 2) ls.push_back(Pos(a));
    return State(ls);
  };
  for (int i = 0; i < 200; ++i) {
    DecisionQuestion d{{{"x", draw()}, {"y", draw()}}, draw(), {}};
    const auto before = Choose(d).scores;
    d.options.push_back({"z", draw()});
    const auto after = Choose(d).scores;
    EXPECT_EQ(before.at("x"), after.at("x"));
    EXPECT_EQ(before.at("y"), after.at("y"));
  }
}

TEST(Choose, Errors) {
  EXPECT_THROW(Choose(DecisionQuestion{}), Error);
  DecisionQuestion dup{{{"x", State{}}, {"x", State{}}}, State{}, {}};
  EXPECT_THROW(Choose(dup), Error);
}

TEST(ChoiceMode, RoundTrip) {
  for (const char* s : {"default", "expanded", "decoy", "expanded+decoy"}) {
    auto m = ParseChoiceMode(s);
    ASSERT_TRUE(m.has_value()) << s;
    EXPECT_EQ(ToString(*m), s);
  }
  EXPECT_FALSE(ParseChoiceMode("greedy").has_value());
}

}  // namespace
}  // namespace etr
