#include <gtest/gtest.h>

#include "etr/error.hpp"
#include "etr/grounding.hpp"
#include "etr/oracles.hpp"
#include "helpers.hpp"

namespace etr {
namespace {

using testing::Q;
using testing::S;

TEST(Ground, SyllogismPremises) {
  Grounding g = Ground({Some("blue", "textured"), All("square", "blue")});
  ASSERT_EQ(g.premises.size(), 2u);
  EXPECT_EQ(std::get<AsAnswer>(g.premises[0].interp).state, S("blue@x1 & textured@x1"));
  EXPECT_EQ(std::get<AsQuestion>(g.premises[1].interp).question, Q({"square@x1 & blue@x1", "~square@x1"}));
  EXPECT_EQ(g.individuals, std::vector<std::string>{"x1"});
}

TEST(Ground, DuplicateLiteralCollapses) {
  Grounding g = Ground({Some("p", "p")});
  ASSERT_EQ(g.premises.size(), 1u);
  EXPECT_EQ(std::get<AsAnswer>(g.premises[0].interp).state, S("p@x1"));
}

TEST(Ground, VacuousUniversalWarns) {
  Grounding g = Ground({All("p", "q")});
  EXPECT_TRUE(g.premises.empty());
  EXPECT_EQ(g.warnings.size(), 1u);
}

TEST(Ground, Deterministic) {
  std::vector<QuantPremise> ps{Some("a", "b"), All("b", "c"), Some("c", "d")};
  Grounding a = Ground(ps), b = Ground(ps);
  ASSERT_EQ(a.premises.size(), b.premises.size());
  for (std::size_t i = 0; i < a.premises.size(); ++i) EXPECT_EQ(a.premises[i].interp, b.premises[i].interp);
  EXPECT_EQ(a.individuals, b.individuals);
}

TEST(Ground, RelationalRejected) {
  EXPECT_THROW(ParseQuantPremise("some loves(x) are blue"), UnsupportedPremise);
  EXPECT_THROW(ParseQuantPremise("most p are q"), SyntaxError);
}

TEST(Readback, SyllogismIsFallacious) {
  GroundedRun r = RunQuantified({Some("blue", "textured"), All("square", "blue")});
  EXPECT_EQ(r.readbacks, std::vector<std::string>{"some square are textured"});
  EXPECT_FALSE(MonadicEntails({Some("blue", "textured"), All("square", "blue")}, Some("square", "textured")));
}

TEST(Readback, ValidStyle) {
  std::vector<QuantPremise> ps{All("p", "q"), Some("p", "r")};
  GroundedRun r = RunQuantified(ps);
  ASSERT_FALSE(r.readbacks.empty());
  for (const std::string& rb : r.readbacks) EXPECT_TRUE(MonadicEntails(ps, ParseQuantPremise(rb))) << rb;
}

TEST(Readback, EmptyRegistry) {
  Grounding g;
  EXPECT_TRUE(ExistentialReadback(Q({"a"}), g, {}).empty());
}

}  // namespace
}  // namespace etr
