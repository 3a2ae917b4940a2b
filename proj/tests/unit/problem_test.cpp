#include <gtest/gtest.h>

#include "etr/corpus.hpp"
#include "etr/error.hpp"
#include "etr/generator.hpp"
#include "etr/problem.hpp"
#include "helpers.hpp"

namespace etr {
namespace {

using testing::S;

constexpr const char* kIllusory =
    "problem illusory-1\n"
    "kind: inference\n"
    "premise: (ace & queen) | (king & jack)\n"
    "premise: ace\n"
    "ask: production\n";

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

TEST(Dsl, ParsesInference) {
  Problem p = ParseProblem(kIllusory);
  EXPECT_EQ(p.id, "illusory-1");
  EXPECT_EQ(p.kind, ProblemKind::kInference);
  ASSERT_EQ(p.premises.size(), 2u);
  EXPECT_FALSE(p.query_target.has_value());
  EXPECT_EQ(Predict(p).conclusion, S("queen"));
}

TEST(Dsl, ParsesQuery) {
  Problem p = ParseProblem("problem q\nkind: inference\npremise: a | b\nask: query queen\n");
  EXPECT_EQ(p.query_target, std::optional<std::string>("queen"));
}

struct BadDoc {
  const char* text;
  std::size_t line, column;
};

TEST(Dsl, ErrorsCarryLineAndColumn) {
  const BadDoc cases[] = {
      {"problem x\nkind: inference\npremise: a |\n", 3, 13},
      {"problem x\nkind: inference\npremise: a && b\n", 3, 13},
      {"problem x\nkind: magic\n", 2, 7},
      {"problem x\nkind: inference\ncards: E 4\n", 3, 1},
      {"problem x\npremise: a\n", 2, 1},
  };
  for (const BadDoc& c : cases) {
    try {
      ParseProblem(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.line(), c.line) << e.what();
      EXPECT_EQ(e.column(), c.column) << e.what();
    }
  }
}

TEST(Dsl, InconsistentLiteralRejected) {
  EXPECT_THROW(ParseProblem("problem x\nkind: inference\npremise: a & ~a\n"), SyntaxError);
}

TEST(Dsl, RoundTripsCorpus) {
  const std::string once = Serialize(Corpus());
  const auto reparsed = ParseProblems(once);
  EXPECT_EQ(reparsed, Corpus());
  EXPECT_EQ(Serialize(reparsed), once);
}

TEST(Dsl, RoundTripsGenerated) {
  for (Family f : {Family::kIllusory, Family::kModusPonens, Family::kConjunctionRanking, Family::kDecisionFraming}) {
    GenConfig cfg;
    cfg.family = f;
    cfg.count = 20;
    cfg.order = Order::kBoth;
    for (const auto& g : Generate(cfg)) {
      const std::string s = Serialize(g.problem);
      EXPECT_EQ(Serialize(ParseProblem(s)), s);
    }
  }
}

TEST(Render, Conditions) {
  Problem p = ParseProblem(kIllusory);
  EXPECT_TRUE(EndsWith(RenderPrompt(p, Condition::kProduction, Template::kNone), "What, if anything, follows?"));
  EXPECT_EQ(RenderPrompt(p, Condition::kProduction, Template::kEtr)
                .rfind("Answer the following question according to this procedure:", 0),
            0u);
  EXPECT_TRUE(EndsWith(RenderPrompt(p, Condition::kQuery, Template::kNone), "Does it follow that there is a queen?"));
}

TEST(Render, Templates) {
  Problem p = ParseProblem(kIllusory);
  const std::string base = RenderPrompt(p, Condition::kProduction, Template::kNone);
  EXPECT_EQ(RenderPrompt(p, Condition::kProduction, Template::kControl),
            "Reason step-by-step for the following problem. " + base);
  EXPECT_NE(RenderPrompt(p, Condition::kProduction, Template::kEtr).find("turn each premise into a question"),
            std::string::npos);
}

TEST(Render, QueryWithoutTargetFails) {
  Problem p = ParseProblem("problem x\nkind: inference\npremise: a | b\nask: production\n");
  EXPECT_THROW(RenderPrompt(p, Condition::kQuery, Template::kNone), Error);
}

TEST(Render, GlossesAndLabels) {
  const Problem* jane = FindProblem(Corpus(), "jane-mark");
  ASSERT_NE(jane, nullptr);
  EXPECT_NE(RenderPrompt(*jane, Condition::kQuery, Template::kNone).find("Does it follow that Jane is looking at the TV?"),
            std::string::npos);
}

TEST(Corpus, ExpectationsMatchFreshRuns) {
  ASSERT_GE(Corpus().size(), 10u);
  for (const Problem& p : Corpus()) {
    ASSERT_TRUE(p.expected.has_value()) << p.id;
    EXPECT_EQ(Predict(p).text, *p.expected) << p.id;
  }
}

TEST(Corpus, FallacyFlagsMatchOracles) {
  const std::map<std::string, bool> fallacious{
      {"illusory-ace-queen", true},   {"illusory-ace-queen-reversed", false},
      {"modus-ponens", false},        {"jane-mark", true},
      {"king-ten", true},             {"king-ten-reversed", false},
      {"syllogism-blue-square", true}, {"wason-E4", true},
      {"linda", true},                {"math-genius", true},
      {"economist", true},            {"video-opportunity-cost", true},
  };
  for (const Problem& p : Corpus()) {
    const auto it = fallacious.find(p.id);
    ASSERT_NE(it, fallacious.end()) << p.id;
    EXPECT_EQ(Label(p).fallacy, it->second) << p.id;
    EXPECT_EQ(!Classify(p, Predict(p)).sanctioned, it->second) << p.id;
  }
}

TEST(Corpus, WorkedExamples) {
  const Problem* ill = FindProblem(Corpus(), "illusory-ace-queen");
  ASSERT_NE(ill, nullptr);
  EXPECT_EQ(Predict(*ill).conclusion, S("queen"));
  EXPECT_EQ(Classify(*ill, Predict(*ill)).label, "invalid");

  const Problem* wason = FindProblem(Corpus(), "wason-E4");
  ASSERT_NE(wason, nullptr);
  const Prediction wp = Predict(*wason);
  EXPECT_EQ(wp.selected, (std::vector<std::string>{"4", "E"}));
  EXPECT_EQ(Classify(*wason, wp).correct_cards, (std::vector<std::string>{"5", "E"}));

  const Problem* jane = FindProblem(Corpus(), "jane-mark");
  ASSERT_NE(jane, nullptr);
  EXPECT_EQ(Phrase(*jane, Predict(*jane).conclusion), "Jane is looking at the TV");
}

TEST(Corpus, EveryCellRenders) {
  for (const Problem& p : Corpus())
    for (const std::string& part : PromptParts(p))
      for (Template t : {Template::kNone, Template::kControl, Template::kEtr}) {
        EXPECT_FALSE(RenderPrompt(p, Condition::kProduction, t, part).empty());
        if (p.query_target || p.kind != ProblemKind::kInference)
          EXPECT_FALSE(RenderPrompt(p, Condition::kQuery, t, part).empty()) << p.id;
      }
}

}  // namespace
}  // namespace etr
