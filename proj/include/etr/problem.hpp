// Problems: the line-oriented DSL, engine predictions and classical labels
// per problem kind, and prompt rendering for the two ask conditions.
//
// DSL, one directive per line ('#' starts a comment line):
//   problem <id>
//   kind: inference | quantified | selection | probability | decision
//   english: <text>                 english <menu>: <text>   (per framing)
//   premise: <expr>                 premise: some <p> are <q> | all <p> are <q>
//   cards: E C 4 5                  rule: if E then 4
//   evidence: <conj>                hyp <name>: <conj>        congruent: a -> b
//   menu <m>: opt <o>: <conj>       mode <m>: default|expanded|decoy|expanded+decoy
//   priorities: <conj>              expand <o>: <conj>
//   gloss <atom>: <text>            label <name>: <text>      label <m>/<o>: <text>
//   noun: <word>
//   ask: production | query <conj or quantified sentence>
//   expect: <canonical prediction>

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etr/erotetic.hpp"
#include "etr/grounding.hpp"
#include "etr/judgment.hpp"
#include "etr/oracles.hpp"

namespace etr {

enum class ProblemKind { kInference, kQuantified, kSelection, kProbability, kDecision };

std::string_view ToString(ProblemKind k);
std::optional<ProblemKind> ParseProblemKind(std::string_view s);

struct Menu {
  std::string name;
  std::vector<Option> options;
  ChoiceMode mode;
};

struct Problem {
  std::string id;
  ProblemKind kind = ProblemKind::kInference;
  std::optional<std::string> english;
  std::map<std::string, std::string> menu_english;
  std::map<std::string, std::string> glosses;  // atom -> phrase
  std::map<std::string, std::string> labels;   // hypothesis/option (or menu/option) -> phrase
  std::optional<std::string> noun;

  std::vector<Expr> premises;                 // inference
  std::vector<QuantPremise> quant_premises;   // quantified
  std::vector<std::string> cards;             // selection
  std::optional<WasonRule> rule;
  State evidence;                             // probability
  std::vector<Hypothesis> hypotheses;
  Congruence congruence;
  std::vector<Menu> menus;                    // decision
  State priorities;
  std::map<std::string, State> expansions;

  std::optional<std::string> query_target;  // set by "ask: query ..."
  std::optional<std::string> expected;      // "expect:" line

  bool operator==(const Problem&) const;
};

// Throws SyntaxError (with line/column) on malformed input, unknown kinds,
// inconsistent literals, or kind-inappropriate directives.
Problem ParseProblem(std::string_view text);
std::vector<Problem> ParseProblems(std::string_view text);

// Canonical text: fixed directive order, single spaces.
std::string Serialize(const Problem& p);
std::string Serialize(const std::vector<Problem>& ps);

// Kind-specific structural checks; throws etr::Error.
void Validate(const Problem& p);

// --- predictions and labels ---

struct RankedHypothesis {
  std::string name;
  int rank = 0;
};

struct Prediction {
  ProblemKind kind = ProblemKind::kInference;
  std::string text;  // canonical, comparable with an "expect:" line

  State conclusion;                          // inference
  std::optional<ChainResult> chain;          // inference
  std::vector<std::string> readbacks;        // quantified
  std::vector<std::string> selected;         // selection
  RankingJudgment ranking;                   // probability
  std::vector<MenuChoice> choices;           // decision, one per menu
};

Prediction Predict(const Problem& p);

struct ClassicalAnswer {
  std::string text;           // canonical correct answer
  bool sanctioned = false;    // the prediction meets the classical standard
  std::string label;          // valid/invalid, coherent/incoherent, ...

  State consequences;                         // inference
  std::vector<QuantPremise> valid_readbacks;  // quantified
  std::vector<std::string> correct_cards;     // selection
  RankingJudgment reference_ranking;          // probability
  std::vector<MenuChoice> reference_choices;  // decision
};

ClassicalAnswer Classify(const Problem& p, const Prediction& pred);

// Interpreted premises for inference problems, in order.
std::vector<PremiseInterp> Interpretations(const Problem& p);

// The statement the query condition asks about, as English, plus the answer
// the engine gives and the classically correct answer. nullopt when the
// problem has no query target (a production ask whose prediction is empty).
struct QuerySpec {
  std::string statement;
  bool etr_answer = false;
  bool correct_answer = false;
};
std::optional<QuerySpec> QueryFor(const Problem& p, const Prediction& pred,
                                  const ClassicalAnswer& classical);

// --- English rendering ---

std::string Phrase(const Problem& p, const Literal& l);
std::string Phrase(const Problem& p, const State& s);
std::string LabelOf(const Problem& p, const std::string& name, const std::string& menu = "");
std::string RenderReadback(const Problem& p, const QuantPremise& s);
std::string RenderReadback(const Problem& p, const std::string& readback);

enum class Condition { kProduction, kQuery };
enum class Template { kNone, kControl, kEtr };

std::string_view ToString(Condition c);
std::string_view ToString(Template t);
std::optional<Condition> ParseCondition(std::string_view s);
std::optional<Template> ParseTemplate(std::string_view s);

inline constexpr std::string_view kControlPreamble = "Reason step-by-step for the following problem.";
inline constexpr std::string_view kEtrPreamble =
    "Answer the following question according to this procedure: First, list the premises. "
    "Second, turn each premise into a question to make a new list of questions; treat questions "
    "as possible alternatives. Third, reason step-by-step using both lists, keeping track of "
    "alternatives.";
inline constexpr std::string_view kProductionSuffix = "What, if anything, follows?";

// Prompt parts: decision problems have one per menu (each framing is asked
// in a fresh context); every other kind has exactly one, named "".
std::vector<std::string> PromptParts(const Problem& p);

// "X" in "Does it follow that X?" for one prompt part. Throws etr::Error
// when the problem has no query target.
std::string QueryStatement(const Problem& p, const std::string& part = "");

// Throws etr::Error for a query on a problem without a query target.
std::string RenderPrompt(const Problem& p, Condition c, Template t, const std::string& part = "");

std::string WrapTemplate(Template t, const std::string& prompt);

}  // namespace etr
