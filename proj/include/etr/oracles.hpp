// Classical standards used to label engine predictions: propositional
// entailment, monadic first-order entailment, Wason falsification, ranking
// coherence and menu consistency.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "etr/erotetic.hpp"
#include "etr/grounding.hpp"
#include "etr/truth_table.hpp"

namespace etr {

// Questions read as disjunctions of their alternatives, answers as
// conjunctions. Throws CapExceeded above tt::kMaxAtoms distinct atoms.
bool Entails(const std::vector<PremiseInterp>& premises, const State& conclusion);
bool Entails(const std::vector<PremiseInterp>& premises, const State& conclusion, tt::Isa isa);

bool Satisfiable(const std::vector<PremiseInterp>& premises);

// Every literal over the premise atoms that the premises entail.
State ClassicalConsequences(const std::vector<PremiseInterp>& premises);

// Lowers premises and a conjunctive conclusion onto the counting kernel.
tt::Problem ToTruthTable(const std::vector<PremiseInterp>& premises, const State& conclusion);

// --- Wason selection ---

enum class SideKind { kLetter, kNumber };

SideKind KindOf(std::string_view token);

struct CardSpec {
  std::string visible;
  SideKind kind = SideKind::kLetter;

  static CardSpec FromToken(std::string token);
};

// "if <antecedent> on one side then <consequent> on the other side".
struct WasonRule {
  std::string antecedent;
  std::string consequent;
};

// Cards whose hidden side can falsify the rule, as visible tokens sorted
// (duplicates kept). Throws etr::Error if both rule tokens have one kind.
std::vector<std::string> WasonCorrect(const std::vector<CardSpec>& cards, const WasonRule& rule);

// --- Probability rankings ---

struct Hypothesis {
  std::string name;
  State state;
};

struct RankingJudgment {
  std::vector<Hypothesis> hypotheses;
  std::vector<int> rank;  // parallel to hypotheses; higher = judged more probable
};

struct CoherenceViolation {
  std::string superset;
  std::string subset;
  friend bool operator==(const CoherenceViolation&, const CoherenceViolation&) = default;
};

// Pairs where a hypothesis strictly outranks one whose literals it does not
// entail, i.e. H ⊇ H' as literal sets but rank(H) > rank(H').
std::vector<CoherenceViolation> CoherenceViolations(const RankingJudgment& r);

// --- Menu consistency ---

// A choice from one menu. `chosen` is the choice set: a single name for a
// strict choice, every tied option when the chooser is indifferent.
struct MenuChoice {
  std::string menu;
  std::vector<std::string> options;
  std::vector<std::string> chosen;
};

struct ChoiceViolation {
  std::string smaller;
  std::string larger;
  friend bool operator==(const ChoiceViolation&, const ChoiceViolation&) = default;
};

// Flags (M1, M2) for distinct entries with options(M1) ⊆ options(M2) where
// the choice from M2 reaches into M1 yet differs from the choice made in M1
// (Arrow's choice axiom). Equal option sets cover re-framings of one menu.
std::vector<ChoiceViolation> ChoiceConsistency(const std::vector<MenuChoice>& choices);

// A choice assignment that never violates consistency: each menu picks its
// option that appears in the most menus, ties broken by name.
std::vector<MenuChoice> ConsistentReferenceChoices(std::vector<MenuChoice> menus);

// --- Monadic first-order ---

inline constexpr std::size_t kMaxMonadicPredicates = 4;

// True iff the conclusion holds in every model of the premises. Truth of these
// sentences depends only on which predicate combinations are inhabited, so the
// check ranges over every non-empty set of the 2^k combinations (domains of
// size 1..2^k). Throws CapExceeded above kMaxMonadicPredicates.
bool MonadicEntails(const std::vector<QuantPremise>& premises, const QuantPremise& conclusion);

// Non-premise "some P are Q" sentences over premise predicates that are valid,
// P before Q in first-occurrence order.
std::vector<QuantPremise> ValidExistentials(const std::vector<QuantPremise>& premises);

}  // namespace etr
