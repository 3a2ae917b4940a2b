// Question/answer dynamics: premises are taken on board as questions, later
// categorical information is treated as a maximally strong answer, and
// inquiry splits alternatives on undecided atoms.
//
// The update rule here is a reconstruction; kSemanticsVersion is bumped
// whenever its observable behaviour changes.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "etr/logic.hpp"

namespace etr {

inline constexpr const char* kSemanticsVersion = "etr-update/1 (overlap-argmax, pairwise-union)";

struct AsQuestion {
  Question question;
  friend bool operator==(const AsQuestion&, const AsQuestion&) = default;
};
struct AsAnswer {
  State state;
  friend bool operator==(const AsAnswer&, const AsAnswer&) = default;
};
using PremiseInterp = std::variant<AsQuestion, AsAnswer>;

std::string ToString(const PremiseInterp& i);

// Disjunctions and conditionals become questions, categorical conjunctions
// become answers. A conditional with more than one antecedent literal
// throws UnsupportedPremise.
PremiseInterp InterpretPremise(const Expr& premise);

// Incorporates the next premise. `current` is nullopt for the first one.
// Throws AbsurdityError when every alternative is eliminated.
Question Absorb(const std::optional<Question>& current, const PremiseInterp& next);

// Splits each alternative that is silent on `atom` into a positive and a
// negative copy.
Question Inquire(const Question& q, const Atom& atom);

// Literals shared by every alternative, minus the asserted ones. An empty
// result means nothing follows.
State WhatFollows(const Question& q, const State& asserted);

bool FollowsQuery(const Question& q, const State& target);

enum class StepKind { kStart, kAbsorbQuestion, kAbsorbAnswer, kInquire };

const char* ToString(StepKind k);

struct TraceStep {
  StepKind kind;
  std::optional<Question> before;
  std::string input;
  Question after;
};

class Trace {
 public:
  void Append(TraceStep step);
  const std::vector<TraceStep>& steps() const { return steps_; }
  std::string Render() const;

 private:
  std::vector<TraceStep> steps_;
};

// Literals of every categorical premise, i.e. what a reasoner was told
// verbatim and would not report as a conclusion.
State AssertedLiterals(const std::vector<PremiseInterp>& premises);

struct ChainResult {
  Question final_question;
  State asserted;
  State conclusion;  // empty == nothing follows
  Trace trace;
};

// Runs the default procedure over the premises in order. When `inquire_on`
// is non-empty, the current question is split on each of those atoms before
// every absorb after the first.
ChainResult RunChain(const std::vector<PremiseInterp>& premises,
                     const std::vector<Atom>& inquire_on = {}, bool record_trace = true);

inline constexpr std::size_t kDefaultEquilibriumAtomCap = 12;

struct EquilibriumOptions {
  // Largest split set tried; nullopt means every subset of premise atoms.
  std::optional<std::size_t> atom_budget;
  std::size_t atom_cap = kDefaultEquilibriumAtomCap;
};

// Conclusions that survive every inquiry the reasoner could raise first:
// a literal is kept iff it is in WhatFollows for the chain re-run with each
// subset of premise atoms inquired. A subset whose run is absurd yields no
// conclusions. Throws CapExceeded above the atom cap.
State EquilibriumConclusions(const std::vector<PremiseInterp>& premises,
                             const EquilibriumOptions& options = {});

namespace detail {
// String-keyed search over RunChain; the bit-mask version must agree with it.
State EquilibriumReference(const std::vector<PremiseInterp>& premises,
                           const EquilibriumOptions& options = {});
}  // namespace detail

// Distinct atoms over all premises, sorted.
std::vector<Atom> PremiseAtoms(const std::vector<PremiseInterp>& premises);

}  // namespace etr
