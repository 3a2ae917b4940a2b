// Grounds the monadic "some P are Q" / "all P are Q" fragment into
// propositional atoms of the form "P@x" over one representative individual
// per existential premise.

#pragma once

#include <string>
#include <vector>

#include "etr/erotetic.hpp"

namespace etr {

struct QuantPremise {
  enum class Kind { kSome, kAll };
  Kind kind = Kind::kSome;
  std::string subject;
  std::string predicate;

  friend bool operator==(const QuantPremise&, const QuantPremise&) = default;
};

QuantPremise Some(std::string p, std::string q);
QuantPremise All(std::string p, std::string q);

// "some p are q" / "all p are q". Throws SyntaxError on anything else,
// including multi-place predicates such as "loves(x)".
QuantPremise ParseQuantPremise(std::string_view text);
std::string ToDsl(const QuantPremise& p);

std::string GroundAtom(const std::string& predicate, const std::string& individual);

struct GroundedPremise {
  PremiseInterp interp;
  std::size_t source = 0;  // index of the quantified premise it came from
};

struct Grounding {
  std::vector<GroundedPremise> premises;  // source order
  std::vector<std::string> individuals;   // registry, x1, x2, ...
  std::vector<std::string> warnings;
};

// Existentials each introduce a fresh individual; universals range over every
// registered individual of the problem, emitted in registry order.
Grounding Ground(const std::vector<QuantPremise>& premises);

// The order in which a grounded run absorbs premises: universal questions
// first, then the existential states as answers, each group in source order.
std::vector<PremiseInterp> AbsorptionOrder(const Grounding& g);

// "some P are Q" readbacks: for each individual, each unordered pair of
// predicates positive in every alternative, minus pairs that appear together
// in a premise. Within a pair, P is the predicate met first in absorption
// order (universals before existentials, subject before predicate).
std::vector<std::string> ExistentialReadback(const Question& q, const Grounding& g,
                                             const std::vector<QuantPremise>& premises);

struct GroundedRun {
  Grounding grounding;
  ChainResult chain;
  std::vector<std::string> readbacks;
};

GroundedRun RunQuantified(const std::vector<QuantPremise>& premises);

}  // namespace etr
