#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "etr/erotetic.hpp"
#include "etr/logic.hpp"

namespace etr::testing {

inline State S(const std::string& conj) {
  if (conj.empty()) return State{};
  return State(ParseConj(conj).literals);
}

inline Question Q(std::initializer_list<const char*> alts) {
  std::vector<State> v;
  for (const char* a : alts) v.push_back(S(a));
  return Question(std::move(v));
}

inline std::vector<PremiseInterp> Interps(std::initializer_list<const char*> premises) {
  std::vector<PremiseInterp> out;
  for (const char* p : premises) out.push_back(InterpretPremise(ParseExpr(p)));
  return out;
}

}  // namespace etr::testing
