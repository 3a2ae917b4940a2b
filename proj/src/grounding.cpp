#include "etr/grounding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "etr/error.hpp"

namespace etr {

QuantPremise Some(std::string p, std::string q) {
  return {QuantPremise::Kind::kSome, std::move(p), std::move(q)};
}
QuantPremise All(std::string p, std::string q) {
  return {QuantPremise::Kind::kAll, std::move(p), std::move(q)};
}

QuantPremise ParseQuantPremise(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.size() != 4 || (words[0] != "some" && words[0] != "all") || words[2] != "are")
    throw SyntaxError("expected 'some <p> are <q>' or 'all <p> are <q>'", 0, 1);
  for (std::size_t i : {1u, 3u}) {
    if (words[i].find('(') != std::string::npos || words[i].find(',') != std::string::npos)
      throw UnsupportedPremise("relational predicate '" + words[i] +
                               "' is not supported; only monadic predicates are grounded");
    if (!IsIdentifier(words[i]) || words[i].find('@') != std::string::npos)
      throw SyntaxError("bad predicate name '" + words[i] + "'", 0, 1);
  }
  return words[0] == "some" ? Some(words[1], words[3]) : All(words[1], words[3]);
}

std::string ToDsl(const QuantPremise& p) {
  return std::string(p.kind == QuantPremise::Kind::kSome ? "some " : "all ") + p.subject +
         " are " + p.predicate;
}

std::string GroundAtom(const std::string& predicate, const std::string& individual) {
  return predicate + "@" + individual;
}

Grounding Ground(const std::vector<QuantPremise>& premises) {
  Grounding g;
  for (const QuantPremise& p : premises)
    if (p.kind == QuantPremise::Kind::kSome)
      g.individuals.push_back("x" + std::to_string(g.individuals.size() + 1));

  std::size_t next_individual = 0;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const QuantPremise& p = premises[i];
    if (p.kind == QuantPremise::Kind::kSome) {
      const std::string& x = g.individuals[next_individual++];
      g.premises.push_back(
          {AsAnswer{State{Pos(GroundAtom(p.subject, x)), Pos(GroundAtom(p.predicate, x))}}, i});
      continue;
    }
    if (g.individuals.empty()) {
      g.warnings.push_back("'" + ToDsl(p) + "' is vacuous: no individuals to range over");
      continue;
    }
    for (const std::string& x : g.individuals) {
      const Literal subj = Pos(GroundAtom(p.subject, x));
      std::vector<State> alts;
      if (auto yes = State::TryMake({subj, Pos(GroundAtom(p.predicate, x))}))
        alts.push_back(*yes);
      alts.push_back(State{subj.Negated()});
      g.premises.push_back({AsQuestion{Question(std::move(alts))}, i});
    }
  }
  return g;
}

std::vector<PremiseInterp> AbsorptionOrder(const Grounding& g) {
  std::vector<PremiseInterp> out;
  for (const auto& p : g.premises)
    if (std::holds_alternative<AsQuestion>(p.interp)) out.push_back(p.interp);
  for (const auto& p : g.premises)
    if (std::holds_alternative<AsAnswer>(p.interp)) out.push_back(p.interp);
  return out;
}

namespace {

std::vector<std::string> PredicateOrder(const std::vector<QuantPremise>& premises) {
  std::vector<std::string> order;
  auto add = [&](const std::string& p) {
    if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
  };
  for (auto kind : {QuantPremise::Kind::kAll, QuantPremise::Kind::kSome})
    for (const QuantPremise& p : premises)
      if (p.kind == kind) {
        add(p.subject);
        add(p.predicate);
      }
  return order;
}

}  // namespace

std::vector<std::string> ExistentialReadback(const Question& q, const Grounding& g,
                                             const std::vector<QuantPremise>& premises) {
  const std::vector<std::string> order = PredicateOrder(premises);
  std::set<std::pair<std::string, std::string>> stated;
  for (const QuantPremise& p : premises) {
    stated.insert({p.subject, p.predicate});
    stated.insert({p.predicate, p.subject});
  }

  std::vector<std::string> out;
  for (const std::string& x : g.individuals) {
    std::vector<std::string> held;
    for (const std::string& pred : order) {
      const Literal l = Pos(GroundAtom(pred, x));
      if (std::all_of(q.alternatives().begin(), q.alternatives().end(),
                      [&](const State& s) { return s.Contains(l); }))
        held.push_back(pred);
    }
    for (std::size_t i = 0; i < held.size(); ++i)
      for (std::size_t j = i + 1; j < held.size(); ++j) {
        if (stated.count({held[i], held[j]})) continue;
        std::string sentence = "some " + held[i] + " are " + held[j];
        if (std::find(out.begin(), out.end(), sentence) == out.end()) out.push_back(sentence);
      }
  }
  return out;
}

GroundedRun RunQuantified(const std::vector<QuantPremise>& premises) {
  Grounding g = Ground(premises);
  const std::vector<PremiseInterp> order = AbsorptionOrder(g);
  if (order.empty()) return {std::move(g), ChainResult{Question{State{}}, {}, {}, {}}, {}};
  ChainResult chain = RunChain(order);
  std::vector<std::string> readbacks = ExistentialReadback(chain.final_question, g, premises);
  return {std::move(g), std::move(chain), std::move(readbacks)};
}

}  // namespace etr
