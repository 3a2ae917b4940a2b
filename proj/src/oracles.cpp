#include "etr/oracles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "etr/error.hpp"

namespace etr {

namespace {

class AtomIndex {
 public:
  unsigned Of(const Atom& a) {
    auto [it, inserted] = index_.try_emplace(a, static_cast<unsigned>(index_.size()));
    return it->second;
  }
  unsigned size() const { return static_cast<unsigned>(index_.size()); }

 private:
  std::map<Atom, unsigned> index_;
};

tt::Term TermOf(const State& s, AtomIndex& idx) {
  tt::Term t;
  for (const Literal& l : s.literals()) {
    const unsigned i = idx.Of(l.atom);
    if (i >= 32) continue;  // rejected by the cap check before counting
    (l.positive ? t.pos : t.neg) |= std::uint32_t{1} << i;
  }
  return t;
}

}  // namespace

tt::Problem ToTruthTable(const std::vector<PremiseInterp>& premises, const State& conclusion) {
  AtomIndex idx;
  tt::Problem p;
  for (const auto& premise : premises) {
    tt::Dnf f;
    if (const auto* q = std::get_if<AsQuestion>(&premise)) {
      for (const State& s : q->question.alternatives()) f.push_back(TermOf(s, idx));
    } else {
      f.push_back(TermOf(std::get<AsAnswer>(premise).state, idx));
    }
    p.premises.push_back(std::move(f));
  }
  p.conclusion.push_back(TermOf(conclusion, idx));
  p.atom_count = idx.size();
  return p;
}

bool Entails(const std::vector<PremiseInterp>& premises, const State& conclusion, tt::Isa isa) {
  return tt::Count(ToTruthTable(premises, conclusion), isa).countermodels == 0;
}

bool Entails(const std::vector<PremiseInterp>& premises, const State& conclusion) {
  return Entails(premises, conclusion, tt::BestIsa());
}

bool Satisfiable(const std::vector<PremiseInterp>& premises) {
  return tt::Count(ToTruthTable(premises, State{})).models > 0;
}

State ClassicalConsequences(const std::vector<PremiseInterp>& premises) {
  std::vector<Literal> out;
  for (const Atom& a : PremiseAtoms(premises))
    for (bool polarity : {true, false})
      if (Entails(premises, State{Literal{a, polarity}})) out.push_back({a, polarity});
  // Contradictory premises entail both polarities; report nothing rather
  // than an inconsistent state.
  return State::TryMake(std::move(out)).value_or(State{});
}

SideKind KindOf(std::string_view token) {
  const bool digits = !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
  return digits ? SideKind::kNumber : SideKind::kLetter;
}

CardSpec CardSpec::FromToken(std::string token) {
  const SideKind kind = KindOf(token);
  return {std::move(token), kind};
}

std::vector<std::string> WasonCorrect(const std::vector<CardSpec>& cards, const WasonRule& rule) {
  const SideKind ante_kind = KindOf(rule.antecedent);
  if (ante_kind == KindOf(rule.consequent))
    throw Error("rule must relate a letter side to a number side");

  std::vector<std::string> out;
  for (const CardSpec& card : cards) {
    if (card.kind != KindOf(card.visible)) throw Error("card '" + card.visible + "' kind mismatch");
    // Hidden side ranges over the rule's token of the other kind plus one
    // token that is neither rule token.
    const std::string hidden_candidates[] = {rule.antecedent, rule.consequent, "\x01other"};
    bool falsifiable = false;
    for (const std::string& hidden : hidden_candidates) {
      if (hidden != "\x01other" && KindOf(hidden) == card.kind) continue;
      const std::string& ante_side = card.kind == ante_kind ? card.visible : hidden;
      const std::string& cons_side = card.kind == ante_kind ? hidden : card.visible;
      if (ante_side == rule.antecedent && cons_side != rule.consequent) falsifiable = true;
    }
    if (falsifiable) out.push_back(card.visible);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoherenceViolation> CoherenceViolations(const RankingJudgment& r) {
  if (r.rank.size() != r.hypotheses.size()) throw Error("ranking does not cover every hypothesis");
  std::vector<CoherenceViolation> out;
  for (std::size_t i = 0; i < r.hypotheses.size(); ++i)
    for (std::size_t j = 0; j < r.hypotheses.size(); ++j) {
      if (i == j) continue;
      if (r.rank[i] > r.rank[j] && r.hypotheses[i].state.ContainsAll(r.hypotheses[j].state))
        out.push_back({r.hypotheses[i].name, r.hypotheses[j].name});
    }
  return out;
}

namespace {

std::set<std::string> AsSet(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::vector<ChoiceViolation> ChoiceConsistency(const std::vector<MenuChoice>& choices) {
  std::vector<ChoiceViolation> out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto small = AsSet(choices[i].options);
    const auto small_choice = AsSet(choices[i].chosen);
    for (std::size_t j = 0; j < choices.size(); ++j) {
      if (i == j) continue;
      const auto large = AsSet(choices[j].options);
      if (!std::includes(large.begin(), large.end(), small.begin(), small.end())) continue;
      std::set<std::string> reached;
      for (const std::string& c : choices[j].chosen)
        if (small.count(c)) reached.insert(c);
      if (reached.empty() || reached == small_choice) continue;
      // Identical framings are reported once.
      if (small == large && j < i) continue;
      out.push_back({choices[i].menu, choices[j].menu});
    }
  }
  return out;
}

std::vector<MenuChoice> ConsistentReferenceChoices(std::vector<MenuChoice> menus) {
  std::map<std::string, int> appearances;
  for (const MenuChoice& m : menus)
    for (const std::string& o : AsSet(m.options)) ++appearances[o];
  for (MenuChoice& m : menus) {
    auto opts = AsSet(m.options);
    if (opts.empty()) throw Error("menu '" + m.menu + "' has no options");
    std::string best = *opts.begin();
    for (const std::string& o : opts)
      if (appearances[o] > appearances[best]) best = o;
    m.chosen = {best};
  }
  return menus;
}

namespace {

std::vector<std::string> Predicates(const std::vector<QuantPremise>& premises) {
  std::vector<std::string> out;
  auto add = [&](const std::string& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (const QuantPremise& p : premises) {
    add(p.subject);
    add(p.predicate);
  }
  return out;
}

// `inhabited` bit t set means some element has exactly the predicates in t.
bool HoldsIn(const QuantPremise& s, std::uint32_t inhabited, unsigned types,
             const std::vector<std::string>& preds) {
  const auto bit = [&](const std::string& p) {
    return 1u << static_cast<unsigned>(std::find(preds.begin(), preds.end(), p) - preds.begin());
  };
  const unsigned sb = bit(s.subject), pb = bit(s.predicate);
  for (unsigned t = 0; t < types; ++t) {
    if (!(inhabited >> t & 1)) continue;
    const bool subj = t & sb, pred = t & pb;
    if (s.kind == QuantPremise::Kind::kSome && subj && pred) return true;
    if (s.kind == QuantPremise::Kind::kAll && subj && !pred) return false;
  }
  return s.kind == QuantPremise::Kind::kAll;
}

}  // namespace

bool MonadicEntails(const std::vector<QuantPremise>& premises, const QuantPremise& conclusion) {
  std::vector<QuantPremise> all = premises;
  all.push_back(conclusion);
  const std::vector<std::string> preds = Predicates(all);
  if (preds.size() > kMaxMonadicPredicates)
    throw CapExceeded("monadic check over " + std::to_string(preds.size()) +
                      " predicates exceeds the cap of " + std::to_string(kMaxMonadicPredicates));
  const unsigned types = 1u << preds.size();
  const std::uint64_t type_sets = std::uint64_t{1} << types;
  for (std::uint64_t inhabited = 1; inhabited < type_sets; ++inhabited) {
    const auto m = static_cast<std::uint32_t>(inhabited);
    const bool model = std::all_of(premises.begin(), premises.end(), [&](const QuantPremise& p) {
      return HoldsIn(p, m, types, preds);
    });
    if (model && !HoldsIn(conclusion, m, types, preds)) return false;
  }
  return true;
}

std::vector<QuantPremise> ValidExistentials(const std::vector<QuantPremise>& premises) {
  const std::vector<std::string> preds = Predicates(premises);
  std::set<std::pair<std::string, std::string>> stated;
  for (const QuantPremise& p : premises) {
    stated.insert({p.subject, p.predicate});
    stated.insert({p.predicate, p.subject});
  }
  std::vector<QuantPremise> out;
  for (std::size_t i = 0; i < preds.size(); ++i)
    for (std::size_t j = i + 1; j < preds.size(); ++j) {
      if (stated.count({preds[i], preds[j]})) continue;
      QuantPremise c = Some(preds[i], preds[j]);
      if (MonadicEntails(premises, c)) out.push_back(std::move(c));
    }
  return out;
}

}  // namespace etr
