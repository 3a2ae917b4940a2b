#include "etr/erotetic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "etr/error.hpp"

namespace etr {

namespace {

State StateOf(const Conj& c) {
  auto s = State::TryMake(c.literals);
  if (!s) throw UnsupportedPremise("inconsistent conjunction " + ToDsl(c));
  return *s;
}

// Consistent pairwise unions of the two alternative sets.
std::vector<State> CrossMerge(const std::vector<State>& left, const std::vector<State>& right) {
  std::vector<State> out;
  for (const State& a : left)
    for (const State& b : right)
      if (auto m = a.Union(b)) out.push_back(std::move(*m));
  return out;
}

}  // namespace

std::string ToString(const PremiseInterp& i) {
  if (const auto* q = std::get_if<AsQuestion>(&i)) return "question " + ToString(q->question);
  return "answer " + ToString(std::get<AsAnswer>(i).state);
}

PremiseInterp InterpretPremise(const Expr& premise) {
  return std::visit(
      [](const auto& x) -> PremiseInterp {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Conj>) {
          return AsAnswer{StateOf(x)};
        } else if constexpr (std::is_same_v<T, Disj>) {
          std::vector<State> alts;
          for (const Conj& c : x.disjuncts) alts.push_back(StateOf(c));
          return AsQuestion{Question(std::move(alts))};
        } else {
          if (x.antecedent.literals.size() != 1)
            throw UnsupportedPremise("conditional antecedent must be a single literal, got '" +
                                     ToDsl(x.antecedent) + "'");
          const Literal& a = x.antecedent.literals.front();
          std::vector<State> alts;
          std::vector<Literal> yes = x.consequent.literals;
          yes.push_back(a);
          if (auto s = State::TryMake(std::move(yes))) alts.push_back(std::move(*s));
          alts.push_back(State{a.Negated()});
          return AsQuestion{Question(std::move(alts))};
        }
      },
      premise);
}

Question Absorb(const std::optional<Question>& current, const PremiseInterp& next) {
  if (!current) {
    if (const auto* q = std::get_if<AsQuestion>(&next)) return q->question;
    return Question{std::get<AsAnswer>(next).state};
  }
  const auto& alts = current->alternatives();
  if (const auto* q = std::get_if<AsQuestion>(&next))
    return Question(CrossMerge(alts, q->question.alternatives()));

  const State& answer = std::get<AsAnswer>(next).state;
  std::size_t best = 0;
  for (const State& s : alts) best = std::max(best, s.Overlap(answer));
  std::vector<State> kept;
  for (const State& s : alts) {
    if (best > 0 && s.Overlap(answer) != best) continue;
    if (auto m = s.Union(answer)) kept.push_back(std::move(*m));
  }
  if (kept.empty())
    throw AbsurdityError("answer " + ToString(answer) + " is inconsistent with every alternative of " +
                         ToString(*current));
  return Question(std::move(kept));
}

Question Inquire(const Question& q, const Atom& atom) {
  std::vector<State> out;
  out.reserve(q.size() * 2);
  for (const State& s : q.alternatives()) {
    if (s.Mentions(atom)) {
      out.push_back(s);
      continue;
    }
    out.push_back(*s.Union(State{Literal{atom, true}}));
    out.push_back(*s.Union(State{Literal{atom, false}}));
  }
  return Question(std::move(out));
}

State WhatFollows(const Question& q, const State& asserted) {
  const auto& alts = q.alternatives();
  State common = alts.front();
  for (std::size_t i = 1; i < alts.size() && !common.empty(); ++i)
    common = common.Intersection(alts[i]);
  return common.Minus(asserted);
}

bool FollowsQuery(const Question& q, const State& target) {
  return std::all_of(q.alternatives().begin(), q.alternatives().end(),
                     [&](const State& s) { return s.ContainsAll(target); });
}

const char* ToString(StepKind k) {
  switch (k) {
    case StepKind::kStart: return "start";
    case StepKind::kAbsorbQuestion: return "absorb-question";
    case StepKind::kAbsorbAnswer: return "absorb-answer";
    case StepKind::kInquire: return "inquire";
  }
  return "?";
}

void Trace::Append(TraceStep step) {
  if (!steps_.empty() && step.before && !(*step.before == steps_.back().after))
    throw Error("trace steps do not chain");
  steps_.push_back(std::move(step));
}

std::string Trace::Render() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const TraceStep& s = steps_[i];
    out += std::to_string(i + 1) + ". " + ToString(s.kind) + " " + s.input + "\n   => " +
           ToString(s.after) + "\n";
  }
  return out;
}

State AssertedLiterals(const std::vector<PremiseInterp>& premises) {
  std::vector<Literal> lits;
  for (const auto& p : premises)
    if (const auto* a = std::get_if<AsAnswer>(&p))
      lits.insert(lits.end(), a->state.literals().begin(), a->state.literals().end());
  // Two clashing categorical premises are an absurd premise set, but the
  // subtraction below only needs set semantics.
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  auto s = State::TryMake(lits);
  if (s) return *s;
  throw AbsurdityError("categorical premises contradict each other");
}

ChainResult RunChain(const std::vector<PremiseInterp>& premises,
                     const std::vector<Atom>& inquire_on, bool record_trace) {
  if (premises.empty()) throw Error("no premises");
  ChainResult r{Absorb(std::nullopt, premises.front()), AssertedLiterals(premises), {}, {}};
  if (record_trace)
    r.trace.Append({StepKind::kStart, std::nullopt, ToString(premises.front()), r.final_question});
  for (std::size_t i = 1; i < premises.size(); ++i) {
    for (const Atom& a : inquire_on) {
      Question split = Inquire(r.final_question, a);
      if (record_trace) r.trace.Append({StepKind::kInquire, r.final_question, a.id(), split});
      r.final_question = std::move(split);
    }
    const bool is_answer = std::holds_alternative<AsAnswer>(premises[i]);
    Question next = Absorb(r.final_question, premises[i]);
    if (record_trace)
      r.trace.Append({is_answer ? StepKind::kAbsorbAnswer : StepKind::kAbsorbQuestion,
                    r.final_question, ToString(premises[i]), next});
    r.final_question = std::move(next);
  }
  r.conclusion = WhatFollows(r.final_question, r.asserted);
  return r;
}

std::vector<Atom> PremiseAtoms(const std::vector<PremiseInterp>& premises) {
  std::set<Atom> atoms;
  for (const auto& p : premises) {
    if (const auto* q = std::get_if<AsQuestion>(&p)) {
      for (const Atom& a : q->question.Atoms()) atoms.insert(a);
    } else {
      for (const Literal& l : std::get<AsAnswer>(p).state.literals()) atoms.insert(l.atom);
    }
  }
  return {atoms.begin(), atoms.end()};
}

namespace {

constexpr std::size_t kMaskAtoms = 63;

// Calls f(subset) for subsets of n < 64 atoms by increasing size, up to
// `budget`. Stops early when f returns false.
template <typename F>
void ForEachSubset(std::size_t n, std::size_t budget, F&& f) {
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::size_t k = 0; k <= std::min(budget, n); ++k) {
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < end) {
      if (!f(mask)) return;
      if (mask == 0) break;
      // Next mask with the same popcount.
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }
}

std::vector<Atom> CheckedAtoms(const std::vector<PremiseInterp>& premises, const EquilibriumOptions& options) {
  std::vector<Atom> atoms = PremiseAtoms(premises);
  const std::size_t cap = std::min(options.atom_cap, kMaskAtoms);
  if (atoms.size() > cap)
    throw CapExceeded("equilibrium search over " + std::to_string(atoms.size()) +
                      " atoms exceeds the cap of " + std::to_string(cap));
  return atoms;
}

// The same chain on bit masks, one bit per atom.
struct Bits {
  std::uint64_t pos = 0, neg = 0;
  friend auto operator<=>(const Bits&, const Bits&) = default;
};

using BitQuestion = std::vector<Bits>;

bool Clash(const Bits& a, const Bits& b) { return (a.pos & b.neg) | (a.neg & b.pos); }

Bits Merge(const Bits& a, const Bits& b) { return {a.pos | b.pos, a.neg | b.neg}; }

void Canonical(BitQuestion& q) {
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
}

struct BitPremise {
  bool answer = false;
  BitQuestion alts;  // one entry for an answer
};

// Empty result == absurd.
BitQuestion AbsorbBits(const BitQuestion& q, const BitPremise& p) {
  BitQuestion out;
  if (!p.answer) {
    out.reserve(q.size() * p.alts.size());
    for (const Bits& a : q)
      for (const Bits& b : p.alts)
        if (!Clash(a, b)) out.push_back(Merge(a, b));
    Canonical(out);
    return out;
  }
  const Bits& ans = p.alts.front();
  int best = 0;
  for (const Bits& a : q) best = std::max(best, std::popcount((a.pos & ans.pos) | (a.neg & ans.neg)));
  for (const Bits& a : q) {
    if (best > 0 && std::popcount((a.pos & ans.pos) | (a.neg & ans.neg)) != best) continue;
    if (!Clash(a, ans)) out.push_back(Merge(a, ans));
  }
  Canonical(out);
  return out;
}

BitQuestion InquireBits(const BitQuestion& q, std::uint64_t atom) {
  BitQuestion out;
  out.reserve(q.size() * 2);
  for (const Bits& a : q) {
    if ((a.pos | a.neg) & atom) {
      out.push_back(a);
    } else {
      out.push_back({a.pos | atom, a.neg});
      out.push_back({a.pos, a.neg | atom});
    }
  }
  Canonical(out);
  return out;
}

State BitEquilibrium(const std::vector<PremiseInterp>& premises, const std::vector<Atom>& atoms,
                     std::size_t budget) {
  auto index = [&](const Atom& a) {
    return std::uint64_t{1} << (std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin());
  };
  auto bits = [&](const State& s) {
    Bits b;
    for (const Literal& l : s.literals()) (l.positive ? b.pos : b.neg) |= index(l.atom);
    return b;
  };
  std::vector<BitPremise> ps;
  Bits asserted;
  for (const PremiseInterp& p : premises) {
    BitPremise bp;
    if (const auto* q = std::get_if<AsQuestion>(&p)) {
      for (const State& s : q->question.alternatives()) bp.alts.push_back(bits(s));
    } else {
      bp.answer = true;
      bp.alts.push_back(bits(std::get<AsAnswer>(p).state));
      asserted = Merge(asserted, bp.alts.front());
    }
    ps.push_back(std::move(bp));
  }
  if (asserted.pos & asserted.neg) return State{};

  std::optional<Bits> surviving;
  ForEachSubset(atoms.size(), budget, [&](std::uint64_t split) {
    BitQuestion q = ps.front().alts;
    for (std::size_t i = 1; i < ps.size(); ++i) {
      for (std::uint64_t rest = split; rest; rest &= rest - 1) q = InquireBits(q, rest & -rest);
      q = AbsorbBits(q, ps[i]);
      if (q.empty()) {
        surviving = Bits{};
        return false;
      }
    }
    Bits common{~std::uint64_t{0}, ~std::uint64_t{0}};
    for (const Bits& a : q) common = {common.pos & a.pos, common.neg & a.neg};
    common = {common.pos & ~asserted.pos, common.neg & ~asserted.neg};
    surviving = surviving ? Bits{surviving->pos & common.pos, surviving->neg & common.neg} : common;
    return (surviving->pos | surviving->neg) != 0;
  });

  std::vector<Literal> out;
  if (surviving)
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (surviving->pos >> i & 1) out.push_back({atoms[i], true});
      if (surviving->neg >> i & 1) out.push_back({atoms[i], false});
    }
  return State(std::move(out));
}

}  // namespace

State EquilibriumConclusions(const std::vector<PremiseInterp>& premises,
                             const EquilibriumOptions& options) {
  if (premises.empty()) throw Error("no premises");
  const std::vector<Atom> atoms = CheckedAtoms(premises, options);
  const std::size_t budget = options.atom_budget.value_or(atoms.size());
  return BitEquilibrium(premises, atoms, budget);
}

namespace detail {

State EquilibriumReference(const std::vector<PremiseInterp>& premises, const EquilibriumOptions& options) {
  const std::vector<Atom> atoms = CheckedAtoms(premises, options);
  const std::size_t budget = options.atom_budget.value_or(atoms.size());

  // Splits commute, so subsets (not sequences) of atoms cover every inquiry.
  // Smaller subsets go first: they are cheap and usually settle the answer.
  std::optional<State> surviving;
  ForEachSubset(atoms.size(), budget, [&](std::uint64_t mask) {
    std::vector<Atom> split;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1) split.push_back(atoms[i]);
    State found;
    try {
      found = RunChain(premises, split, false).conclusion;
    } catch (const AbsurdityError&) {
      surviving = State{};
      return false;
    }
    surviving = surviving ? surviving->Intersection(found) : found;
    return !surviving->empty();
  });
  return surviving.value_or(State{});
}

}  // namespace detail

}  // namespace etr
