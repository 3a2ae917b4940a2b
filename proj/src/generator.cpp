#include "etr/generator.hpp"

#include <json.hpp>
#include <random>
#include <set>

#include "etr/error.hpp"

namespace etr {

std::string_view ToString(Family f) {
  switch (f) {
    case Family::kIllusory: return "illusory";
    case Family::kModusPonens: return "modus-ponens";
    case Family::kConjunctionRanking: return "conjunction-ranking";
    case Family::kDecisionFraming: return "decision-framing";
  }
  return "?";
}

std::string_view ToString(Order o) {
  switch (o) {
    case Order::kQuestionFirst: return "question-first";
    case Order::kAnswerFirst: return "answer-first";
    case Order::kBoth: return "both";
  }
  return "?";
}

std::optional<Family> ParseFamily(std::string_view s) {
  for (auto f : {Family::kIllusory, Family::kModusPonens, Family::kConjunctionRanking,
                 Family::kDecisionFraming})
    if (ToString(f) == s) return f;
  return std::nullopt;
}

std::optional<Order> ParseOrder(std::string_view s) {
  for (auto o : {Order::kQuestionFirst, Order::kAnswerFirst, Order::kBoth})
    if (ToString(o) == s) return o;
  return std::nullopt;
}

std::vector<std::string> DefaultVocabulary() {
  return {"ace",   "king",  "queen", "jack",   "ten",    "nine",  "eight",
          "seven", "six",   "five",  "four",   "three",  "two",   "joker",
          "red",   "black", "heart", "spade",  "club",   "diamond"};
}

namespace {

// Atoms one draw of the family needs.
std::size_t Width(const GenConfig& c) {
  switch (c.family) {
    case Family::kIllusory: return c.disjuncts * c.atoms_per_conjunct;
    case Family::kModusPonens: return c.disjuncts + (c.disjuncts - 1) * (c.atoms_per_conjunct - 1);
    case Family::kConjunctionRanking:
      return c.disjuncts + std::max(c.atoms_per_conjunct, c.disjuncts - 1);
    case Family::kDecisionFraming: return 3;
  }
  return 0;
}

}  // namespace

void Validate(const GenConfig& c) {
  if (c.count < 1) throw ConfigError("count must be at least 1");
  if (c.atoms_per_conjunct < 1 || c.atoms_per_conjunct > 3)
    throw ConfigError("atoms-per-conjunct must be in 1..3");
  if (c.disjuncts < 2 || c.disjuncts > 4) throw ConfigError("disjuncts must be in 2..4");
  if (c.family == Family::kIllusory && c.atoms_per_conjunct < 2)
    throw ConfigError("illusory family needs atoms-per-conjunct >= 2 (a one-atom disjunct leaves nothing to conclude)");
  std::set<std::string> distinct;
  for (const std::string& w : c.vocabulary) {
    if (!IsIdentifier(w) || w == "if" || w == "then" || w == "none")
      throw ConfigError("vocabulary word '" + w + "' is not a usable atom");
    distinct.insert(w);
  }
  if (distinct.size() != c.vocabulary.size()) throw ConfigError("vocabulary has duplicates");
  if (distinct.size() < Width(c))
    throw ConfigError("vocabulary exhausted: " + std::string(ToString(c.family)) + " needs " +
                      std::to_string(Width(c)) + " distinct words, have " +
                      std::to_string(distinct.size()));
}

namespace {

// Draws are derived from (seed, index) so instances can be produced in any
// order. Sampling uses plain modulo to stay identical across standard
// libraries.
class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    rng_.seed(seq);
  }
  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool Coin() { return rng_() >> 63; }

  std::vector<std::string> Sample(const std::vector<std::string>& pool, std::size_t k) {
    std::vector<std::string> v = pool;
    for (std::size_t i = 0; i < k; ++i) std::swap(v[i], v[i + Below(v.size() - i)]);
    v.resize(k);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

Conj RandomConj(Draw& d, const std::vector<std::string>& atoms, std::size_t from, std::size_t n) {
  Conj c;
  for (std::size_t i = from; i < from + n; ++i) c.literals.push_back({Atom(atoms[i]), !d.Coin()});
  return c;
}

std::string ConjDsl(const std::vector<Literal>& ls) { return ToDsl(Expr{Conj{ls}}); }

struct Draft {
  Problem problem;
  std::string order;
};

std::vector<Draft> Illusory(const GenConfig& c, Draw& d, const std::string& stem) {
  const std::size_t m = c.atoms_per_conjunct;
  const auto atoms = d.Sample(c.vocabulary, c.disjuncts * m);
  Disj disj;
  for (std::size_t j = 0; j < c.disjuncts; ++j) disj.disjuncts.push_back(RandomConj(d, atoms, j * m, m));
  const std::size_t pick = d.Below(c.disjuncts);
  const std::size_t lit = d.Below(m);
  const Literal answer = disj.disjuncts[pick].literals[lit];
  std::vector<Literal> rest = disj.disjuncts[pick].literals;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(lit));

  std::vector<Draft> out;
  if (c.order != Order::kAnswerFirst) {
    Problem p;
    p.id = stem + "-qf";
    p.kind = ProblemKind::kInference;
    p.premises = {disj, Conj{{answer}}};
    out.push_back({std::move(p), "question-first"});
  }
  if (c.order != Order::kQuestionFirst) {
    Problem p;
    p.id = stem + "-af";
    p.kind = ProblemKind::kInference;
    p.premises = {Conj{{answer}}, disj};
    p.query_target = ConjDsl(rest);
    out.push_back({std::move(p), "answer-first"});
  }
  return out;
}

std::vector<Draft> ModusPonens(const GenConfig& c, Draw& d, const std::string& stem) {
  const std::size_t n = c.disjuncts, m = c.atoms_per_conjunct;
  const auto atoms = d.Sample(c.vocabulary, Width(c));
  std::vector<Literal> links;
  for (std::size_t i = 0; i < n; ++i) links.push_back({Atom(atoms[i]), !d.Coin()});
  std::vector<Expr> conds;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Conj consequent = RandomConj(d, atoms, n + i * (m - 1), m - 1);
    consequent.literals.insert(consequent.literals.begin(), links[i + 1]);
    conds.push_back(Cond{Conj{{links[i]}}, consequent});
  }
  std::vector<Draft> out;
  if (c.order != Order::kAnswerFirst) {
    Problem p;
    p.id = stem + "-qf";
    p.premises = conds;
    p.premises.push_back(Conj{{links[0]}});
    out.push_back({std::move(p), "question-first"});
  }
  if (c.order != Order::kQuestionFirst) {
    Problem p;
    p.id = stem + "-af";
    p.premises = {Conj{{links[0]}}};
    p.premises.insert(p.premises.end(), conds.begin(), conds.end());
    p.query_target = ConjDsl({links.back()});
    out.push_back({std::move(p), "answer-first"});
  }
  return out;
}

std::vector<Draft> ConjunctionRanking(const GenConfig& c, Draw& d, const std::string& stem) {
  const std::size_t k = c.disjuncts;
  const std::size_t evidence_n = std::max(c.atoms_per_conjunct, k - 1);
  const auto atoms = d.Sample(c.vocabulary, Width(c));
  Problem p;
  p.id = stem;
  p.kind = ProblemKind::kProbability;
  std::vector<Literal> evidence;
  for (std::size_t i = 0; i < evidence_n; ++i) evidence.push_back(Pos(atoms[k + i]));
  p.evidence = State(evidence);
  // h0 = {base}; h_i adds target t_i, each congruent with one evidence atom.
  std::vector<Hypothesis> hyps;
  std::vector<Literal> acc{Pos(atoms[0])};
  for (std::size_t i = 0; i < k; ++i) {
    if (i) {
      acc.push_back(Pos(atoms[i]));
      p.congruence.push_back({Atom(atoms[k + i - 1]), Atom(atoms[i])});
    }
    hyps.push_back({"h" + std::to_string(i), State(acc)});
  }
  for (std::size_t i = hyps.size(); i > 1; --i) std::swap(hyps[i - 1], hyps[d.Below(i)]);
  p.hypotheses = std::move(hyps);
  return {{std::move(p), "fixed"}};
}

std::vector<Draft> DecisionFraming(const GenConfig& c, Draw& d, const std::string& stem) {
  const auto atoms = d.Sample(c.vocabulary, 3);
  Problem p;
  p.id = stem;
  p.kind = ProblemKind::kDecision;
  if (d.Coin()) {
    // Decoy: the dominated option only changes salience.
    const State competitor{Pos(atoms[0]), Pos(atoms[1])};
    const State target{Pos(atoms[0]), Pos(atoms[2])};
    const State decoy{Pos(atoms[2])};
    p.priorities = State{Pos(atoms[0])};
    const ChoiceMode mode{false, true};
    p.menus.push_back({"small", {{"competitor", competitor}, {"target", target}}, mode});
    p.menus.push_back({"large", {{"competitor", competitor}, {"decoy", decoy}, {"target", target}}, mode});
  } else {
    // Opportunity cost: the explicit framing expands not buying.
    const State fun{Pos(atoms[0])};
    p.priorities = fun;
    p.menus.push_back({"plain", {{"buy", fun}, {"not-buy", State{}}}, {}});
    p.menus.push_back({"explicit", {{"buy", fun}, {"not-buy", State{}}}, ChoiceMode{true, false}});
    p.expansions["not-buy"] = fun;
  }
  return {{std::move(p), "fixed"}};
}

}  // namespace

PredictionRecord Label(const Problem& p) {
  const Prediction pred = Predict(p);
  const ClassicalAnswer classical = Classify(p, pred);
  PredictionRecord r;
  r.id = p.id;
  r.kind = std::string(ToString(p.kind));
  r.etr_prediction = pred.text;
  r.classical_answer = classical.text;
  r.classical_label = classical.label;
  r.fallacy = !classical.sanctioned;
  if (p.kind == ProblemKind::kInference) {
    const State eq = EquilibriumConclusions(Interpretations(p));
    r.equilibrium = eq.empty() ? "nothing" : ToDsl(eq);
  }
  if (p.kind != ProblemKind::kDecision) {
    if (auto q = QueryFor(p, pred, classical)) {
      r.query_statement = q->statement;
      r.query_etr_answer = q->etr_answer;
      r.query_correct_answer = q->correct_answer;
    }
  }
  return r;
}

std::vector<GeneratedInstance> Generate(const GenConfig& cfg) {
  Validate(cfg);
  std::vector<GeneratedInstance> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i);
    const std::string group =
        std::string(ToString(cfg.family)) + "-" + std::to_string(cfg.seed) + "-" + std::to_string(i);
    std::vector<Draft> drafts;
    switch (cfg.family) {
      case Family::kIllusory: drafts = Illusory(cfg, d, group); break;
      case Family::kModusPonens: drafts = ModusPonens(cfg, d, group); break;
      case Family::kConjunctionRanking: drafts = ConjunctionRanking(cfg, d, group); break;
      case Family::kDecisionFraming: drafts = DecisionFraming(cfg, d, group); break;
    }
    for (Draft& draft : drafts) {
      if (!ids.insert(draft.problem.id).second) throw Error("duplicate id " + draft.problem.id);
      PredictionRecord rec = Label(draft.problem);
      draft.problem.expected = rec.etr_prediction;
      out.push_back({std::move(draft.problem), std::move(rec), group, draft.order});
    }
  }
  return out;
}

namespace {

nlohmann::json RecordJson(const PredictionRecord& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["kind"] = r.kind;
  j["etr_prediction"] = r.etr_prediction;
  j["classical_answer"] = r.classical_answer;
  j["classical_label"] = r.classical_label;
  j["fallacy"] = r.fallacy;
  if (r.equilibrium) j["equilibrium"] = *r.equilibrium;
  if (r.query_statement) {
    j["query_statement"] = *r.query_statement;
    j["query_etr_answer"] = *r.query_etr_answer;
    j["query_correct_answer"] = *r.query_correct_answer;
  }
  return j;
}

}  // namespace

std::string ToJsonLine(const PredictionRecord& r) { return RecordJson(r).dump(); }

std::string ToJsonLine(const GeneratedInstance& g) {
  nlohmann::json j = RecordJson(g.prediction);
  j["group"] = g.group;
  j["order"] = g.order;
  j["dsl"] = Serialize(g.problem);
  return j.dump();
}

GeneratedInstance FromJsonLine(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad instance record: ") + e.what());
  }
  GeneratedInstance g;
  try {
    g.problem = ParseProblem(j.at("dsl").get<std::string>());
    g.group = j.at("group").get<std::string>();
    g.order = j.at("order").get<std::string>();
    PredictionRecord& r = g.prediction;
    r.id = j.at("id").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.etr_prediction = j.at("etr_prediction").get<std::string>();
    r.classical_answer = j.at("classical_answer").get<std::string>();
    r.classical_label = j.at("classical_label").get<std::string>();
    r.fallacy = j.at("fallacy").get<bool>();
    if (j.contains("equilibrium")) r.equilibrium = j["equilibrium"].get<std::string>();
    if (j.contains("query_statement")) {
      r.query_statement = j["query_statement"].get<std::string>();
      r.query_etr_answer = j.at("query_etr_answer").get<bool>();
      r.query_correct_answer = j.at("query_correct_answer").get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad instance record: ") + e.what());
  }
  return g;
}

}  // namespace etr
