// Acceptance suite: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "etr/bench/harness.hpp"
#include "etr/bench/report.hpp"
#include "etr/bench/score.hpp"
#include "etr/bench/wilcoxon.hpp"
#include "etr/corpus.hpp"
#include "etr/generator.hpp"
#include "etr/judgment.hpp"
#include "etr/oracles.hpp"
#include "etr/problem.hpp"

namespace {

using namespace etr;

struct Failed {
  std::string why;
};

void Check(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

State S(const std::string& conj) { return State(ParseConj(conj).literals); }

std::vector<PremiseInterp> Interps(std::initializer_list<const char*> ps) {
  std::vector<PremiseInterp> out;
  for (const char* p : ps) out.push_back(InterpretPremise(ParseExpr(p)));
  return out;
}

const Problem& Item(const char* id) {
  const Problem* p = FindProblem(Corpus(), id);
  if (!p) throw Failed{std::string("corpus lacks ") + id};
  return *p;
}

void IllusoryInference() {
  const auto ps = Interps({"(ace & queen) | (king & jack)", "ace"});
  Check(RunChain(ps).conclusion == S("queen"), "engine conclusion is not {queen}");
  Check(!Entails(ps, S("queen")), "oracle says queen is entailed");
  Check(!EquilibriumConclusions(ps).Contains(Pos("queen")), "queen survives equilibrium");
  Check(Label(Item("illusory-ace-queen")).fallacy, "corpus item not labelled fallacious");
}

void ModusPonens() {
  const auto ps = Interps({"if ace then king", "ace"});
  Check(RunChain(ps).conclusion == S("king"), "engine conclusion is not {king}");
  Check(Entails(ps, S("king")), "king not entailed");
  Check(EquilibriumConclusions(ps).Contains(Pos("king")), "king not in equilibrium");
}

void OrderEffect() {
  Check(RunChain(Interps({"ace", "(ace & queen) | (king & jack)"})).conclusion.empty(),
        "reversed order still concludes something");
  GenConfig cfg;
  cfg.count = 1000;
  cfg.seed = 2024;
  cfg.order = Order::kBoth;
  const auto gs = Generate(cfg);
  Check(gs.size() == 2000, "expected 1000 order pairs");
  for (std::size_t i = 0; i < gs.size(); i += 2) {
    const auto& qf = gs[i];
    const auto& af = gs[i + 1];
    Check(qf.group == af.group, "pair group mismatch at " + qf.problem.id);
    Check(af.prediction.etr_prediction == "nothing", af.problem.id + " yields " + af.prediction.etr_prediction);
    Check(af.prediction.etr_prediction != qf.prediction.etr_prediction, qf.problem.id + " shows no order effect");
  }
}

void Syllogism() {
  const std::vector<QuantPremise> ps{Some("blue", "textured"), All("square", "blue")};
  const GroundedRun r = RunQuantified(ps);
  Check(r.readbacks == std::vector<std::string>{"some square are textured"}, "unexpected readback");
  Check(!MonadicEntails(ps, Some("square", "textured")), "monadic oracle calls it valid");
}

void Wason() {
  std::vector<CardSpec> cards;
  for (const char* t : {"E", "C", "4", "5"}) cards.push_back(CardSpec::FromToken(t));
  const WasonRule rule{"E", "4"};
  Check(WasonPredicted(cards, rule) == std::vector<std::string>{"4", "E"}, "predicted selection is not {E,4}");
  Check(WasonCorrect(cards, rule) == std::vector<std::string>{"5", "E"}, "correct selection is not {E,5}");
}

void Conjunction() {
  const RankingJudgment linda = RankHypotheses(
      S("philosophy & social-justice"), {{"teller", S("teller")}, {"teller-feminist", S("teller & feminist")}},
      {{Atom("social-justice"), Atom("feminist")}});
  Check(linda.rank[1] > linda.rank[0], "Linda conjunction not ranked above its conjunct");
  Check(CoherenceViolations(linda).size() == 1, "Linda: expected exactly one violation");

  const RankingJudgment math = RankHypotheses(
      S("math-genius & outdoorswoman"),
      {{"climber", S("climber")}, {"scientist-climber", S("computer-scientist & climber")}},
      {{Atom("math-genius"), Atom("computer-scientist")}, {Atom("outdoorswoman"), Atom("climber")}});
  Check(math.rank[1] > math.rank[0], "math-genius conjunction not ranked above its conjunct");
  Check(CoherenceViolations(math).size() == 1, "math-genius: expected exactly one violation");
}

void Decisions() {
  DecisionQuestion video{{{"buy", S("fun")}, {"not-buy", State{}}}, S("fun"), {{"not-buy", S("fun")}}};
  Check(Choose(video).chosen == std::optional<std::string>("buy"), "default choice is not buy");
  ChoiceMode expanded;
  expanded.expanded = true;
  Check(!Choose(video, expanded).chosen, "expanded choice is not indifferent");

  ChoiceMode decoy;
  decoy.decoy_sensitive = true;
  DecisionQuestion two{{{"web-only", S("web & cheap")}, {"print-web", S("print & web")}}, S("web"), {}};
  DecisionQuestion three = two;
  three.options.push_back({"print-only", S("print")});
  Check(Choose(two, decoy).chosen != std::optional<std::string>("print-web"),
        "print & web already chosen without the decoy");
  Check(Choose(three, decoy).chosen == std::optional<std::string>("print-web"),
        "decoy does not shift the choice to print & web");
}

void EquilibriumSoundness() {
  std::size_t instances = 0, literals = 0;
  for (Family f : {Family::kIllusory, Family::kModusPonens}) {
    for (std::size_t width : {2u, 3u}) {
      GenConfig cfg;
      cfg.family = f;
      cfg.count = 150;
      cfg.seed = 99 + width;
      cfg.disjuncts = width + 1;
      cfg.atoms_per_conjunct = width;
      cfg.order = Order::kBoth;
      for (const auto& g : Generate(cfg)) {
        const auto ps = Interpretations(g.problem);
        Check(PremiseAtoms(ps).size() <= kDefaultEquilibriumAtomCap, g.problem.id + " exceeds 12 atoms");
        const State eq = EquilibriumConclusions(ps);
        for (const Literal& l : eq.literals()) {
          ++literals;
          if (!Entails(ps, State{l})) throw Failed{g.problem.id + ": " + ToDsl(l) + " not entailed"};
        }
        ++instances;
      }
    }
  }
  Check(instances >= 1000, "fewer than 1000 instances");
  Check(literals > 0, "no equilibrium conclusions at all");
}

void GeneratorSoundness() {
  for (Family f : {Family::kIllusory, Family::kModusPonens, Family::kConjunctionRanking, Family::kDecisionFraming}) {
    GenConfig cfg;
    cfg.family = f;
    cfg.count = 250;
    cfg.seed = 31;
    std::string first, second;
    for (const auto& g : Generate(cfg)) {
      const std::string line = ToJsonLine(g);
      first += line + "\n";
      GeneratedInstance back = FromJsonLine(line);
      back.prediction = Label(back.problem);
      Check(ToJsonLine(back) == line, "relabel differs for " + g.problem.id);
    }
    for (const auto& g : Generate(cfg)) second += ToJsonLine(g) + "\n";
    Check(first == second, std::string("same-seed runs differ for ") + std::string(ToString(f)));
  }
}

void Wilcoxon() {
  const auto shift = bench::WilcoxonSignedRank({1, 2, 3, 4, 5}, {2, 3, 4, 5, 6});
  Check(shift.p == 0.0625, "uniform shift p = " + std::to_string(shift.p));
  Check(bench::WilcoxonSignedRank({1, 2, 3}, {1, 2, 3}).p == 1.0, "zero differences p != 1");
  const auto discordant = bench::WilcoxonSignedRank({1, 1, 1, 0}, {0, 0, 0, 0});
  Check(discordant.p == 0.25, "three discordant pairs p = " + std::to_string(discordant.p));
  std::mt19937 rng(10);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<double> x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = rng() % 6, y[j] = rng() % 6;
    Check(bench::WilcoxonSignedRank(x, y).p == bench::WilcoxonSignedRank(y, x).p, "swap changes p");
  }
}

bench::Report BenchReport(const std::string& script, const std::string& group) {
  bench::RunConfig cfg;
  cfg.problems = Corpus();
  cfg.responder = std::string(ETR_RESPONDER_DIR) + "/" + script;
  cfg.jobs = 4;
  cfg.timeout_seconds = 30;
  const auto ts = bench::RunBench(cfg);
  for (const auto& t : ts) Check(t.error.empty(), script + ": " + t.problem + ": " + t.error);
  const auto scored = bench::Score(ts, bench::BuildScoreKey(Corpus()), group);
  return bench::Aggregate(scored.records);
}

const bench::Fraction& MeasureOf(const bench::Report& r, bench::Measure m) {
  for (std::size_t i = 0; i < std::size(bench::kAllMeasures); ++i)
    if (bench::kAllMeasures[i] == m) return r.groups.at(0).measures.at(i);
  throw Failed{"missing measure"};
}

void EndToEnd() {
  std::size_t fallacious = 0;
  for (const Problem& p : Corpus()) fallacious += Label(p).fallacy;

  const bench::Report mimic = BenchReport("etr_mimic.sh", "mimic");
  const auto& etr = MeasureOf(mimic, bench::Measure::kEtrProduced);
  Check(etr.den == Corpus().size() && etr.num == etr.den, "mimic ETR-produced is not 100%");
  const auto& fal = MeasureOf(mimic, bench::Measure::kFallacyProduced);
  Check(fal.den == Corpus().size() && fal.num == fallacious,
        "mimic fallacy-produced " + std::to_string(fal.num) + "/" + std::to_string(fal.den) + " vs corpus " +
            std::to_string(fallacious));

  const bench::Report oracle = BenchReport("oracle_responder.sh", "oracle");
  const auto& correct = MeasureOf(oracle, bench::Measure::kCorrectProduced);
  Check(correct.den == Corpus().size() && correct.num == correct.den, "oracle correct-produced is not 100%");
}

void Templates() {
  const Problem& p = Item("illusory-ace-queen");
  const std::string control = RenderPrompt(p, Condition::kProduction, Template::kControl);
  const std::string etr = RenderPrompt(p, Condition::kQuery, Template::kEtr);
  Check(control.rfind("Reason step-by-step for the following problem.", 0) == 0, "control wording");
  Check(etr.find("turn each premise into a question") != std::string::npos, "ETR wording");
  Check(etr.rfind("Answer the following question according to this procedure:", 0) == 0, "ETR opening");
  const std::string plain = RenderPrompt(p, Condition::kProduction, Template::kNone);
  Check(control.find(plain) != std::string::npos, "control does not embed the prompt");
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<void()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "illusory inference", 1, IllusoryInference},
      {2, "modus ponens", 1, ModusPonens},
      {3, "order effect", 30, OrderEffect},
      {4, "quantified syllogism", 1, Syllogism},
      {5, "card selection", 1, Wason},
      {6, "conjunction rankings", 1, Conjunction},
      {7, "decisions", 1, Decisions},
      {8, "equilibrium soundness", 300, EquilibriumSoundness},
      {9, "generator soundness", 60, GeneratorSoundness},
      {10, "wilcoxon", 10, Wilcoxon},
      {11, "end-to-end harness", 60, EndToEnd},
      {12, "prompt templates", 1, Templates},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failed& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && secs > c.limit_seconds) why = "over time limit";
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (why.empty() ? "PASS" : "FAIL") << " " << c.number << " " << c.name << " (" << secs << " s, limit "
         << c.limit_seconds << " s)";
    if (!why.empty()) line << ": " << why;
    std::cout << line.str() << std::endl;
    failures += !why.empty();
  }
  return failures ? 1 : 0;
}
