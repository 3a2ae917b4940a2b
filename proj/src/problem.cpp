#include "etr/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "etr/error.hpp"
#include "etr/text.hpp"

namespace etr {

std::string_view ToString(ProblemKind k) {
  switch (k) {
    case ProblemKind::kInference: return "inference";
    case ProblemKind::kQuantified: return "quantified";
    case ProblemKind::kSelection: return "selection";
    case ProblemKind::kProbability: return "probability";
    case ProblemKind::kDecision: return "decision";
  }
  return "?";
}

std::optional<ProblemKind> ParseProblemKind(std::string_view s) {
  for (auto k : {ProblemKind::kInference, ProblemKind::kQuantified, ProblemKind::kSelection,
                 ProblemKind::kProbability, ProblemKind::kDecision})
    if (ToString(k) == s) return k;
  return std::nullopt;
}

bool Problem::operator==(const Problem& other) const {
  return Serialize(*this) == Serialize(other);
}

namespace {

class ProblemParser {
 public:
  std::vector<Problem> ParseAll(std::string_view text) {
    std::vector<Problem> out;
    std::optional<Problem> current;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view raw = text.substr(start, end - start);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      start = end + 1;
      const std::size_t indent = raw.find_first_not_of(" \t");
      if (indent == std::string_view::npos || raw[indent] == '#') {
        if (end == text.size()) break;
        continue;
      }
      line_ = number;
      const std::string_view body = text::TrimRight(raw.substr(indent));
      if (body.substr(0, 8) == "problem " || body == "problem") {
        if (current) out.push_back(Finish(std::move(*current)));
        const std::string_view id = text::Trim(body.substr(std::min<std::size_t>(7, body.size())));
        if (!IsIdentifier(id)) Fail("problem id must be an identifier", indent + 8);
        current = Problem{};
        current->id = std::string(id);
        have_kind_ = false;
        problem_line_ = number;
      } else {
        if (!current) Fail("directive before 'problem <id>'", indent + 1);
        Directive(*current, body, indent);
      }
      if (end == text.size()) break;
    }
    if (current) out.push_back(Finish(std::move(*current)));
    return out;
  }

 private:
  [[noreturn]] void Fail(const std::string& msg, std::size_t column) const {
    throw SyntaxError(msg, line_, column);
  }

  Problem Finish(Problem p) {
    if (!have_kind_) {
      line_ = problem_line_;
      Fail("problem '" + p.id + "' has no 'kind:' line", 1);
    }
    try {
      Validate(p);
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw SyntaxError(std::string("problem '") + p.id + "': " + e.what(), problem_line_, 1);
    }
    return p;
  }

  // Runs `f`, translating column-relative syntax errors from sub-parsers.
  template <typename F>
  auto Sub(std::size_t value_col, F&& f) {
    try {
      return f();
    } catch (const SyntaxError& e) {
      Fail(e.what(), value_col + (e.column() ? e.column() - 1 : 0));
    } catch (const UnsupportedPremise& e) {
      Fail(e.what(), value_col);
    } catch (const Error& e) {
      Fail(e.what(), value_col);
    }
  }

  void RequireKind(const Problem& p, ProblemKind k, std::string_view directive, std::size_t col) {
    if (!have_kind_) Fail("'" + std::string(directive) + "' before 'kind:'", col);
    if (p.kind != k)
      Fail("'" + std::string(directive) + "' is not valid for kind " + std::string(ToString(p.kind)),
           col);
  }

  static std::pair<std::string_view, std::string_view> SplitName(std::string_view head) {
    const std::size_t sp = head.find(' ');
    if (sp == std::string_view::npos) return {head, {}};
    return {head.substr(0, sp), text::Trim(head.substr(sp + 1))};
  }

  void Directive(Problem& p, std::string_view body, std::size_t indent) {
    const std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) Fail("expected '<directive>: <value>'", indent + 1);
    const std::string_view head = text::Trim(body.substr(0, colon));
    std::string_view value = body.substr(colon + 1);
    const std::size_t lead = value.find_first_not_of(' ');
    const std::size_t value_col = indent + colon + 2 + (lead == std::string_view::npos ? 0 : lead);
    value = text::Trim(value);
    const auto [key, name] = SplitName(head);
    const std::size_t col = indent + 1;

    auto need_name = [&] {
      if (name.empty()) Fail("'" + std::string(key) + "' needs a name", col);
      if (!IsIdentifier(name) && key != "label") Fail("bad name '" + std::string(name) + "'", col);
    };
    auto no_name = [&] {
      if (!name.empty()) Fail("unexpected '" + std::string(name) + "' after '" + std::string(key) + "'", col);
    };

    if (key == "kind") {
      no_name();
      if (have_kind_) Fail("duplicate 'kind:'", col);
      auto k = ParseProblemKind(value);
      if (!k) Fail("unknown kind '" + std::string(value) + "'", value_col);
      p.kind = *k;
      have_kind_ = true;
    } else if (key == "english") {
      if (value.empty()) Fail("empty english text", value_col);
      if (name.empty()) {
        p.english = std::string(value);
      } else {
        RequireKind(p, ProblemKind::kDecision, "english <menu>", col);
        p.menu_english[std::string(name)] = std::string(value);
      }
    } else if (key == "gloss") {
      need_name();
      if (value.empty()) Fail("empty gloss", value_col);
      p.glosses[std::string(name)] = std::string(value);
    } else if (key == "label") {
      need_name();
      if (value.empty()) Fail("empty label", value_col);
      p.labels[std::string(name)] = std::string(value);
    } else if (key == "noun") {
      no_name();
      if (!IsIdentifier(value)) Fail("noun must be a single word", value_col);
      p.noun = std::string(value);
    } else if (key == "premise") {
      no_name();
      if (!have_kind_) Fail("'premise' before 'kind:'", col);
      if (p.kind == ProblemKind::kQuantified) {
        p.quant_premises.push_back(Sub(value_col, [&] { return ParseQuantPremise(value); }));
      } else {
        RequireKind(p, ProblemKind::kInference, "premise", col);
        Expr e = Sub(value_col, [&] { return ParseExpr(value); });
        Sub(value_col, [&] { return InterpretPremise(e); });
        p.premises.push_back(std::move(e));
      }
    } else if (key == "cards") {
      no_name();
      RequireKind(p, ProblemKind::kSelection, "cards", col);
      std::istringstream in{std::string(value)};
      for (std::string tok; in >> tok;) {
        if (!IsIdentifier(tok)) Fail("bad card token '" + tok + "'", value_col);
        p.cards.push_back(tok);
      }
    } else if (key == "rule") {
      no_name();
      RequireKind(p, ProblemKind::kSelection, "rule", col);
      Expr e = Sub(value_col, [&] { return ParseExpr(value); });
      const auto* c = std::get_if<Cond>(&e);
      if (!c || c->antecedent.literals.size() != 1 || c->consequent.literals.size() != 1 ||
          !c->antecedent.literals[0].positive || !c->consequent.literals[0].positive)
        Fail("rule must be 'if <token> then <token>'", value_col);
      p.rule = WasonRule{c->antecedent.literals[0].atom.id(), c->consequent.literals[0].atom.id()};
      if (KindOf(p.rule->antecedent) == KindOf(p.rule->consequent))
        Fail("rule must relate a letter to a number", value_col);
    } else if (key == "evidence") {
      no_name();
      RequireKind(p, ProblemKind::kProbability, "evidence", col);
      p.evidence = Sub(value_col, [&] { return State(ParseConj(value).literals); });
    } else if (key == "hyp") {
      need_name();
      RequireKind(p, ProblemKind::kProbability, "hyp", col);
      for (const Hypothesis& h : p.hypotheses)
        if (h.name == name) Fail("duplicate hypothesis '" + std::string(name) + "'", col);
      p.hypotheses.push_back(
          {std::string(name), Sub(value_col, [&] { return State(ParseConj(value).literals); })});
    } else if (key == "congruent") {
      no_name();
      RequireKind(p, ProblemKind::kProbability, "congruent", col);
      const std::size_t arrow = value.find("->");
      if (arrow == std::string_view::npos) Fail("expected '<atom> -> <atom>'", value_col);
      const std::string_view from = text::Trim(value.substr(0, arrow));
      const std::string_view to = text::Trim(value.substr(arrow + 2));
      if (!IsIdentifier(from) || !IsIdentifier(to)) Fail("expected '<atom> -> <atom>'", value_col);
      p.congruence.push_back({Atom(std::string(from)), Atom(std::string(to))});
    } else if (key == "menu") {
      need_name();
      RequireKind(p, ProblemKind::kDecision, "menu", col);
      // value: opt <o>: <conj>
      const std::size_t c2 = value.find(':');
      if (value.substr(0, 4) != "opt " || c2 == std::string_view::npos)
        Fail("expected 'menu <m>: opt <o>: <conj>'", value_col);
      const std::string_view opt = text::Trim(value.substr(4, c2 - 4));
      if (!IsIdentifier(opt)) Fail("bad option name '" + std::string(opt) + "'", value_col + 4);
      const std::string_view conj = text::Trim(value.substr(c2 + 1));
      State features;
      if (conj != "none")
        features = Sub(value_col + c2 + 2, [&] { return State(ParseConj(conj).literals); });
      Menu& m = MenuNamed(p, name);
      for (const Option& o : m.options)
        if (o.name == opt) Fail("duplicate option '" + std::string(opt) + "'", value_col + 4);
      m.options.push_back({std::string(opt), std::move(features)});
    } else if (key == "mode") {
      need_name();
      RequireKind(p, ProblemKind::kDecision, "mode", col);
      auto mode = ParseChoiceMode(value);
      if (!mode) Fail("unknown mode '" + std::string(value) + "'", value_col);
      MenuNamed(p, name).mode = *mode;
    } else if (key == "priorities") {
      no_name();
      RequireKind(p, ProblemKind::kDecision, "priorities", col);
      p.priorities = Sub(value_col, [&] { return State(ParseConj(value).literals); });
    } else if (key == "expand") {
      need_name();
      RequireKind(p, ProblemKind::kDecision, "expand", col);
      p.expansions[std::string(name)] =
          Sub(value_col, [&] { return State(ParseConj(value).literals); });
    } else if (key == "ask") {
      no_name();
      if (value == "production") {
        p.query_target.reset();
      } else if (value.substr(0, 6) == "query ") {
        const std::string_view target = text::Trim(value.substr(6));
        if (!have_kind_) Fail("'ask: query' before 'kind:'", col);
        if (p.kind == ProblemKind::kQuantified) {
          QuantPremise q = Sub(value_col + 6, [&] { return ParseQuantPremise(target); });
          if (q.kind != QuantPremise::Kind::kSome) Fail("query target must be 'some <p> are <q>'", value_col + 6);
        } else if (p.kind == ProblemKind::kInference) {
          Sub(value_col + 6, [&] { return State(ParseConj(target).literals); });
        } else {
          Fail("'ask: query <target>' is only valid for inference and quantified kinds", value_col);
        }
        p.query_target = std::string(target);
      } else {
        Fail("expected 'production' or 'query <target>'", value_col);
      }
    } else if (key == "expect") {
      no_name();
      if (value.empty()) Fail("empty expectation", value_col);
      p.expected = std::string(value);
    } else {
      Fail("unknown directive '" + std::string(key) + "'", col);
    }
  }

  static Menu& MenuNamed(Problem& p, std::string_view name) {
    for (Menu& m : p.menus)
      if (m.name == name) return m;
    p.menus.push_back({std::string(name), {}, {}});
    return p.menus.back();
  }

  std::size_t line_ = 0;
  std::size_t problem_line_ = 0;
  bool have_kind_ = false;
};

}  // namespace

std::vector<Problem> ParseProblems(std::string_view text) { return ProblemParser().ParseAll(text); }

Problem ParseProblem(std::string_view text) {
  std::vector<Problem> ps = ParseProblems(text);
  if (ps.size() != 1)
    throw SyntaxError("expected exactly one problem, found " + std::to_string(ps.size()), 0, 0);
  return std::move(ps.front());
}

void Validate(const Problem& p) {
  switch (p.kind) {
    case ProblemKind::kInference:
      if (p.premises.empty()) throw Error("inference problem needs at least one premise");
      break;
    case ProblemKind::kQuantified:
      if (p.quant_premises.empty()) throw Error("quantified problem needs at least one premise");
      break;
    case ProblemKind::kSelection:
      if (!p.rule) throw Error("selection problem needs a 'rule:' line");
      if (p.cards.empty()) throw Error("selection problem needs a 'cards:' line");
      break;
    case ProblemKind::kProbability:
      if (p.hypotheses.empty()) throw Error("probability problem needs at least one hypothesis");
      break;
    case ProblemKind::kDecision:
      if (p.menus.empty()) throw Error("decision problem needs at least one menu");
      for (const Menu& m : p.menus)
        if (m.options.empty()) throw Error("menu '" + m.name + "' has no options");
      for (const auto& [menu, _] : p.menu_english)
        if (std::none_of(p.menus.begin(), p.menus.end(), [&](const Menu& m) { return m.name == menu; }))
          throw Error("english for unknown menu '" + menu + "'");
      break;
  }
}

std::string Serialize(const Problem& p) {
  std::ostringstream out;
  out << "problem " << p.id << "\n";
  out << "kind: " << ToString(p.kind) << "\n";
  if (p.english) out << "english: " << *p.english << "\n";
  for (const Menu& m : p.menus)
    if (auto it = p.menu_english.find(m.name); it != p.menu_english.end())
      out << "english " << m.name << ": " << it->second << "\n";
  for (const auto& [atom, text] : p.glosses) out << "gloss " << atom << ": " << text << "\n";
  for (const auto& [name, text] : p.labels) out << "label " << name << ": " << text << "\n";
  if (p.noun) out << "noun: " << *p.noun << "\n";
  for (const Expr& e : p.premises) out << "premise: " << ToDsl(e) << "\n";
  for (const QuantPremise& q : p.quant_premises) out << "premise: " << ToDsl(q) << "\n";
  if (!p.cards.empty()) {
    out << "cards:";
    for (const std::string& c : p.cards) out << " " << c;
    out << "\n";
  }
  if (p.rule) out << "rule: if " << p.rule->antecedent << " then " << p.rule->consequent << "\n";
  if (p.kind == ProblemKind::kProbability && !p.evidence.empty())
    out << "evidence: " << ToDsl(p.evidence) << "\n";
  for (const Hypothesis& h : p.hypotheses) out << "hyp " << h.name << ": " << ToDsl(h.state) << "\n";
  for (const auto& [from, to] : p.congruence) out << "congruent: " << from.id() << " -> " << to.id() << "\n";
  for (const Menu& m : p.menus) {
    for (const Option& o : m.options)
      out << "menu " << m.name << ": opt " << o.name << ": "
          << (o.features.empty() ? "none" : ToDsl(o.features)) << "\n";
    if (m.mode != ChoiceMode{}) out << "mode " << m.name << ": " << ToString(m.mode) << "\n";
  }
  if (!p.priorities.empty()) out << "priorities: " << ToDsl(p.priorities) << "\n";
  for (const auto& [opt, s] : p.expansions) out << "expand " << opt << ": " << ToDsl(s) << "\n";
  out << "ask: " << (p.query_target ? "query " + *p.query_target : std::string("production")) << "\n";
  if (p.expected) out << "expect: " << *p.expected << "\n";
  return out.str();
}

std::string Serialize(const std::vector<Problem>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += "\n";
    out += Serialize(ps[i]);
  }
  return out;
}

// --- predictions ---

std::vector<PremiseInterp> Interpretations(const Problem& p) {
  std::vector<PremiseInterp> out;
  for (const Expr& e : p.premises) out.push_back(InterpretPremise(e));
  return out;
}

namespace {

std::vector<CardSpec> Cards(const Problem& p) {
  std::vector<CardSpec> out;
  for (const std::string& c : p.cards) out.push_back(CardSpec::FromToken(c));
  return out;
}

std::string JoinWords(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string RankingText(const RankingJudgment& r) {
  std::vector<std::size_t> order(r.hypotheses.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (r.rank[a] != r.rank[b]) return r.rank[a] > r.rank[b];
    return r.hypotheses[a].name < r.hypotheses[b].name;
  });
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) out += r.rank[order[k]] == r.rank[order[k - 1]] ? " = " : " > ";
    out += r.hypotheses[order[k]].name;
  }
  return out;
}

std::string ChoicesText(const std::vector<MenuChoice>& choices) {
  std::string out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (i) out += "; ";
    const MenuChoice& c = choices[i];
    out += c.menu + ": ";
    out += c.chosen.size() == 1 ? c.chosen.front() : "indifferent(" + JoinWords(c.chosen, ",") + ")";
  }
  return out;
}

DecisionQuestion QuestionFor(const Problem& p, const Menu& m) {
  return {m.options, p.priorities, p.expansions};
}

std::vector<std::string> OptionNames(const Menu& m) {
  std::vector<std::string> out;
  for (const Option& o : m.options) out.push_back(o.name);
  return out;
}

}  // namespace

Prediction Predict(const Problem& p) {
  Validate(p);
  Prediction pred;
  pred.kind = p.kind;
  switch (p.kind) {
    case ProblemKind::kInference: {
      pred.chain = RunChain(Interpretations(p));
      pred.conclusion = pred.chain->conclusion;
      pred.text = pred.conclusion.empty() ? "nothing" : ToDsl(pred.conclusion);
      break;
    }
    case ProblemKind::kQuantified: {
      GroundedRun run = RunQuantified(p.quant_premises);
      pred.readbacks = run.readbacks;
      pred.chain = std::move(run.chain);
      pred.text = pred.readbacks.empty() ? "nothing" : JoinWords(pred.readbacks, "; ");
      break;
    }
    case ProblemKind::kSelection:
      pred.selected = WasonPredicted(Cards(p), *p.rule);
      pred.text = pred.selected.empty() ? "none" : JoinWords(pred.selected, " ");
      break;
    case ProblemKind::kProbability:
      pred.ranking = RankHypotheses(p.evidence, p.hypotheses, p.congruence);
      pred.text = RankingText(pred.ranking);
      break;
    case ProblemKind::kDecision:
      for (const Menu& m : p.menus) {
        Choice c = Choose(QuestionFor(p, m), m.mode);
        pred.choices.push_back({m.name, OptionNames(m), c.tied});
      }
      pred.text = ChoicesText(pred.choices);
      break;
  }
  return pred;
}

ClassicalAnswer Classify(const Problem& p, const Prediction& pred) {
  ClassicalAnswer a;
  switch (p.kind) {
    case ProblemKind::kInference: {
      const auto interps = Interpretations(p);
      a.consequences = ClassicalConsequences(interps).Minus(AssertedLiterals(interps));
      a.text = a.consequences.empty() ? "nothing" : ToDsl(a.consequences);
      a.sanctioned = Entails(interps, pred.conclusion);
      a.label = a.sanctioned ? "valid" : "invalid";
      break;
    }
    case ProblemKind::kQuantified: {
      a.valid_readbacks = ValidExistentials(p.quant_premises);
      std::vector<std::string> texts;
      for (const QuantPremise& q : a.valid_readbacks) texts.push_back(ToDsl(q));
      a.text = texts.empty() ? "nothing" : JoinWords(texts, "; ");
      a.sanctioned = std::all_of(pred.readbacks.begin(), pred.readbacks.end(), [&](const std::string& r) {
        return MonadicEntails(p.quant_premises, ParseQuantPremise(r));
      });
      a.label = a.sanctioned ? "valid" : "invalid";
      break;
    }
    case ProblemKind::kSelection:
      a.correct_cards = WasonCorrect(Cards(p), *p.rule);
      a.text = a.correct_cards.empty() ? "none" : JoinWords(a.correct_cards, " ");
      a.sanctioned = a.correct_cards == pred.selected;
      a.label = a.sanctioned ? "correct" : "incorrect";
      break;
    case ProblemKind::kProbability: {
      // Fewer literals is never less probable; equal sizes tie.
      std::size_t largest = 0;
      for (const Hypothesis& h : p.hypotheses) largest = std::max(largest, h.state.size());
      a.reference_ranking.hypotheses = p.hypotheses;
      for (const Hypothesis& h : p.hypotheses)
        a.reference_ranking.rank.push_back(static_cast<int>(largest - h.state.size()) + 1);
      a.text = RankingText(a.reference_ranking);
      a.sanctioned = CoherenceViolations(pred.ranking).empty();
      a.label = a.sanctioned ? "coherent" : "incoherent";
      break;
    }
    case ProblemKind::kDecision: {
      std::vector<MenuChoice> menus;
      for (const Menu& m : p.menus) menus.push_back({m.name, OptionNames(m), {}});
      a.reference_choices = ConsistentReferenceChoices(std::move(menus));
      a.text = ChoicesText(a.reference_choices);
      a.sanctioned = ChoiceConsistency(pred.choices).empty();
      a.label = a.sanctioned ? "consistent" : "inconsistent";
      break;
    }
  }
  return a;
}

std::optional<QuerySpec> QueryFor(const Problem& p, const Prediction& pred,
                                  const ClassicalAnswer& classical) {
  switch (p.kind) {
    case ProblemKind::kInference: {
      State target;
      if (p.query_target) {
        target = State(ParseConj(*p.query_target).literals);
      } else if (!pred.conclusion.empty()) {
        target = pred.conclusion;
      } else {
        return std::nullopt;
      }
      return QuerySpec{Phrase(p, target), FollowsQuery(pred.chain->final_question, target),
                       Entails(Interpretations(p), target)};
    }
    case ProblemKind::kQuantified: {
      std::string target;
      if (p.query_target) {
        target = *p.query_target;
      } else if (!pred.readbacks.empty()) {
        target = pred.readbacks.front();
      } else {
        return std::nullopt;
      }
      const QuantPremise q = ParseQuantPremise(target);
      const bool etr = std::find(pred.readbacks.begin(), pred.readbacks.end(), ToDsl(q)) !=
                       pred.readbacks.end();
      return QuerySpec{RenderReadback(p, q), etr, MonadicEntails(p.quant_premises, q)};
    }
    case ProblemKind::kSelection: {
      std::vector<std::string> named;
      for (const std::string& c : pred.selected) named.push_back("the " + c + " card");
      std::string statement = named.empty() ? "you do not have to turn over any card"
                                            : "you have to turn over " + text::JoinAnd(named);
      return QuerySpec{statement, true, classical.sanctioned};
    }
    case ProblemKind::kProbability: {
      // Names in predicted order, read back from the canonical text.
      std::vector<std::string> labels;
      std::istringstream in(pred.text);
      for (std::string tok; in >> tok;)
        if (tok != ">" && tok != "=") labels.push_back(LabelOf(p, tok));
      std::string statement = "the ranking from highest to lowest probability is: ";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) statement += "; ";
        statement += text::StripPeriod(labels[i]);
      }
      return QuerySpec{statement, true, classical.sanctioned};
    }
    case ProblemKind::kDecision:
      return QuerySpec{"", true, classical.sanctioned};
  }
  return std::nullopt;
}

// --- English ---

namespace {

std::string AtomWords(const std::string& id) {
  std::string out = id;
  std::replace(out.begin(), out.end(), '-', ' ');
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

std::string WithArticle(const std::string& word) {
  const char c = word.empty() ? 'x' : static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
  const bool vowel = std::string_view("aeiou").find(c) != std::string_view::npos;
  return (vowel ? "an " : "a ") + word;
}

std::string Sentence(std::string s) {
  s = text::Capitalize(s);
  if (!s.empty() && s.back() != '.' && s.back() != '?' && s.back() != '!') s += '.';
  return s;
}

}  // namespace

std::string Phrase(const Problem& p, const Literal& l) {
  auto it = p.glosses.find(l.atom.id());
  if (it != p.glosses.end()) return l.positive ? it->second : "it is not the case that " + it->second;
  const std::string words = AtomWords(l.atom.id());
  return l.positive ? "there is " + WithArticle(words) : "there is no " + words;
}

std::string Phrase(const Problem& p, const State& s) {
  std::vector<std::string> parts;
  for (const Literal& l : s.literals()) parts.push_back(Phrase(p, l));
  return parts.empty() ? "nothing" : text::JoinAnd(parts);
}

namespace {

std::string PhraseConj(const Problem& p, const Conj& c) {
  std::vector<std::string> parts;
  for (const Literal& l : c.literals) parts.push_back(Phrase(p, l));
  return text::JoinAnd(parts);
}

std::string PremiseSentence(const Problem& p, const Expr& e) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Conj>) {
          return Sentence(PhraseConj(p, x));
        } else if constexpr (std::is_same_v<T, Disj>) {
          std::string out = "Either ";
          for (std::size_t i = 0; i < x.disjuncts.size(); ++i) {
            if (i) out += ", or ";
            out += PhraseConj(p, x.disjuncts[i]);
          }
          return Sentence(out);
        } else {
          return Sentence("If " + PhraseConj(p, x.antecedent) + ", then " + PhraseConj(p, x.consequent));
        }
      },
      e);
}

std::string Noun(const Problem& p) { return p.noun.value_or("things"); }

std::string QuantSentence(const Problem& p, const QuantPremise& q) {
  return std::string(q.kind == QuantPremise::Kind::kSome ? "some " : "all ") + AtomWords(q.subject) +
         " " + Noun(p) + " are " + AtomWords(q.predicate);
}

std::string Side(const Problem& p, const std::string& token) {
  auto it = p.labels.find(token);
  return it != p.labels.end() ? it->second : WithArticle(token);
}

std::string RuleSentence(const Problem& p) {
  return "If a card has " + Side(p, p.rule->antecedent) + " on one side then it has " +
         Side(p, p.rule->consequent) + " on the other side.";
}

const Menu& MenuOf(const Problem& p, const std::string& part) {
  for (const Menu& m : p.menus)
    if (m.name == part) return m;
  throw Error("problem '" + p.id + "' has no menu '" + part + "'");
}

// The problem text without any condition suffix. Selection, probability and
// decision problems carry their own question; an english line replaces all
// of it.
std::string Body(const Problem& p, const std::string& part) {
  if (p.kind == ProblemKind::kDecision) {
    const Menu& m = MenuOf(p, part);
    if (auto it = p.menu_english.find(part); it != p.menu_english.end()) return it->second;
    if (p.english) return *p.english;
    std::string out = "Which of the following would you choose?";
    for (std::size_t i = 0; i < m.options.size(); ++i)
      out += " " + std::to_string(i + 1) + ". " + Sentence(LabelOf(p, m.options[i].name, m.name));
    return out;
  }
  if (p.english) return *p.english;
  std::vector<std::string> sentences;
  switch (p.kind) {
    case ProblemKind::kInference:
      for (const Expr& e : p.premises) sentences.push_back(PremiseSentence(p, e));
      break;
    case ProblemKind::kQuantified:
      for (const QuantPremise& q : p.quant_premises) sentences.push_back(Sentence(QuantSentence(p, q)));
      break;
    case ProblemKind::kSelection: {
      sentences.push_back(
          "There are several cards on the table, which have a letter on one side and a number on "
          "the other side.");
      std::vector<std::string> shows;
      for (const std::string& c : p.cards) shows.push_back("one card shows " + WithArticle(c));
      sentences.push_back(Sentence(text::JoinList(shows, "and")));
      sentences.push_back(
          "Which cards do you have to turn over to determine if the following statement is true?");
      sentences.push_back(RuleSentence(p));
      break;
    }
    case ProblemKind::kProbability:
      for (const Literal& l : p.evidence.literals()) sentences.push_back(Sentence(Phrase(p, l)));
      sentences.push_back("Please rank order by probability (highest to lowest) the following:");
      for (const Hypothesis& h : p.hypotheses) sentences.push_back(Sentence(LabelOf(p, h.name)));
      break;
    case ProblemKind::kDecision:
      break;
  }
  return JoinWords(sentences, " ");
}

}  // namespace

std::string LabelOf(const Problem& p, const std::string& name, const std::string& menu) {
  if (!menu.empty())
    if (auto it = p.labels.find(menu + "/" + name); it != p.labels.end()) return it->second;
  if (auto it = p.labels.find(name); it != p.labels.end()) return it->second;
  for (const Hypothesis& h : p.hypotheses)
    if (h.name == name) return Sentence(Phrase(p, h.state));
  return name;
}

std::string RenderReadback(const Problem& p, const QuantPremise& s) { return QuantSentence(p, s); }

std::string RenderReadback(const Problem& p, const std::string& readback) {
  return RenderReadback(p, ParseQuantPremise(readback));
}

std::string_view ToString(Condition c) { return c == Condition::kQuery ? "query" : "production"; }

std::string_view ToString(Template t) {
  switch (t) {
    case Template::kNone: return "none";
    case Template::kControl: return "control";
    case Template::kEtr: return "etr";
  }
  return "?";
}

std::optional<Condition> ParseCondition(std::string_view s) {
  if (s == "production") return Condition::kProduction;
  if (s == "query") return Condition::kQuery;
  return std::nullopt;
}

std::optional<Template> ParseTemplate(std::string_view s) {
  for (auto t : {Template::kNone, Template::kControl, Template::kEtr})
    if (ToString(t) == s) return t;
  return std::nullopt;
}

std::vector<std::string> PromptParts(const Problem& p) {
  if (p.kind != ProblemKind::kDecision) return {""};
  std::vector<std::string> out;
  for (const Menu& m : p.menus) out.push_back(m.name);
  return out;
}

std::string WrapTemplate(Template t, const std::string& prompt) {
  switch (t) {
    case Template::kNone: return prompt;
    case Template::kControl: return std::string(kControlPreamble) + " " + prompt;
    case Template::kEtr: return std::string(kEtrPreamble) + " " + prompt;
  }
  return prompt;
}

std::string QueryStatement(const Problem& p, const std::string& part) {
  const Prediction pred = Predict(p);
  const ClassicalAnswer classical = Classify(p, pred);
  const auto query = QueryFor(p, pred, classical);
  if (!query)
    throw Error("problem '" + p.id + "' has no query target: nothing is predicted to follow and "
                "no 'ask: query' line is given");
  if (p.kind != ProblemKind::kDecision) return query->statement;
  for (const MenuChoice& mc : pred.choices) {
    if (mc.menu != part) continue;
    std::vector<std::string> labels;
    for (const std::string& o : mc.chosen) labels.push_back(text::StripPeriod(LabelOf(p, o, part)));
    return labels.size() == 1 ? "you would choose " + labels.front()
                              : "you would be indifferent between " + text::JoinList(labels, "and");
  }
  throw Error("problem '" + p.id + "' has no menu '" + part + "'");
}

std::string RenderPrompt(const Problem& p, Condition c, Template t, const std::string& part) {
  const std::string body = Body(p, part);
  std::string suffix;
  if (c == Condition::kProduction) {
    if (p.kind == ProblemKind::kInference || p.kind == ProblemKind::kQuantified)
      suffix = std::string(kProductionSuffix);
  } else {
    suffix = "Does it follow that " + QueryStatement(p, part) + "?";
  }
  std::string prompt = body;
  if (!suffix.empty()) prompt += (prompt.empty() ? "" : " ") + suffix;
  return WrapTemplate(t, prompt);
}

}  // namespace etr
