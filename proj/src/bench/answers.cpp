#include "etr/bench/answers.hpp"

#include <algorithm>

#include "etr/error.hpp"
#include "etr/text.hpp"

namespace etr::bench {

namespace {

std::string Cards(const std::vector<std::string>& cards) {
  if (cards.empty()) return "You do not have to turn over any card.";
  std::vector<std::string> named;
  for (const std::string& c : cards) named.push_back("the " + c + " card");
  return "You have to turn over " + text::JoinAnd(named) + ".";
}

std::string Ranking(const Problem& p, const RankingJudgment& r) {
  std::vector<std::size_t> order(r.hypotheses.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return r.rank[a] > r.rank[b]; });
  std::vector<std::string> labels;
  for (std::size_t i : order) labels.push_back(text::StripPeriod(LabelOf(p, r.hypotheses[i].name)));
  std::string out = "From most to least probable: ";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "; " : "") + labels[i];
  return out + ".";
}

std::string Choice(const Problem& p, const std::vector<MenuChoice>& choices, const std::string& part) {
  for (const MenuChoice& c : choices) {
    if (c.menu != part) continue;
    std::vector<std::string> labels;
    for (const std::string& o : c.chosen) labels.push_back(text::StripPeriod(LabelOf(p, o, part)));
    if (labels.size() == 1) return "I would choose " + labels.front() + ".";
    return "I am indifferent between " + text::JoinAnd(labels) + ".";
  }
  throw Error("problem '" + p.id + "' has no menu '" + part + "'");
}

std::string Follows(const std::string& what) {
  return what.empty() ? "Nothing follows." : "It follows that " + what + ".";
}

}  // namespace

std::string RenderAnswer(const Problem& p, AnswerRole role, Condition c, const std::string& part) {
  const Prediction pred = Predict(p);
  const ClassicalAnswer classical = Classify(p, pred);
  if (c == Condition::kQuery) {
    bool yes = true;
    if (p.kind == ProblemKind::kInference || p.kind == ProblemKind::kQuantified) {
      const auto q = QueryFor(p, pred, classical);
      if (!q) throw Error("problem '" + p.id + "' has no query target");
      yes = role == AnswerRole::kEtr ? q->etr_answer : q->correct_answer;
    } else {
      yes = role == AnswerRole::kEtr || classical.sanctioned;
    }
    return yes ? "Yes, it follows." : "No, it does not follow.";
  }
  const bool etr = role == AnswerRole::kEtr;
  switch (p.kind) {
    case ProblemKind::kInference:
      return Follows(etr ? (pred.conclusion.empty() ? "" : Phrase(p, pred.conclusion))
                         : (classical.consequences.empty() ? "" : Phrase(p, classical.consequences)));
    case ProblemKind::kQuantified: {
      std::vector<std::string> said;
      if (etr) {
        for (const std::string& r : pred.readbacks) said.push_back(RenderReadback(p, r));
      } else {
        for (const QuantPremise& q : classical.valid_readbacks) said.push_back(RenderReadback(p, q));
      }
      return Follows(text::JoinAnd(said));
    }
    case ProblemKind::kSelection:
      return Cards(etr ? pred.selected : classical.correct_cards);
    case ProblemKind::kProbability:
      return Ranking(p, etr ? pred.ranking : classical.reference_ranking);
    case ProblemKind::kDecision:
      return Choice(p, etr ? pred.choices : classical.reference_choices, part);
  }
  return "";
}

std::optional<PromptMatch> MatchPrompt(const std::vector<Problem>& problems, const std::string& prompt) {
  const std::string_view want = text::Trim(prompt);
  for (const Problem& p : problems)
    for (Condition c : {Condition::kProduction, Condition::kQuery})
      for (Template t : {Template::kNone, Template::kControl, Template::kEtr})
        for (const std::string& part : PromptParts(p)) {
          std::string rendered;
          try {
            rendered = RenderPrompt(p, c, t, part);
          } catch (const Error&) {
            continue;
          }
          if (text::Trim(rendered) == want) return PromptMatch{&p, c, t, part};
        }
  return std::nullopt;
}

}  // namespace etr::bench
