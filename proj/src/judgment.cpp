#include "etr/judgment.hpp"

#include <algorithm>
#include <set>

#include "etr/error.hpp"

namespace etr {

std::vector<std::string> WasonPredicted(const std::vector<CardSpec>& cards, const WasonRule& rule) {
  const Question reading{State{Pos(rule.antecedent), Pos(rule.consequent)},
                         State{Neg(rule.antecedent)}};
  std::vector<std::string> out;
  for (const CardSpec& card : cards) {
    const Literal shown = Pos(card.visible);
    if (std::any_of(reading.alternatives().begin(), reading.alternatives().end(),
                    [&](const State& s) { return s.Contains(shown); }))
      out.push_back(card.visible);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Support(const State& evidence, const State& hypothesis, const Congruence& congruence) {
  std::size_t n = evidence.Overlap(hypothesis);
  for (const auto& [from, to] : congruence)
    if (evidence.Contains({from, true}) && hypothesis.Contains({to, true})) ++n;
  return n;
}

RankingJudgment RankHypotheses(const State& evidence, const std::vector<Hypothesis>& hypotheses,
                               const Congruence& congruence) {
  if (hypotheses.empty()) throw Error("ranking needs at least one hypothesis");
  std::vector<std::size_t> support;
  for (const Hypothesis& h : hypotheses) support.push_back(Support(evidence, h.state, congruence));
  const std::set<std::size_t> levels(support.begin(), support.end());
  RankingJudgment r{hypotheses, {}};
  for (std::size_t s : support)
    r.rank.push_back(static_cast<int>(std::distance(levels.begin(), levels.find(s))) + 1);
  return r;
}

std::string ToString(const ChoiceMode& m) {
  std::string out;
  if (m.expanded) out = "expanded";
  if (m.decoy_sensitive) out += out.empty() ? "decoy" : "+decoy";
  return out.empty() ? "default" : out;
}

std::optional<ChoiceMode> ParseChoiceMode(std::string_view text) {
  if (text == "default") return ChoiceMode{};
  if (text == "expanded") return ChoiceMode{true, false};
  if (text == "decoy") return ChoiceMode{false, true};
  if (text == "expanded+decoy") return ChoiceMode{true, true};
  return std::nullopt;
}

Choice Choose(const DecisionQuestion& d, const ChoiceMode& mode) {
  if (d.options.empty()) throw Error("decision question has no options");
  std::vector<State> features;
  std::set<std::string> names;
  for (const Option& o : d.options) {
    if (!names.insert(o.name).second) throw Error("duplicate option '" + o.name + "'");
    State f = o.features;
    if (mode.expanded) {
      if (auto it = d.expansions.find(o.name); it != d.expansions.end()) {
        auto merged = f.Union(it->second);
        if (!merged) throw Error("expansion of '" + o.name + "' contradicts its features");
        f = std::move(*merged);
      }
    }
    features.push_back(std::move(f));
  }

  Choice c;
  std::size_t best = 0;
  for (std::size_t i = 0; i < d.options.size(); ++i) {
    std::size_t score = Support(d.priorities, features[i]);
    if (mode.decoy_sensitive) {
      const bool dominates = std::any_of(features.begin(), features.end(), [&](const State& other) {
        return other != features[i] && features[i].ContainsAll(other);
      });
      if (dominates) score += mode.decoy_bonus;
    }
    c.scores[d.options[i].name] = score;
    best = std::max(best, score);
  }
  for (const auto& [name, score] : c.scores)
    if (score == best) c.tied.push_back(name);
  if (c.tied.size() == 1) c.chosen = c.tied.front();
  return c;
}

}  // namespace etr
