// Predicted judgments beyond plain inference: Wason card selection,
// probability ranking by erotetic support, and choice by priority overlap.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etr/logic.hpp"
#include "etr/oracles.hpp"

namespace etr {

// Cards whose visible token occurs positively in some alternative of the
// rule read as {{antecedent, consequent}, {~antecedent}}.
std::vector<std::string> WasonPredicted(const std::vector<CardSpec>& cards, const WasonRule& rule);

// Evidence atom -> hypothesis atom pairs that count as support.
using Congruence = std::vector<std::pair<Atom, Atom>>;

std::size_t Support(const State& evidence, const State& hypothesis,
                    const Congruence& congruence = {});

// Dense ranks by descending support: equal support shares a rank, and a
// higher rank means judged more probable.
RankingJudgment RankHypotheses(const State& evidence, const std::vector<Hypothesis>& hypotheses,
                               const Congruence& congruence = {});

struct Option {
  std::string name;
  State features;
};

struct DecisionQuestion {
  std::vector<Option> options;
  State priorities;
  std::map<std::string, State> expansions;  // option name -> features added by inquiry
};

struct ChoiceMode {
  bool expanded = false;
  bool decoy_sensitive = false;
  std::size_t decoy_bonus = 1;

  friend bool operator==(const ChoiceMode&, const ChoiceMode&) = default;
};

std::string ToString(const ChoiceMode& m);
// "default", "expanded", "decoy", "expanded+decoy".
std::optional<ChoiceMode> ParseChoiceMode(std::string_view text);

struct Choice {
  std::optional<std::string> chosen;  // nullopt == indifferent
  std::vector<std::string> tied;      // argmax set, sorted
  std::map<std::string, std::size_t> scores;
};

// Score = support(priorities, features). Expanded mode first adds each
// option's expansion; decoy-sensitive mode adds the bonus to options whose
// features strictly contain another present option's. A unique argmax wins,
// otherwise the chooser is indifferent. Throws etr::Error on duplicate names
// or an empty menu.
Choice Choose(const DecisionQuestion& d, const ChoiceMode& mode = {});

}  // namespace etr
