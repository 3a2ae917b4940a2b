// Canonical English answers for scripted responders, and matching a
// rendered prompt back to the corpus cell it came from.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etr/problem.hpp"

namespace etr::bench {

enum class AnswerRole { kEtr, kCorrect };

// The answer a responder playing `role` gives to one prompt part.
std::string RenderAnswer(const Problem& p, AnswerRole role, Condition c, const std::string& part);

struct PromptMatch {
  const Problem* problem = nullptr;
  Condition condition = Condition::kProduction;
  Template tmpl = Template::kNone;
  std::string part;
};

// Exact match after trimming surrounding whitespace.
std::optional<PromptMatch> MatchPrompt(const std::vector<Problem>& problems, const std::string& prompt);

}  // namespace etr::bench
