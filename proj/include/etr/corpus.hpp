// Built-in problems: the worked examples with printed vignettes.

#pragma once

#include <string_view>
#include <vector>

#include "etr/problem.hpp"

namespace etr {

// DSL source of the built-in corpus.
std::string_view CorpusText();

// Parsed once; items in source order.
const std::vector<Problem>& Corpus();

// nullptr when absent.
const Problem* FindProblem(const std::vector<Problem>& ps, std::string_view id);

}  // namespace etr
