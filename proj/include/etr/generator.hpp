// Synthetic fallacy-prone problems with engine predictions and classical
// labels, deterministic per seed.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etr/problem.hpp"

namespace etr {

enum class Family { kIllusory, kModusPonens, kConjunctionRanking, kDecisionFraming };
enum class Order { kQuestionFirst, kAnswerFirst, kBoth };

std::string_view ToString(Family f);
std::string_view ToString(Order o);
std::optional<Family> ParseFamily(std::string_view s);
std::optional<Order> ParseOrder(std::string_view s);

std::vector<std::string> DefaultVocabulary();

struct GenConfig {
  std::uint64_t seed = 1;
  Family family = Family::kIllusory;
  std::size_t count = 1;
  std::size_t atoms_per_conjunct = 2;  // 1..3
  std::size_t disjuncts = 2;           // 2..4
  std::vector<std::string> vocabulary = DefaultVocabulary();
  Order order = Order::kQuestionFirst;
};

// Throws ConfigError for out-of-range knobs or a vocabulary too small for
// the requested width.
void Validate(const GenConfig& cfg);

struct PredictionRecord {
  std::string id;
  std::string kind;
  std::string etr_prediction;
  std::string classical_answer;
  std::string classical_label;
  bool fallacy = false;
  std::optional<std::string> equilibrium;  // inference only
  std::optional<std::string> query_statement;
  std::optional<bool> query_etr_answer;
  std::optional<bool> query_correct_answer;

  friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

// Engine prediction plus oracle verdict; fallacy = the prediction is not
// classically sanctioned.
PredictionRecord Label(const Problem& p);

struct GeneratedInstance {
  Problem problem;
  PredictionRecord prediction;
  std::string group;  // shared by the order variants of one draw
  std::string order;  // question-first | answer-first | fixed
};

std::vector<GeneratedInstance> Generate(const GenConfig& cfg);

// One JSON object per line, keys sorted, problem DSL embedded as "dsl".
std::string ToJsonLine(const GeneratedInstance& g);
GeneratedInstance FromJsonLine(const std::string& line);

// JSON fields of a record, shared with the corpus listing.
std::string ToJsonLine(const PredictionRecord& r);

}  // namespace etr
