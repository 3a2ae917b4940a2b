// Scoring transcripts against engine predictions and classical answers.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etr/bench/harness.hpp"
#include "etr/problem.hpp"

namespace etr::bench {

// All groups must match; a group matches when any of its phrases does.
using Pattern = std::vector<std::vector<std::string>>;

// Lowercase, punctuation to spaces, articles dropped, single spaces.
std::string Normalize(std::string_view s);
// Word-aligned containment after normalizing both sides.
bool ContainsPhrase(std::string_view haystack, std::string_view phrase);
bool Matches(std::string_view response, const Pattern& p);

// "nothing follows" and its usual variants.
const std::vector<std::string>& NothingFollows();

struct KeyEntry {
  Problem problem;
  Prediction prediction;
  ClassicalAnswer classical;
  bool fallacious = false;
  std::optional<QuerySpec> query;
  Pattern etr_pattern;      // production, inference and quantified kinds
  Pattern correct_pattern;
};

struct Override {
  std::string problem;
  Condition condition = Condition::kProduction;
  std::optional<Template> tmpl;  // unset: every template
  std::optional<bool> correct;
  std::optional<bool> etr;
  std::string note;
};

struct ScoreKey {
  std::map<std::string, KeyEntry> entries;
  std::vector<Override> overrides;
};

ScoreKey BuildScoreKey(const std::vector<Problem>& problems);
// One JSON object per line: {"problem", "condition", "template"?, "correct"?, "etr"?, "note"?}.
std::vector<Override> ParseOverrides(const std::string& jsonl);

struct ScoreRecord {
  std::string problem;
  std::string tmpl;
  std::string group;
  bool fallacious = false;
  bool has_production = false;
  bool has_query = false;
  bool correct_produced = false;
  bool etr_produced = false;
  bool fallacy_produced = false;
  bool correct_endorsed = false;
  bool etr_endorsed = false;
  bool fallacy_endorsed = false;
  bool needs_review = false;
  std::vector<std::string> notes;

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

std::string ToJsonLine(const ScoreRecord& r);
ScoreRecord ScoreFromJsonLine(const std::string& line);
std::vector<ScoreRecord> ReadScores(const std::string& path);

struct ScoreResult {
  std::vector<ScoreRecord> records;  // sorted by (problem, template)
  std::vector<std::string> log;      // overrides applied, unknown problems
};

// `group` labels every record; empty means the template name.
ScoreResult Score(const std::vector<TranscriptRecord>& ts, const ScoreKey& key,
                  const std::string& group = "");

// Extraction helpers, exposed for tests.
std::optional<bool> ExtractYesNo(std::string_view response);
std::vector<std::string> ExtractCards(std::string_view response, const std::vector<std::string>& cards);
// Hypothesis names in order of first mention; nullopt unless all are found.
std::optional<std::vector<std::string>> ExtractRanking(std::string_view response, const Problem& p);
// Chosen options for one menu; every option when the response is indifferent.
std::optional<std::vector<std::string>> ExtractChoice(std::string_view response, const Problem& p,
                                                      const std::string& menu);

}  // namespace etr::bench
