// Prompt dispatch to an external responder and transcript persistence.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "etr/problem.hpp"

namespace etr::bench {

struct TranscriptRecord {
  std::string problem;
  Condition condition = Condition::kProduction;
  Template tmpl = Template::kNone;
  std::string part;  // menu name for decision problems, else ""
  std::string prompt;
  std::string response;
  double seconds = 0.0;
  bool timed_out = false;
  int exit_code = 0;
  std::string error;  // non-empty when the responder misbehaved

  friend bool operator==(const TranscriptRecord&, const TranscriptRecord&) = default;
};

std::string ToJsonLine(const TranscriptRecord& t);
TranscriptRecord TranscriptFromJsonLine(const std::string& line);
std::vector<TranscriptRecord> ReadTranscripts(const std::string& path);
void WriteTranscripts(const std::string& path, const std::vector<TranscriptRecord>& ts);

struct RunConfig {
  std::vector<Problem> problems;
  std::string corpus_path;  // exported to the responder as ETR_BENCH_CORPUS when set
  std::string responder;    // shell command line
  std::vector<Condition> conditions{Condition::kProduction, Condition::kQuery};
  std::vector<Template> templates{Template::kNone};
  double timeout_seconds = 60.0;
  std::string out_dir;      // transcripts.jsonl is written here when set
  std::size_t jobs = 1;
};

// Throws ConfigError for an invalid config.
void Validate(const RunConfig& cfg);

// One fresh responder process per (problem, condition, template, part)
// cell, in corpus order. Query cells of problems without a query target are
// skipped. Timeouts and non-zero exits are recorded in the transcript; a
// responder that cannot be started (shell exit 126/127) aborts the run with
// ResponderError. `progress` is called after each finished cell.
std::vector<TranscriptRecord> RunBench(const RunConfig& cfg,
                                       const std::function<void(const TranscriptRecord&)>& progress = {});

}  // namespace etr::bench
