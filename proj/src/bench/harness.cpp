#include "etr/bench/harness.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "etr/bench/process.hpp"
#include "etr/error.hpp"

namespace etr::bench {

std::string ToJsonLine(const TranscriptRecord& t) {
  nlohmann::json j;
  j["problem"] = t.problem;
  j["condition"] = std::string(ToString(t.condition));
  j["template"] = std::string(ToString(t.tmpl));
  j["part"] = t.part;
  j["prompt"] = t.prompt;
  j["response"] = t.response;
  j["seconds"] = t.seconds;
  j["timed_out"] = t.timed_out;
  j["exit_code"] = t.exit_code;
  j["error"] = t.error;
  return j.dump();
}

TranscriptRecord TranscriptFromJsonLine(const std::string& line) {
  try {
    const nlohmann::json j = nlohmann::json::parse(line);
    TranscriptRecord t;
    t.problem = j.at("problem").get<std::string>();
    auto c = ParseCondition(j.at("condition").get<std::string>());
    auto tm = ParseTemplate(j.at("template").get<std::string>());
    if (!c || !tm) throw ConfigError("bad condition or template in transcript record");
    t.condition = *c;
    t.tmpl = *tm;
    t.part = j.value("part", "");
    t.prompt = j.value("prompt", "");
    t.response = j.at("response").get<std::string>();
    t.seconds = j.value("seconds", 0.0);
    t.timed_out = j.value("timed_out", false);
    t.exit_code = j.value("exit_code", 0);
    t.error = j.value("error", "");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad transcript record: ") + e.what());
  }
}

namespace {

std::vector<std::string> Lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  return out;
}

}  // namespace

std::vector<TranscriptRecord> ReadTranscripts(const std::string& path) {
  std::vector<TranscriptRecord> out;
  std::size_t n = 0;
  for (const std::string& line : Lines(path)) {
    ++n;
    try {
      out.push_back(TranscriptFromJsonLine(line));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

void WriteTranscripts(const std::string& path, const std::vector<TranscriptRecord>& ts) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  for (const TranscriptRecord& t : ts) out << ToJsonLine(t) << "\n";
}

void Validate(const RunConfig& cfg) {
  if (cfg.responder.empty()) throw ConfigError("responder command is empty");
  if (!(cfg.timeout_seconds > 0)) throw ConfigError("timeout must be positive");
  if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
  if (cfg.conditions.empty() || cfg.templates.empty())
    throw ConfigError("need at least one condition and one template");
  if (cfg.problems.empty()) throw ConfigError("no problems to run");
}

std::vector<TranscriptRecord> RunBench(const RunConfig& cfg,
                                       const std::function<void(const TranscriptRecord&)>& progress) {
  Validate(cfg);
  std::vector<TranscriptRecord> cells;
  for (const Problem& p : cfg.problems)
    for (Condition c : cfg.conditions)
      for (Template t : cfg.templates)
        for (const std::string& part : PromptParts(p)) {
          TranscriptRecord rec;
          rec.problem = p.id;
          rec.condition = c;
          rec.tmpl = t;
          rec.part = part;
          try {
            rec.prompt = RenderPrompt(p, c, t, part);
          } catch (const Error&) {
            continue;  // no query target
          }
          cells.push_back(std::move(rec));
        }

  std::map<std::string, std::string> env;
  if (!cfg.corpus_path.empty())
    env["ETR_BENCH_CORPUS"] = std::filesystem::absolute(cfg.corpus_path).string();

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex mu;
  std::string abort_reason;
  auto worker = [&] {
    while (!abort) {
      const std::size_t i = next++;
      if (i >= cells.size()) return;
      TranscriptRecord& rec = cells[i];
      ProcessResult r;
      try {
        r = RunProcess(cfg.responder, rec.prompt, cfg.timeout_seconds, env);
      } catch (const ResponderError& e) {
        std::lock_guard lock(mu);
        abort_reason = e.what();
        abort = true;
        return;
      }
      rec.response = r.out;
      rec.seconds = r.seconds;
      rec.timed_out = r.timed_out;
      rec.exit_code = r.exit_code;
      if (r.timed_out) {
        rec.error = "timed out";
      } else if (r.exit_code == 126 || r.exit_code == 127) {
        std::lock_guard lock(mu);
        abort_reason = "responder could not be started (exit " + std::to_string(r.exit_code) +
                       "): " + (r.err.empty() ? std::string("no diagnostic") : r.err.substr(0, r.err.find_last_not_of("\n") + 1));
        abort = true;
        return;
      } else if (r.exit_code != 0) {
        rec.error = "exit code " + std::to_string(r.exit_code);
      }
      if (progress) {
        std::lock_guard lock(mu);
        progress(rec);
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t width = std::min(cfg.jobs, std::max<std::size_t>(cells.size(), 1));
  for (std::size_t k = 0; k < width; ++k) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  if (abort) throw ResponderError(abort_reason);

  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    WriteTranscripts((std::filesystem::path(cfg.out_dir) / "transcripts.jsonl").string(), cells);
  }
  return cells;
}

}  // namespace etr::bench
