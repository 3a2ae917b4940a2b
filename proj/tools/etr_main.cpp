// etr: command-line front end.
//
// Exit codes: 0 success, 1 check failed, 2 config or parse error,
// 3 responder failure.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "etr/bench/answers.hpp"
#include "etr/bench/harness.hpp"
#include "etr/bench/report.hpp"
#include "etr/bench/score.hpp"
#include "etr/bench/wilcoxon.hpp"
#include "etr/corpus.hpp"
#include "etr/error.hpp"
#include "etr/generator.hpp"
#include "etr/problem.hpp"
#include "etr/text.hpp"

namespace {

using namespace etr;

constexpr int kCheckFailed = 1;
constexpr int kConfigError = 2;
constexpr int kResponderError = 3;

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteAll(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << data;
}

std::vector<Problem> LoadProblems(const std::string& path) {
  if (path.empty()) return Corpus();
  const std::string text = ReadAll(path);
  try {
    return ParseProblems(text);
  } catch (const SyntaxError& e) {
    throw SyntaxError(path + ":" + e.what(), 0, 0);
  }
}

// Inline premises become a one-problem document so they get the same checks.
Problem InlineProblem(const std::vector<std::string>& premises) {
  bool quantified = false;
  for (const std::string& p : premises) {
    const std::string_view t = text::Trim(p);
    if (t.substr(0, 5) == "some " || t.substr(0, 4) == "all ") quantified = true;
  }
  std::string doc = "problem inline\nkind: ";
  doc += quantified ? "quantified\n" : "inference\n";
  for (const std::string& p : premises) doc += "premise: " + p + "\n";
  return ParseProblem(doc);
}

std::vector<Problem> Select(std::vector<Problem> ps, const std::string& id) {
  if (id.empty()) return ps;
  for (Problem& p : ps)
    if (p.id == id) return {std::move(p)};
  throw ConfigError("no problem with id '" + id + "'");
}

std::vector<Problem> ProblemsFromArgs(const std::string& file, const std::vector<std::string>& premises,
                                      const std::string& id) {
  if (!premises.empty()) {
    if (!file.empty()) throw ConfigError("give either a problem file or --premise, not both");
    return {InlineProblem(premises)};
  }
  if (file.empty()) throw ConfigError("no input: give a problem file, '-' for stdin, or --premise");
  return Select(LoadProblems(file), id);
}

template <typename T, typename F>
std::vector<T> ParseList(const std::string& csv, F parse, const char* what) {
  std::vector<T> out;
  for (const std::string& item : text::Split(csv, ',')) {
    const std::string_view t = text::Trim(item);
    if (t.empty()) continue;
    auto v = parse(t);
    if (!v) throw ConfigError(std::string("unknown ") + what + " '" + std::string(t) + "'");
    out.push_back(*v);
  }
  return out;
}

// --- reason / inquire ---

struct ReasonOptions {
  std::string file;
  std::vector<std::string> premises;
  std::string id;
  bool trace = false;
  bool equilibrium = false;
  std::string query;
};

void PrintInference(const Problem& p, const ReasonOptions& o) {
  const Prediction pred = Predict(p);
  const ClassicalAnswer classical = Classify(p, pred);
  std::cout << p.id << ": " << pred.text << "\n";
  if (o.trace && pred.chain) std::cout << pred.chain->trace.Render();
  if (!classical.sanctioned) std::cout << "warning: fallacy (" << classical.label << " by the classical standard)\n";
  if (o.equilibrium) {
    if (p.kind == ProblemKind::kInference) {
      const State eq = EquilibriumConclusions(Interpretations(p));
      for (const Literal& l : pred.conclusion.literals()) {
        const bool in_eq = eq.Contains(l);
        const bool valid = Entails(Interpretations(p), State{l});
        std::cout << ToDsl(State{l}) << " (" << (in_eq ? "in equilibrium" : "NOT in equilibrium") << "; "
                  << (valid ? "classically valid" : "classically invalid") << ")\n";
      }
      std::cout << "equilibrium conclusions: " << (eq.empty() ? "nothing" : ToDsl(eq)) << "\n";
      std::cout << "classical consequences: " << classical.text << "\n";
    } else {
      std::cout << "classical: " << classical.text << " (" << classical.label << ")\n";
    }
  }
  if (!o.query.empty()) {
    if (p.kind == ProblemKind::kInference) {
      State target;
      try {
        target = State(ParseConj(o.query).literals);
      } catch (const SyntaxError& e) {
        throw SyntaxError(std::string("--query: ") + e.what(), 0, 0);
      }
      const bool etr = FollowsQuery(pred.chain->final_question, target);
      const bool valid = Entails(Interpretations(p), target);
      std::cout << "query " << ToDsl(target) << ": " << (etr ? "follows" : "does not follow")
                << " (classically: " << (valid ? "follows" : "does not follow") << ")\n";
    } else if (p.kind == ProblemKind::kQuantified) {
      const QuantPremise target = ParseQuantPremise(o.query);
      const bool etr = std::find(pred.readbacks.begin(), pred.readbacks.end(), ToDsl(target)) != pred.readbacks.end();
      const bool valid = MonadicEntails(p.quant_premises, target);
      std::cout << "query " << ToDsl(target) << ": " << (etr ? "follows" : "does not follow")
                << " (classically: " << (valid ? "follows" : "does not follow") << ")\n";
    } else {
      throw ConfigError("--query applies to inference and quantified problems");
    }
  }
}

int CmdReason(const ReasonOptions& o) {
  for (const Problem& p : ProblemsFromArgs(o.file, o.premises, o.id)) PrintInference(p, o);
  return 0;
}

int CmdInquire(const ReasonOptions& o, const std::vector<std::string>& atoms) {
  std::vector<Atom> on;
  for (const std::string& a : atoms) {
    if (!IsIdentifier(a)) throw ConfigError("bad atom '" + a + "'");
    on.emplace_back(a);
  }
  for (const Problem& p : ProblemsFromArgs(o.file, o.premises, o.id)) {
    if (p.kind != ProblemKind::kInference) throw ConfigError("inquire needs an inference problem");
    const auto interps = Interpretations(p);
    const ChainResult plain = RunChain(interps);
    const ChainResult asked = RunChain(interps, on);
    std::cout << p.id << "\n";
    std::cout << "default:   " << ToString(plain.final_question) << " => "
              << (plain.conclusion.empty() ? "nothing" : ToDsl(plain.conclusion)) << "\n";
    std::cout << "inquiring: " << ToString(asked.final_question) << " => "
              << (asked.conclusion.empty() ? "nothing" : ToDsl(asked.conclusion)) << "\n";
    if (o.trace) std::cout << asked.trace.Render();
  }
  return 0;
}

// --- oracle-check / corpus ---

int CmdOracleCheck(const std::string& file, const std::string& id) {
  int status = 0;
  for (const Problem& p : Select(LoadProblems(file), id)) {
    const PredictionRecord r = Label(p);
    std::string verdict = "ok";
    if (p.expected && *p.expected != r.etr_prediction) {
      verdict = "MISMATCH (expected " + *p.expected + ")";
      status = kCheckFailed;
    }
    std::cout << p.id << ": etr=" << r.etr_prediction << " classical=" << r.classical_answer << " ["
              << r.classical_label << (r.fallacy ? ", fallacy" : "") << "] " << verdict << "\n";
  }
  return status;
}

struct CorpusOptions {
  std::string file;
  std::string format = "list";
  std::string render;
  std::string condition = "production";
  std::string tmpl = "none";
  std::string part;
};

int CmdCorpus(const CorpusOptions& o) {
  const std::vector<Problem> ps = LoadProblems(o.file);
  if (!o.render.empty()) {
    const Problem p = Select(ps, o.render).front();
    auto c = ParseCondition(o.condition);
    auto t = ParseTemplate(o.tmpl);
    if (!c) throw ConfigError("unknown condition '" + o.condition + "'");
    if (!t) throw ConfigError("unknown template '" + o.tmpl + "'");
    std::vector<std::string> parts = PromptParts(p);
    if (!o.part.empty()) parts = {o.part};
    for (const std::string& part : parts) std::cout << RenderPrompt(p, *c, *t, part) << "\n";
    return 0;
  }
  if (o.format == "dsl") {
    std::cout << Serialize(ps);
  } else if (o.format == "jsonl") {
    for (const Problem& p : ps) std::cout << ToJsonLine(Label(p)) << "\n";
  } else if (o.format == "list") {
    for (const Problem& p : ps) {
      const PredictionRecord r = Label(p);
      std::cout << p.id << "\t" << ToString(p.kind) << "\t" << r.etr_prediction << "\t" << r.classical_label
                << "\n";
    }
  } else {
    throw ConfigError("unknown format '" + o.format + "'");
  }
  return 0;
}

// --- generate ---

struct GenerateOptions {
  std::string family = "illusory";
  std::size_t count = 10;
  std::uint64_t seed = 1;
  std::size_t disjuncts = 2;
  std::size_t atoms = 2;
  std::string order = "question-first";
  std::string vocabulary;
  std::string out;
  std::string verify;
};

int CmdGenerate(const GenerateOptions& o) {
  if (!o.verify.empty()) {
    std::istringstream in(ReadAll(o.verify));
    std::size_t n = 0, bad = 0;
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      ++n;
      GeneratedInstance g = FromJsonLine(line);
      g.prediction = Label(g.problem);
      if (ToJsonLine(g) != line) {
        ++bad;
        std::cerr << "mismatch on line " << n << " (" << g.problem.id << ")\n";
      }
    }
    std::cout << n << " instances, " << bad << " mismatches\n";
    return bad ? kCheckFailed : 0;
  }
  GenConfig cfg;
  auto family = ParseFamily(o.family);
  auto order = ParseOrder(o.order);
  if (!family) throw ConfigError("unknown family '" + o.family + "'");
  if (!order) throw ConfigError("unknown order '" + o.order + "'");
  cfg.family = *family;
  cfg.order = *order;
  cfg.count = o.count;
  cfg.seed = o.seed;
  cfg.disjuncts = o.disjuncts;
  cfg.atoms_per_conjunct = o.atoms;
  if (!o.vocabulary.empty()) {
    cfg.vocabulary.clear();
    for (const std::string& w : text::Split(o.vocabulary, ','))
      if (!text::Trim(w).empty()) cfg.vocabulary.emplace_back(text::Trim(w));
  }
  std::string data;
  std::size_t fallacies = 0;
  const auto instances = Generate(cfg);
  for (const GeneratedInstance& g : instances) {
    data += ToJsonLine(g) + "\n";
    fallacies += g.prediction.fallacy;
  }
  WriteAll(o.out, data);
  if (!o.out.empty() && o.out != "-")
    std::cerr << instances.size() << " instances (" << fallacies << " fallacious) written to " << o.out << "\n";
  return 0;
}

// --- bench ---

struct BenchRunOptions {
  std::string responder;
  std::string corpus;
  std::string conditions = "production,query";
  std::string templates = "none";
  double timeout = 60.0;
  std::string out = "bench-out";
  std::size_t jobs = 1;
  bool quiet = false;
};

int CmdBenchRun(const BenchRunOptions& o) {
  bench::RunConfig cfg;
  cfg.problems = LoadProblems(o.corpus);
  cfg.corpus_path = o.corpus;
  cfg.responder = o.responder;
  cfg.conditions = ParseList<Condition>(o.conditions, ParseCondition, "condition");
  cfg.templates = ParseList<Template>(o.templates, ParseTemplate, "template");
  cfg.timeout_seconds = o.timeout;
  cfg.out_dir = o.out;
  cfg.jobs = o.jobs;
  std::size_t failures = 0;
  const auto ts = bench::RunBench(cfg, [&](const bench::TranscriptRecord& t) {
    if (!t.error.empty()) ++failures;
    if (!o.quiet)
      std::cerr << t.problem << " " << ToString(t.condition) << " " << ToString(t.tmpl)
                << (t.part.empty() ? "" : " " + t.part) << (t.error.empty() ? "" : " [" + t.error + "]") << "\n";
  });
  std::cout << ts.size() << " transcripts (" << failures << " with responder errors) in " << o.out
            << "/transcripts.jsonl\n";
  return 0;
}

struct BenchScoreOptions {
  std::string transcripts;
  std::string corpus;
  std::string overrides;
  std::string group;
  std::string out;
};

int CmdBenchScore(const BenchScoreOptions& o) {
  bench::ScoreKey key = bench::BuildScoreKey(LoadProblems(o.corpus));
  if (!o.overrides.empty()) key.overrides = bench::ParseOverrides(ReadAll(o.overrides));
  const auto result = bench::Score(bench::ReadTranscripts(o.transcripts), key, o.group);
  for (const std::string& line : result.log) std::cerr << line << "\n";
  std::string data;
  std::size_t review = 0;
  for (const bench::ScoreRecord& r : result.records) {
    data += bench::ToJsonLine(r) + "\n";
    review += r.needs_review;
  }
  const std::string out = o.out.empty()
                              ? (std::filesystem::path(o.transcripts).parent_path() / "scores.jsonl").string()
                              : o.out;
  WriteAll(out, data);
  std::cout << result.records.size() << " score records (" << review << " need review) in " << out << "\n";
  return 0;
}

struct BenchReportOptions {
  std::vector<std::string> scores;
  bool pratt = false;
  std::string jsonl;
};

int CmdBenchReport(const BenchReportOptions& o) {
  std::vector<bench::ScoreRecord> all;
  for (const std::string& path : o.scores) {
    auto rs = bench::ReadScores(path);
    all.insert(all.end(), rs.begin(), rs.end());
  }
  const auto report = bench::Aggregate(all, o.pratt ? bench::ZeroMethod::kPratt : bench::ZeroMethod::kDiscard);
  std::cout << bench::RenderText(report);
  if (!o.jsonl.empty()) WriteAll(o.jsonl, bench::RenderJsonl(report));
  return 0;
}

// --- stats ---

// Either score records (paired on problem and template) or one number per
// line (paired by position).
std::map<std::string, double> PairValues(const std::string& path, const std::string& measure) {
  std::map<std::string, double> out;
  std::istringstream in(ReadAll(path));
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    if (text::Trim(line).empty()) continue;
    ++n;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
    }
    char key[32];
    std::snprintf(key, sizeof key, "%012zu", n);
    if (j.is_number()) {
      out[key] = j.get<double>();
    } else if (j.is_boolean()) {
      out[key] = j.get<bool>();
    } else {
      const bench::ScoreRecord r = bench::ScoreFromJsonLine(line);
      std::optional<bool> v;
      for (bench::Measure m : bench::kAllMeasures)
        if (bench::ToString(m) == measure) v = bench::Value(r, m);
      if (v) out[r.problem + "/" + r.tmpl] = *v;
    }
  }
  return out;
}

int CmdStats(const std::vector<std::string>& pairs, const std::string& measure, bool pratt) {
  if (pairs.size() != 2) throw ConfigError("--pairs needs exactly two files");
  bool known = false;
  for (bench::Measure m : bench::kAllMeasures) known = known || bench::ToString(m) == measure;
  if (!known) throw ConfigError("unknown measure '" + measure + "'");
  const auto a = PairValues(pairs[0], measure), b = PairValues(pairs[1], measure);
  std::vector<double> x, y;
  for (const auto& [k, v] : a)
    if (auto it = b.find(k); it != b.end()) {
      x.push_back(v);
      y.push_back(it->second);
    }
  if (x.empty()) throw ConfigError("no paired values between the two files");
  const auto w = bench::WilcoxonSignedRank(x, y, pratt ? bench::ZeroMethod::kPratt : bench::ZeroMethod::kDiscard);
  std::cout << "pairs: " << x.size() << "\nnonzero differences: " << w.n << "\nW+: " << w.w_plus
            << "\nW-: " << w.w_minus << "\nmethod: " << (w.exact ? "exact" : "normal approximation")
            << "\np = " << w.p << "\n";
  const std::string mark = bench::SignificanceMark(w.p);
  if (w.n && !mark.empty()) std::cout << "significance: " << mark << "\n";
  if (!w.note.empty()) std::cout << "note: " << w.note << "\n";
  return 0;
}

// --- respond ---

int CmdRespond(const std::string& role, std::string corpus) {
  const std::string input = ReadAll("-");
  if (role == "echo") {
    std::cout << input;
    return 0;
  }
  if (corpus.empty())
    if (const char* env = std::getenv("ETR_BENCH_CORPUS")) corpus = env;
  bench::AnswerRole answer_role;
  if (role == "mimic") {
    answer_role = bench::AnswerRole::kEtr;
  } else if (role == "oracle") {
    answer_role = bench::AnswerRole::kCorrect;
  } else {
    throw ConfigError("unknown role '" + role + "'");
  }
  const std::vector<Problem> ps = LoadProblems(corpus);
  const auto match = bench::MatchPrompt(ps, input);
  if (!match) {
    std::cerr << "respond: prompt does not match any problem\n";
    return kCheckFailed;
  }
  std::cout << bench::RenderAnswer(*match->problem, answer_role, match->condition, match->part) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erotetic reasoning engine, classical oracles, problem generator and benchmark harness."};
  app.set_config("--config", "", "Read flags from a TOML/INI file; explicit flags win");
  app.set_version_flag("--version", std::string(etr::kSemanticsVersion));
  app.require_subcommand(1);

  ReasonOptions reason;
  auto* cmd_reason = app.add_subcommand("reason", "Run the default procedure on inference or quantified problems");
  cmd_reason->add_option("file", reason.file, "Problem file ('-' for stdin)");
  cmd_reason->add_option("-p,--premise", reason.premises, "Inline premise (repeatable)");
  cmd_reason->add_option("--problem", reason.id, "Only this problem id");
  cmd_reason->add_flag("--trace", reason.trace, "Print each update step");
  cmd_reason->add_flag("--equilibrium", reason.equilibrium, "Check conclusions under further inquiry");
  cmd_reason->add_option("--query", reason.query, "Ask whether this conjunction follows");

  ReasonOptions inquire;
  std::vector<std::string> inquire_atoms;
  auto* cmd_inquire = app.add_subcommand("inquire", "Re-run with inquiry on the given atoms before each answer");
  cmd_inquire->add_option("file", inquire.file, "Problem file ('-' for stdin)");
  cmd_inquire->add_option("-p,--premise", inquire.premises, "Inline premise (repeatable)");
  cmd_inquire->add_option("--problem", inquire.id, "Only this problem id");
  cmd_inquire->add_option("--on", inquire_atoms, "Atom to inquire on (repeatable)")->required();
  cmd_inquire->add_flag("--trace", inquire.trace, "Print each update step");

  std::string check_file, check_id;
  auto* cmd_check = app.add_subcommand("oracle-check", "Label problems and compare with their expect lines");
  cmd_check->add_option("file", check_file, "Problem file (default: built-in corpus)");
  cmd_check->add_option("--problem", check_id, "Only this problem id");

  CorpusOptions corpus;
  auto* cmd_corpus = app.add_subcommand("corpus", "List, dump or render problems");
  cmd_corpus->add_option("file", corpus.file, "Problem file (default: built-in corpus)");
  cmd_corpus->add_option("--format", corpus.format, "list | dsl | jsonl")->capture_default_str();
  cmd_corpus->add_option("--render", corpus.render, "Print the prompt(s) of this problem id");
  cmd_corpus->add_option("--condition", corpus.condition, "production | query")->capture_default_str();
  cmd_corpus->add_option("--template", corpus.tmpl, "none | control | etr")->capture_default_str();
  cmd_corpus->add_option("--part", corpus.part, "Menu name for decision problems");

  GenerateOptions gen;
  auto* cmd_gen = app.add_subcommand("generate", "Generate labelled synthetic problems as JSONL");
  cmd_gen->add_option("--family", gen.family, "illusory | modus-ponens | conjunction-ranking | decision-framing")
      ->capture_default_str();
  cmd_gen->add_option("--count", gen.count)->capture_default_str();
  cmd_gen->add_option("--seed", gen.seed)->capture_default_str();
  cmd_gen->add_option("--disjuncts", gen.disjuncts, "2..4")->capture_default_str();
  cmd_gen->add_option("--atoms-per-conjunct", gen.atoms, "1..3")->capture_default_str();
  cmd_gen->add_option("--order", gen.order, "question-first | answer-first | both")->capture_default_str();
  cmd_gen->add_option("--vocabulary", gen.vocabulary, "Comma-separated atom words");
  cmd_gen->add_option("-o,--out", gen.out, "Output file (default stdout)");
  cmd_gen->add_option("--verify", gen.verify, "Relabel an existing file and compare byte for byte");

  auto* cmd_bench = app.add_subcommand("bench", "Benchmark harness");
  cmd_bench->require_subcommand(1);
  BenchRunOptions brun;
  auto* cmd_brun = cmd_bench->add_subcommand("run", "Send every prompt to a fresh responder process");
  cmd_brun->add_option("--responder", brun.responder, "Shell command: prompt on stdin, answer on stdout")->required();
  cmd_brun->add_option("--corpus", brun.corpus, "Problem file (default: built-in corpus)");
  cmd_brun->add_option("--conditions", brun.conditions)->capture_default_str();
  cmd_brun->add_option("--templates", brun.templates, "Any of none,control,etr")->capture_default_str();
  cmd_brun->add_option("--timeout", brun.timeout, "Seconds per prompt")->capture_default_str();
  cmd_brun->add_option("-o,--out", brun.out, "Output directory")->capture_default_str();
  cmd_brun->add_option("-j,--jobs", brun.jobs, "Concurrent responders")->capture_default_str();
  cmd_brun->add_flag("-q,--quiet", brun.quiet);

  BenchScoreOptions bscore;
  auto* cmd_bscore = cmd_bench->add_subcommand("score", "Score transcripts");
  cmd_bscore->add_option("--transcripts", bscore.transcripts)->required();
  cmd_bscore->add_option("--corpus", bscore.corpus, "Problem file (default: built-in corpus)");
  cmd_bscore->add_option("--overrides", bscore.overrides, "JSONL manual verdicts");
  cmd_bscore->add_option("--group", bscore.group, "Group label (default: template name)");
  cmd_bscore->add_option("-o,--out", bscore.out, "Output file (default: scores.jsonl next to transcripts)");

  BenchReportOptions breport;
  auto* cmd_breport = cmd_bench->add_subcommand("report", "Aggregate score files");
  cmd_breport->add_option("--scores", breport.scores, "Score files")->required();
  cmd_breport->add_flag("--pratt", breport.pratt, "Rank zero differences (Pratt) instead of discarding them");
  cmd_breport->add_option("--jsonl", breport.jsonl, "Also write machine-readable report here");

  std::vector<std::string> stat_pairs;
  std::string stat_measure = "correct_produced";
  bool stat_pratt = false;
  auto* cmd_stats = app.add_subcommand("stats", "Wilcoxon signed-rank test on paired files");
  cmd_stats->add_option("--pairs", stat_pairs, "Two files: score records or one number per line")
      ->required()
      ->expected(2);
  cmd_stats->add_option("--measure", stat_measure, "Measure for score records")->capture_default_str();
  cmd_stats->add_flag("--pratt", stat_pratt);

  std::string role = "mimic", respond_corpus;
  auto* cmd_respond = app.add_subcommand("respond", "Scripted responder: prompt on stdin, answer on stdout");
  cmd_respond->add_option("--role", role, "echo | mimic | oracle")->capture_default_str();
  cmd_respond->add_option("--corpus", respond_corpus, "Problem file (default: $ETR_BENCH_CORPUS or built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*cmd_reason) return CmdReason(reason);
    if (*cmd_inquire) return CmdInquire(inquire, inquire_atoms);
    if (*cmd_check) return CmdOracleCheck(check_file, check_id);
    if (*cmd_corpus) return CmdCorpus(corpus);
    if (*cmd_gen) return CmdGenerate(gen);
    if (*cmd_brun) return CmdBenchRun(brun);
    if (*cmd_bscore) return CmdBenchScore(bscore);
    if (*cmd_breport) return CmdBenchReport(breport);
    if (*cmd_stats) return CmdStats(stat_pairs, stat_measure, stat_pratt);
    if (*cmd_respond) return CmdRespond(role, respond_corpus);
  } catch (const etr::ResponderError& e) {
    std::cerr << "error: responder failure: " << e.what() << "\n";
    return kResponderError;
  } catch (const etr::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const etr::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const etr::UnsupportedPremise& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const etr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return 0;
}
