#include <gtest/gtest.h>

#include <filesystem>

#include "etr/bench/harness.hpp"
#include "etr/bench/process.hpp"
#include "etr/corpus.hpp"
#include "etr/error.hpp"

namespace etr::bench {
namespace {

const std::string kResponders = ETR_RESPONDER_DIR;

TEST(Process, RoundTripsStdin) {
  ProcessResult r = RunProcess("cat", "hello\nworld", 5);
  EXPECT_EQ(r.out, "hello\nworld");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_FALSE(r.timed_out);
}

TEST(Process, ExtraEnvironment) {
  ProcessResult r = RunProcess("printf %s \"$ETR_TEST_VALUE\"", "", 5, {{"ETR_TEST_VALUE", "42"}});
  EXPECT_EQ(r.out, "42");
}

TEST(Process, TimeoutKillsGroup) {
  ProcessResult r = RunProcess("sleep 30 & sleep 30; echo late", "", 0.3);
  EXPECT_TRUE(r.timed_out);
  EXPECT_LT(r.seconds, 5.0);
  EXPECT_EQ(r.out, "");
}

TEST(Process, ExitCodeAndStderr) {
  ProcessResult r = RunProcess("echo oops >&2; exit 4", "", 5);
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_EQ(r.err, "oops\n");
}

TEST(Process, LargeInputNoDeadlock) {
  const std::string big(1 << 20, 'x');
  ProcessResult r = RunProcess("cat", big, 10);
  EXPECT_EQ(r.out.size(), big.size());
}

RunConfig Base(const std::string& responder) {
  RunConfig cfg;
  cfg.problems = Corpus();
  cfg.responder = responder;
  cfg.timeout_seconds = 20;
  return cfg;
}

TEST(Harness, EchoStubReturnsPrompts) {
  RunConfig cfg = Base(kResponders + "/echo_stub.sh");
  cfg.jobs = 4;
  auto ts = RunBench(cfg);
  ASSERT_FALSE(ts.empty());
  for (const auto& t : ts) {
    EXPECT_EQ(t.response, t.prompt);
    EXPECT_TRUE(t.error.empty());
  }
}

TEST(Harness, CellsInCorpusOrderAndReproducible) {
  RunConfig cfg = Base(kResponders + "/etr_mimic.sh");
  cfg.templates = {Template::kNone, Template::kEtr};
  cfg.jobs = 3;
  auto a = RunBench(cfg), b = RunBench(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].seconds = b[i].seconds = 0;
    EXPECT_EQ(a[i], b[i]);
  }
  EXPECT_EQ(a.front().problem, Corpus().front().id);
  EXPECT_EQ(a.back().problem, Corpus().back().id);
}

TEST(Harness, FailuresRecorded) {
  RunConfig cfg = Base("exit 1");
  cfg.problems = {Corpus().front()};
  auto ts = RunBench(cfg);
  ASSERT_FALSE(ts.empty());
  for (const auto& t : ts) {
    EXPECT_EQ(t.exit_code, 1);
    EXPECT_FALSE(t.error.empty());
  }
  cfg.responder = "sleep 10";
  cfg.timeout_seconds = 0.2;
  for (const auto& t : RunBench(cfg)) EXPECT_TRUE(t.timed_out);
}

TEST(Harness, MissingResponderAborts) {
  EXPECT_THROW(RunBench(Base("/definitely/not/here")), ResponderError);
}

TEST(Harness, ConfigValidated) {
  RunConfig cfg = Base("");
  EXPECT_THROW(Validate(cfg), ConfigError);
  cfg = Base("cat");
  cfg.timeout_seconds = 0;
  EXPECT_THROW(Validate(cfg), ConfigError);
}

TEST(Harness, TranscriptsPersist) {
  const auto dir = std::filesystem::temp_directory_path() / "etr-harness-test";
  std::filesystem::remove_all(dir);
  RunConfig cfg = Base(kResponders + "/etr_mimic.sh");
  cfg.out_dir = dir.string();
  auto ts = RunBench(cfg);
  EXPECT_EQ(ReadTranscripts((dir / "transcripts.jsonl").string()), ts);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace etr::bench
