#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "tdt/format.hpp"
#include "testing.hpp"

namespace tdt {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tdt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const char* name) { return testing::fixture_path(name).string(); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tdt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(Cli, ValidateClean) {
  const Result r = run({"validate", "--strict", fixture("worked/thursday_8am.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.err, "");
}

TEST_F(Cli, ValidateMutant) {
  const std::string f = fixture("mutants/r03_timex_under_event.json");
  const Result r = run({"validate", f});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(r.err.rfind(f + ":R3:ERROR:t2:", 0), 0u) << r.err;
}

TEST_F(Cli, ValidateLenientWarningPasses) {
  const std::string f = fixture("mutants/r10_eventive_under_stative.json");
  EXPECT_EQ(run({"validate", "--lenient", f}).status, 0);
  EXPECT_EQ(run({"validate", "--strict", f}).status, 1);
  const Result j = run({"validate", "--format", "json", f});
  EXPECT_NE(j.out.find("\"WARNING\""), std::string::npos);
}

TEST_F(Cli, ValidateUnreadable) {
  EXPECT_EQ(run({"validate", (dir_ / "missing.json").string()}).status, 2);
}

TEST_F(Cli, Normalize) {
  const Result r = run({"normalize", fixture("worked/2003_march_next_year.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "t1\t2003\t2003\nt2\tMarch\t2003-03\nt3\tnext year\t2004\n");
}

TEST_F(Cli, InferPairsAndAll) {
  const std::string f = fixture("worked/2003_march_next_year.json");
  EXPECT_EQ(run({"infer", "--pairs", "t1,t2", "--pairs", "t3,t1", f}).out,
            "t1\tt2\tIncludes\nt3\tt1\tAfter\n");
  const Result all = run({"infer", "--all-pairs", "--kinds", "timex", f});
  EXPECT_EQ(all.out, "t1\tt2\tIncludes\nt1\tt3\tBefore\nt2\tt3\tBefore\n");
  EXPECT_EQ(run({"infer", "--pairs", "t1,zz", f}).status, 2);
  EXPECT_EQ(run({"infer", f}).status, 2);
  EXPECT_EQ(run({"infer", "--pairs", "t1", f}).status, 2);
}

TEST_F(Cli, Usage) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
  EXPECT_EQ(run({"parse-baseline", "--genre", "poetry", "a", "b"}).status, 2);
}

TEST_F(Cli, ConvertIsCanonical) {
  const fs::path out = dir_ / "c.json";
  ASSERT_EQ(run({"convert", fixture("worked/thursday_8am.json"), out.string()}).status, 0);
  const Result again = run({"convert", out.string()});
  EXPECT_EQ(again.out, read_file(out));
  EXPECT_EQ(load_document(out), testing::load_fixture("worked/thursday_8am.json"));
}

TEST_F(Cli, BaselineThenScore) {
  const fs::path pred = dir_ / "pred.json";
  ASSERT_EQ(run({"parse-baseline", fixture("worked/arrived_walked_began.json"), pred.string()}).status, 0);
  write_file(dir_ / "gold.tsv", fixture("worked/arrived_walked_began.json") + "\tnarrative\tA\n");
  write_file(dir_ / "pred.tsv", pred.string() + "\tnarrative\tbaseline\n");
  const Result r = run({"score", "--gold", (dir_ / "gold.tsv").string(), "--pred", (dir_ / "pred.tsv").string()});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("Event Relations (labeled)"), std::string::npos);
  EXPECT_NE(r.out.find("1.000"), std::string::npos);
  EXPECT_EQ(run({"score", "--gold", (dir_ / "gold.tsv").string()}).status, 2);
}

TEST_F(Cli, StatsWritesJson) {
  write_file(dir_ / "m.tsv", fixture("worked/thursday_8am.json") + "\tnews\tA\n" +
                                 fixture("worked/tend.json") + "\tnews\tA\n");
  const fs::path json = dir_ / "s.json";
  const Result r = run({"stats", (dir_ / "m.tsv").string(), "--json", json.string()});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(fs::exists(json));
}

TEST_F(Cli, StatsRejectsInvalidCorpus) {
  write_file(dir_ / "m.tsv", fixture("mutants/r09_event_under_root.json") + "\tnews\tA\n");
  const Result r = run({"stats", (dir_ / "m.tsv").string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find(":R9:ERROR:"), std::string::npos) << r.err;
}

TEST_F(Cli, Selftest) {
  const Result r = run({"selftest", "--samples", "2000"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("selftest: ok"), std::string::npos);
}

}  // namespace
}  // namespace tdt
