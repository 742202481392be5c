#include <gtest/gtest.h>

#include "cli_harness.hpp"
#include "json.hpp"

namespace {

const std::string kCli = CAYLEY_CLI_PATH;
const std::string kFaulty = CAYLEY_FAULTY_CLI_PATH;
const std::string kGolden = CAYLEY_GOLDEN_DIR;

}  // namespace

TEST(CliGolden, MatchesFiles) {
  for (const auto& c : cli::golden_cases()) {
    const auto r = cli::run(kCli, c.args, c.input);
    EXPECT_EQ(r.exit_code, c.exit_code) << c.name << ": " << r.err;
    EXPECT_EQ(r.out, cli::slurp(kGolden + "/" + c.name + ".out")) << c.name;
  }
}

TEST(CliExitCodes, Table) {
  for (const auto& c : cli::exit_cases()) {
    const auto r = cli::run(kCli, c.args, c.input);
    EXPECT_EQ(r.exit_code, c.exit_code) << c.label;
    if (c.exit_code != 0) EXPECT_FALSE(r.err.empty()) << c.label;
  }
}

TEST(CliExitCodes, ParseErrorsNameTheLine) {
  const auto r = cli::run(kCli, "prufer encode", "n 3\n1 2\n2 z\n");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliExitCodes, EnvCapOverride) {
  EXPECT_EQ(cli::run(kCli, "enumerate -n 10 --count").exit_code, 3);
  const auto r = cli::run("/usr/bin/env", "CAYLEY_N_CAP=3 " + cli::quote(kCli) + " enumerate -n 4 --count");
  EXPECT_EQ(r.exit_code, 3);
}

TEST(CliSample, ByteIdenticalAcrossRuns) {
  for (const char* args : {"sample -n 7 --count 200 --seed 123", "sample --degrees 3,1,2,1,1,2 --count 50 --seed 5 --format json"}) {
    const auto a = cli::run(kCli, args);
    const auto b = cli::run(kCli, args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliJson, VerifyReportParses) {
  const auto r = cli::run(kCli, "verify all --max-n 5 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["reports"].size(), 9u);
  for (const auto& rep : j["reports"]) EXPECT_TRUE(rep["elapsed_ms"].is_number());
}

TEST(CliFault, InjectedFaultIsReported) {
  const auto r = cli::run(kFaulty, "verify theorem1 --max-n 4 --json --no-timing");
  EXPECT_EQ(r.exit_code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "FAIL");
  EXPECT_FALSE(j["reports"][0]["failures"].empty());
  EXPECT_EQ(cli::run(kFaulty, "verify lemma1 --max-n 4").exit_code, 0);
}
