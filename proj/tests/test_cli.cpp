#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

using namespace slownim;
using slownim::cli::run_cli;

namespace {

struct run_result {
  int code;
  std::string out;
  std::string err;
};

run_result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "slownim");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, AnalyzeText) {
  const auto r = run({"analyze", "--k", "2", "3,5,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("remoteness  6"), std::string::npos);
  EXPECT_NE(r.out.find("status      P"), std::string::npos);
  EXPECT_NE(r.out.find("keep pile 3 -> (2,4,5)"), std::string::npos);
  EXPECT_NE(r.out.find("exceptional"), std::string::npos);
}

TEST(Cli, AnalyzeAcceptsSpacesAndUnsortedInput) {
  const auto a = run({"analyze", "--k", "2", "--json", "5", "3", "5"});
  const auto b = run({"analyze", "--k", "2", "--json", "3,5,5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonRoundTrip) {
  const auto r = run({"analyze", "--k", "2", "--json", "--trace", "3,3,3"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const cli::output_record rec = cli::record_from_json(j);
  EXPECT_EQ(rec.x, (position{3, 3, 3}));
  EXPECT_EQ(rec.remoteness, 4);
  EXPECT_EQ(rec.status, 'P');
  EXPECT_EQ(rec.best_move_keep_index, 3u);
  ASSERT_TRUE(rec.trace.has_value());
  EXPECT_EQ(rec.trace->size(), 5u);
  EXPECT_EQ(cli::to_json(rec), j);
}

TEST(Cli, JsonHugeIntegersAreStrings) {
  const std::string big = "340282366920938463463374607431768211456";  // 2^128
  const auto r = run({"analyze", "--k", "2", "--json", "0," + big + "," + big});
  ASSERT_EQ(r.code, 0);
  const auto rec = cli::record_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(rec.remoteness, natural(big));
}

TEST(Cli, OracleMode) {
  const auto r = run({"analyze", "--k", "2", "--oracle", "--json", "1,1,1,1"});
  ASSERT_EQ(r.code, 0);
  const auto rec = cli::record_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(rec.n, 4u);
  EXPECT_EQ(rec.branch, "oracle");
}

TEST(Cli, BatchFileWithComments) {
  const std::string path = temp_file("batch.txt", "# header\n3,3,3\n\n1 1 2  # trailing\n");
  const auto r = run({"analyze", "--k", "2", "--json", "--file", path});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"analyze", "3,3,3"}).code, 2);
  EXPECT_EQ(run({"analyze", "--k", "2", "3,x,3"}).code, 2);
  EXPECT_EQ(run({"analyze", "--k", "2", "3,3"}).code, 2);
  EXPECT_EQ(run({"analyze", "--k", "2", "-1,3,3"}).code, 2);
  EXPECT_EQ(run({"verify", "--k", "2", "--max", "4", "--appendix"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TraceCapExitsThree) {
  const auto r = run({"analyze", "--k", "2", "--trace", "--max-trace", "3", "3,5,5"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, VerifyPasses) {
  const auto r = run({"verify", "--k", "2", "--max", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyMemoLimitExitsThree) {
  EXPECT_EQ(run({"verify", "--k", "2", "--max", "12", "--memo-limit", "20"}).code, 3);
}

TEST(Cli, VerifyFile) {
  const std::string path = temp_file("verify.txt", "3,5,5\n2,2,9\n");
  EXPECT_EQ(run({"verify", "--k", "2", "--file", path}).code, 0);
}

// The NIM(4,3) residue-2 table is wrong on some positions, so this run
// reports mismatches and exits 1.
TEST(Cli, VerifyAppendixReportsMismatches) {
  const auto r = run({"verify", "--k", "3", "--max", "12", "--appendix", "--skip-properties"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(3,3,4,4): tables say N"), std::string::npos);
}

TEST(Cli, VerifyConjecture) {
  const auto r = run({"verify", "--k", "2", "--n", "4", "--max", "7", "--conjecture", "0-5", "--skip-properties"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("NIM(4,2) m=5"), std::string::npos);
  EXPECT_EQ(r.out.find("finding"), std::string::npos);
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "--k", "2", "--m", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(0,6,6) A\n(2,4,6) A\n(3,5,5) B\n(4,4,4) A\n");
  const auto o = run({"enumerate", "--oracle", "3", "2", "--m", "6", "--max", "7"});
  EXPECT_EQ(o.out, r.out);
  EXPECT_EQ(run({"enumerate", "--m", "6"}).code, 2);
}

TEST(Cli, PlaySession) {
  // Human keeps pile 2 from (2,2,3); the engine answers; illegal input is
  // rejected and re-prompted.
  const auto r = run({"play", "--k", "2", "2,2,3"}, "2\n9\nfoo\n1\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("position (1,2,2)  remoteness 2 (P)"), std::string::npos);
  EXPECT_NE(r.out.find("engine keeps pile 3"), std::string::npos);
  EXPECT_NE(r.out.find("rejected: pile number out of range"), std::string::npos);
  EXPECT_NE(r.out.find("rejected"), r.out.rfind("rejected"));
  EXPECT_NE(r.out.find("You win."), std::string::npos);
}

TEST(Cli, PlayEngineFirstWinsFromNPosition) {
  const auto r = run({"play", "--k", "2", "--engine-first", "1,2,3"}, "1\n1\n1\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Engine wins."), std::string::npos);
}

TEST(Cli, PlayQuitAndEof) {
  EXPECT_EQ(run({"play", "--k", "2", "4,4,4"}, "quit\n").code, 0);
  EXPECT_EQ(run({"play", "--k", "2", "4,4,4"}, "").code, 0);
}

TEST(Cli, Bench) {
  const auto r = run({"bench", "--k", "50", "--reps", "3", "--bits", "90"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ms/position"), std::string::npos);
  EXPECT_EQ(run({"bench", "--k", "1", "--reps", "2"}).code, 0);
}
