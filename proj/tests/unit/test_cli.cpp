#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "srsdual/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string fixture(const std::string& name) { return std::string(SRSDUAL_FIXTURE_DIR) + "/" + name; }

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = srsdual::cli::run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, FixedPointYes) {
  auto r = run({"--json", "fp", fixture("aba.srs"), "a b"});
  EXPECT_EQ(r.code, srsdual::cli::kYes);
  auto j = json_of(r);
  EXPECT_EQ(j["verdict"], "yes");
  EXPECT_EQ(j["witness"], "a");
}

TEST(Cli, FixedPointNo) {
  EXPECT_EQ(run({"fp", fixture("baa.srs"), "b"}).code, srsdual::cli::kNo);
}

TEST(Cli, FixedPointNeedsDwindlingSystem) {
  auto r = run({"fp", fixture("not_monadic.srs"), "a"});
  EXPECT_EQ(r.code, srsdual::cli::kError);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, OneMappingExample) {
  auto r = run({"--json", "ce1", fixture("aa.srs"), "a", "b a"});
  EXPECT_EQ(r.code, srsdual::cli::kYes);
  auto j = json_of(r);
  EXPECT_EQ(j["witnesses"][0], "a");
  EXPECT_EQ(j["witnesses"][1], "_");
}

TEST(Cli, CommonTermNoSolution) {
  EXPECT_EQ(run({"ct", fixture("ab_erase.srs"), "a", "b"}).code, srsdual::cli::kNo);
}

TEST(Cli, NotMonadicIsAnError) {
  EXPECT_EQ(run({"ct", fixture("not_monadic.srs"), "a", "b"}).code, srsdual::cli::kError);
}

TEST(Cli, ConfluenceExitCodes) {
  EXPECT_EQ(run({"confluence", fixture("free_group.srs")}).code, 0);
  EXPECT_EQ(run({"confluence", fixture("not_confluent.srs")}).code, 1);
}

TEST(Cli, NormalizeFromStdin) {
  auto r = run({"normalize", "-", "b b a a"}, "b a a -> b a\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("b b a"), std::string::npos);
}

TEST(Cli, MissingFileAndBadSyntax) {
  EXPECT_EQ(run({"classify", fixture("does_not_exist.srs")}).code, srsdual::cli::kError);
  EXPECT_EQ(run({"classify", "-"}, "a b c\n").code, srsdual::cli::kError);
  EXPECT_EQ(run({"no-such-verb"}).code, srsdual::cli::kError);
}

TEST(Cli, OracleVerb) {
  auto r = run({"--json", "--max-len", "4", "oracle", "ce_one", fixture("baa.srs"), "b", "b b"});
  EXPECT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["witnesses"][0], "a a");
  EXPECT_EQ(j["witnesses"][1], "a");
}

TEST(Cli, EncodeWritesLegendSidecar) {
  auto dir = std::filesystem::temp_directory_path() / "srsdual_cli_test";
  std::filesystem::create_directories(dir);
  auto out = (dir / "ct.srs").string();
  auto r = run({"encode", "gpcp-ct", fixture("small.gpcp"), out, "--solution", ""});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(std::filesystem::exists(out));
  EXPECT_TRUE(std::filesystem::exists(out + ".legend"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, RandomInstancesAreStableForASeed) {
  auto a = run({"--json", "--seed", "7", "encode", "gpcp-random"});
  auto b = run({"--json", "--seed", "7", "encode", "gpcp-random"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"--json", "--seed", "8", "encode", "gpcp-random"}).out);
}

TEST(Cli, JsonIsStableAcrossRuns) {
  std::vector<std::string> args{"--json", "ce2", fixture("free_group.srs"), "a", "b", "b", "a"};
  EXPECT_EQ(run(args).out, run(args).out);
}
