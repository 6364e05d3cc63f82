#include "urigid/cli.hpp"
#include "urigid/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace urigid;
using namespace urigid::cli;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("urigid_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  int build_random(Index n, int dim, std::uint64_t seed, const fs::path& output) {
    BuildArgs args;
    args.points_random = n;
    args.dim = dim;
    args.seed = seed;
    args.output = output;
    return cmd_build(args, out, err);
  }

  std::ostringstream out, err;

 private:
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BuildRandomEdgeCounts) {
  EXPECT_EQ(build_random(10, 2, 7, path("a.json")), exit_ok);
  EXPECT_EQ(parse_framework_file(read_text_file(path("a.json"))).framework.num_edges(), 18);
  EXPECT_EQ(build_random(10, 3, 7, path("b.json")), exit_ok);
  EXPECT_EQ(parse_framework_file(read_text_file(path("b.json"))).framework.num_edges(), 25);
  EXPECT_NE(out.str().find("edges=25"), std::string::npos);
}

TEST_F(Cli, BuildIsDeterministic) {
  build_random(15, 2, 3, path("a.json"));
  build_random(15, 2, 3, path("b.json"));
  EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("b.json")));
}

TEST_F(Cli, BuildFromFileAndErrors) {
  write_text_file(path("p.csv"), "x,y\n0,0\n2,0.1\n2.1,1.9\n-0.1,2\n0.9,1.1\n1.5,0.7\n");
  BuildArgs args;
  args.input = path("p.csv");
  args.output = path("f.json");
  EXPECT_EQ(cmd_build(args, out, err), exit_ok);
  args.multifan = 2;
  EXPECT_EQ(cmd_build(args, out, err), exit_ok);
  EXPECT_EQ(parse_framework_file(read_text_file(path("f.json"))).fan->kind, FanKind::multifan2d);

  args.multifan = 0;
  args.dim = 3;
  EXPECT_EQ(cmd_build(args, out, err), exit_error);
  write_text_file(path("bad.csv"), "0,0\n1,1\n2,2\n");
  args.dim.reset();
  args.input = path("bad.csv");
  EXPECT_EQ(cmd_build(args, out, err), exit_error);
  args.input = path("missing.csv");
  EXPECT_EQ(cmd_build(args, out, err), exit_error);
  EXPECT_FALSE(err.str().empty());
}

TEST_F(Cli, AnalyzeFigureOneSquare) {
  write_text_file(path("sq.json"), R"({"dim":2,"points":[[0,0],[1,0],[1,1],[0,1]],"edges":[[0,1],[1,2],[2,3],[0,3]]})");
  EXPECT_EQ(cmd_analyze({path("sq.json")}, out, err), exit_ok);
  EXPECT_NE(out.str().find("\"classification\": \"flexible\""), std::string::npos);
  EXPECT_NE(out.str().find("\"m\": 1"), std::string::npos);
  write_text_file(path("junk.json"), "{");
  EXPECT_EQ(cmd_analyze({path("junk.json")}, out, err), exit_error);
}

TEST_F(Cli, VerifyFanOracleCountsConfigurations) {
  build_random(8, 2, 1, path("f.json"));
  VerifyArgs args;
  args.input = path("f.json");
  args.oracle = OracleChoice::fan;
  EXPECT_EQ(cmd_verify(args, out, err), exit_ok);
  EXPECT_NE(out.str().find("configurations=32"), std::string::npos);
}

TEST_F(Cli, VerifyBothIn3D) {
  build_random(7, 3, 1, path("f.json"));
  VerifyArgs args;
  args.input = path("f.json");
  args.oracle = OracleChoice::both;
  args.ambient = 5;
  args.trials = 20;
  EXPECT_EQ(cmd_verify(args, out, err), exit_ok) << out.str() << err.str();
}

TEST_F(Cli, VerifySquareFailsWithWitness) {
  write_text_file(path("sq.json"), R"({"dim":2,"points":[[0,0],[1,0],[1,1],[0,1]],"edges":[[0,1],[1,2],[2,3],[0,3]]})");
  VerifyArgs args;
  args.input = path("sq.json");
  args.oracle = OracleChoice::perturb;
  args.ambient = 2;
  args.trials = 20;
  args.magnitude = 0.05;
  EXPECT_EQ(cmd_verify(args, out, err), exit_error);
  EXPECT_NE(out.str().find("witness_trial="), std::string::npos);
}

TEST_F(Cli, VerifyTooManyFolds) {
  build_random(30, 2, 1, path("f.json"));
  VerifyArgs args;
  args.input = path("f.json");
  args.max_folds = 10;
  EXPECT_EQ(cmd_verify(args, out, err), exit_too_many_folds);
  EXPECT_NE(err.str().find("--oracle perturb"), std::string::npos);
}

TEST_F(Cli, RenderIsDeterministicAndWarnsWithoutStress) {
  build_random(9, 3, 4, path("f.json"));
  EXPECT_EQ(cmd_render({path("f.json"), path("a.svg")}, out, err), exit_ok);
  EXPECT_EQ(cmd_render({path("f.json"), path("b.svg")}, out, err), exit_ok);
  EXPECT_EQ(read_text_file(path("a.svg")), read_text_file(path("b.svg")));

  write_text_file(path("plain.json"), R"({"dim":2,"points":[[0,0],[1,0],[0,1]],"edges":[[0,1],[1,2],[0,2]]})");
  EXPECT_EQ(cmd_render({path("plain.json"), path("c.svg")}, out, err), exit_error);
  EXPECT_NE(err.str().find("warning"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("c.svg")));
}

TEST_F(Cli, SessionThreeAdds) {
  write_text_file(path("ev.jsonl"), R"({"op":"add","id":1,"point":[0,0]}
{"op":"add","id":2,"point":[1,0]}
{"op":"add","id":3,"point":[0,1]}
)");
  SessionArgs args;
  args.events = path("ev.jsonl");
  args.log = path("log.jsonl");
  args.output = path("final.json");
  EXPECT_EQ(cmd_session(args, out, err), exit_ok);
  const auto log = parse_log(read_text_file(path("log.jsonl")));
  ASSERT_EQ(log.size(), 3u);
  EXPECT_EQ(log.back().epoch, 3u);
  EXPECT_EQ(parse_framework_file(read_text_file(path("final.json"))).framework.num_edges(), 3);

  write_text_file(path("bad.jsonl"), "{\"op\":\"add\"}\n");
  args.events = path("bad.jsonl");
  EXPECT_EQ(cmd_session(args, out, err), exit_error);
}
