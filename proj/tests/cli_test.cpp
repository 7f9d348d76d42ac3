#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace netconn::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("netconn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  ExitStatus call(std::vector<std::string> args) {
    out_.str({});
    err_.str({});
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, CheckTriangle) {
  const auto f = file("tri.txt", "1 2\n2 3\n3 1\n");
  EXPECT_EQ(call({"check", f}), ExitStatus::ok);
  EXPECT_NE(out_.str().find("partitions: 1\n"), std::string::npos);
  EXPECT_NE(out_.str().find("c_avg: 2 (2.0000)"), std::string::npos);
  EXPECT_EQ(call({"check", f, "--algorithm", "node", "--verify"}), ExitStatus::ok);
  EXPECT_NE(out_.str().find("verify: ok"), std::string::npos);
}

TEST_F(CliTest, CheckTwoComponents) {
  const auto f = file("two.txt", "1 2\n3 4\n");
  EXPECT_EQ(call({"check", f}), ExitStatus::partitioned);
  EXPECT_NE(out_.str().find("partitions: 2\n"), std::string::npos);
  EXPECT_EQ(call({"check", f, "--verify", "--algorithm", "node"}), ExitStatus::partitioned);
}

TEST_F(CliTest, CheckSelfLoopIsInputError) {
  const auto f = file("loop.txt", "# comment\n7 7\n");
  EXPECT_EQ(call({"check", f}), ExitStatus::input_error);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  EXPECT_NE(err_.str().find("self-loop"), std::string::npos);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(call({"check", path("missing.txt")}), ExitStatus::input_error);
  EXPECT_EQ(call({"check", file("empty.txt", "")}), ExitStatus::input_error);
  EXPECT_EQ(call({"check", file("bad.txt", "1 x\n")}), ExitStatus::input_error);
  EXPECT_EQ(call({"check", file("t.txt", "1 2\n"), "--algorithm", "bfs"}), ExitStatus::input_error);
  EXPECT_EQ(call({"frobnicate"}), ExitStatus::input_error);
  EXPECT_EQ(call({"--help"}), ExitStatus::ok);
}

TEST_F(CliTest, PartitionsTriangle) {
  const auto f = file("tri.txt", "1 2\n2 3\n3 1\n");
  EXPECT_EQ(call({"partitions", f}), ExitStatus::ok);
  EXPECT_EQ(out_.str(),
            "partition 1: nodes=3 segments=3 class=closed\n"
            "nodes: 1 2 3\n"
            "segments(lines): 1 2 3\n");
}

TEST_F(CliTest, PartitionsKeepOriginalIndices) {
  const auto f = file("sparse.txt", "5 9\n9 42\n100 101\n");
  EXPECT_EQ(call({"partitions", f, "--out", path("m.txt")}), ExitStatus::ok);
  EXPECT_EQ(slurp(path("m.txt")),
            "partition 1: nodes=3 segments=2 class=open\n"
            "nodes: 5 9 42\n"
            "segments(lines): 1 2\n"
            "\n"
            "partition 2: nodes=2 segments=1 class=open\n"
            "nodes: 100 101\n"
            "segments(lines): 3\n");
  // Both algorithms report the same manifest.
  EXPECT_EQ(call({"partitions", f, "--algorithm", "node"}), ExitStatus::ok);
  EXPECT_EQ(out_.str(), slurp(path("m.txt")));
}

TEST_F(CliTest, GeneratedFourPartitionManifest) {
  ASSERT_EQ(call({"generate", "--nodes", "400", "--cavg", "3", "--partitions", "4", "--seed", "3",
                  "--scatter", "--out", path("g.txt")}),
            ExitStatus::ok);
  ASSERT_EQ(call({"partitions", path("g.txt")}), ExitStatus::ok);
  std::istringstream in(out_.str());
  std::string line;
  std::size_t blocks = 0, nodes = 0;
  while (std::getline(in, line)) {
    if (line.rfind("partition ", 0) != 0) continue;
    ++blocks;
    const auto at = line.find("nodes=") + 6;
    nodes += std::stoul(line.substr(at));
  }
  EXPECT_EQ(blocks, 4u);
  EXPECT_EQ(nodes, 400u);
  EXPECT_EQ(call({"check", path("g.txt"), "--verify"}), ExitStatus::partitioned);
}

TEST_F(CliTest, StatsTrianglePlusPendant) {
  const auto f = file("tp.txt", "1 2\n2 3\n3 1\n3 4\n");
  EXPECT_EQ(call({"stats", f}), ExitStatus::ok);
  EXPECT_EQ(out_.str(),
            "nodes: 4\n"
            "segments: 4\n"
            "c_avg: 2 (2.0000)\n"
            "boundary (c=1): 1\n"
            "bridge (c=2): 2\n"
            "bifurcation (c>2): 1\n"
            "c=1: 1\n"
            "c=2: 2\n"
            "c=3: 1\n"
            "partitions: 1\n"
            "partition 1: semi-closed\n");
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const std::vector<std::string> args{"generate", "--nodes", "100", "--cavg", "5",
                                      "--partitions", "1", "--seed", "42"};
  ASSERT_EQ(call(args), ExitStatus::ok);
  const std::string first = out_.str();
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 250);
  ASSERT_EQ(call(args), ExitStatus::ok);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, GenerateInfeasible) {
  EXPECT_EQ(call({"generate", "--nodes", "10", "--cavg", "12"}), ExitStatus::infeasible);
  EXPECT_NE(err_.str().find("infeasible"), std::string::npos);
  EXPECT_EQ(call({"generate", "--nodes", "10", "--cavg", "1"}), ExitStatus::infeasible);
  EXPECT_EQ(call({"generate", "--nodes", "10", "--cavg", "abc"}), ExitStatus::input_error);
  EXPECT_EQ(call({"generate", "--nodes", "10", "--cavg", "12", "--allow-parallel"}), ExitStatus::ok);
}

TEST_F(CliTest, BenchPartitionSweep) {
  ASSERT_EQ(call({"bench", "--sweep", "partitions", "--values", "1,2,4,8", "--nodes", "1600",
                  "--repeats", "3", "--out", path("b.csv")}),
            ExitStatus::ok);
  const auto csv = slurp(path("b.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_EQ(csv.rfind("sweep_variable,", 0), 0u);
  EXPECT_TRUE(fs::exists(path("b.fits.csv")));
}

TEST_F(CliTest, BenchErrors) {
  EXPECT_EQ(call({"bench", "--sweep", "partitions", "--values", "1,60", "--nodes", "100"}),
            ExitStatus::infeasible);
  EXPECT_EQ(call({"bench", "--sweep", "edges", "--values", "1,2"}), ExitStatus::input_error);
  EXPECT_EQ(call({"bench", "--sweep", "nodes", "--values", "200,100"}), ExitStatus::input_error);
}

TEST_F(CliTest, CompactWritesMapping) {
  const auto f = file("s.txt", "5 9\n9 42\n100 101\n");
  EXPECT_EQ(call({"compact", f, "--out", path("c.txt"), "--map-out", path("map.txt")}), ExitStatus::ok);
  EXPECT_EQ(slurp(path("c.txt")), "0 1\n1 2\n3 4\n");
  EXPECT_EQ(slurp(path("map.txt")), "0 5\n1 9\n2 42\n3 100\n4 101\n");
}

}  // namespace
}  // namespace netconn::cli
