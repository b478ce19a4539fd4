#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cutsparse/generators.hpp"
#include "cutsparse/io.hpp"
#include "cutsparse_cli/cli.hpp"
#include "json.hpp"

namespace cutsparse {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cutsparse_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_graph(const std::string& name, const Graph& g) {
    const std::string path = (dir_ / name).string();
    std::ofstream os(path);
    write_edge_list(os, g);
    return path;
  }
  std::string write_text(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "cutsparse");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::main_entry(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SparsifyK4IsIdentity) {
  const std::string in = write_graph("k4.txt", complete_graph(4));
  ASSERT_EQ(run({"sparsify", "-i", in, "--scheme", "ni", "--epsilon", "1", "--seed", "7"}), 0);
  EXPECT_EQ(out_.str(), "4 6\n0 1 1/1\n0 2 1/1\n0 3 1/1\n1 2 1/1\n1 3 1/1\n2 3 1/1\n");
}

TEST_F(CliTest, SparsifyWritesProvenanceAndReport) {
  const std::string in = write_graph("g.txt", random_connected(12, 30, 3, 4));
  const std::string sk = path("sk.txt");
  const std::string report = path("report.json");
  ASSERT_EQ(run({"sparsify", "-i", in, "--scheme", "conn", "-o", sk, "--verify", "exact",
                 "--report", report, "--seed", "3"}),
            0);
  const Json prov = Json::parse(read_file(sk + ".provenance.json"));
  EXPECT_EQ(prov["scheme"], "conn");
  EXPECT_EQ(prov["seed"], 3);
  const Json rep = Json::parse(read_file(report));
  EXPECT_EQ(rep["max_rel_error"], 0.0);
  EXPECT_EQ(rep["cuts_checked"], 2047);
  for (const char* key : {"scheme", "epsilon", "c0", "seed", "cuts_checked", "max_rel_error",
                          "argmax_cut", "failures", "runtime_ms"}) {
    EXPECT_TRUE(rep.contains(key)) << key;
  }
}

TEST_F(CliTest, VerifyGraphAgainstItself) {
  const Graph g = random_connected(10, 20, 2, 7);
  const std::string in = write_graph("g.txt", g);
  ASSERT_EQ(run({"verify", "-i", in, "--skeleton", in, "--mode", "exact"}), 0);
  const Json rep = Json::parse(out_.str());
  EXPECT_EQ(rep["max_rel_error"], 0.0);
  EXPECT_EQ(rep["failures"], 0);
}

TEST_F(CliTest, VerifyReportsFailuresWithExitOne) {
  const std::string in = write_graph("c4.txt", cycle_graph(4));
  const std::string sk = write_text("sk.txt", "4 4\n0 1 2\n1 2 1\n2 3 1\n3 0 1\n");
  EXPECT_EQ(run({"verify", "-i", in, "--skeleton", sk, "--epsilon", "0.1"}), 1);
  EXPECT_EQ(Json::parse(out_.str())["max_rel_error"], 0.5);
  EXPECT_EQ(run({"verify", "-i", in, "--skeleton", sk, "--mode", "sampled", "--trials", "50",
                 "--epsilon", "0.1"}),
            1);
}

TEST_F(CliTest, SparsifyIsDeterministic) {
  const std::string in = write_graph("g.txt", random_connected(300, 3000, 1));
  for (const char* scheme : {"ni", "step1", "setlambda", "decreasing", "two-step"}) {
    ASSERT_EQ(run({"sparsify", "-i", in, "--scheme", scheme, "--c0", "0.05", "--seed", "11"}), 0);
    const std::string first = out_.str();
    ASSERT_EQ(run({"sparsify", "-i", in, "--scheme", scheme, "--c0", "0.05", "--seed", "11"}), 0);
    EXPECT_EQ(out_.str(), first) << scheme;
    ASSERT_EQ(run({"sparsify", "-i", in, "--scheme", scheme, "--c0", "0.05", "--seed", "12"}), 0);
    EXPECT_NE(out_.str(), first) << scheme;
  }
}

TEST_F(CliTest, ExitCodes) {
  const std::string in = write_graph("k4.txt", complete_graph(4));
  EXPECT_EQ(run({"sparsify", "-i", in, "--epsilon", "2"}), 2);
  EXPECT_EQ(run({"sparsify", "-i", in, "--scheme", "bogus"}), 2);
  EXPECT_EQ(run({"sparsify"}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"sparsify", "-i", path("missing.txt")}), 3);
  const std::string bad = write_text("bad.txt", "2 1\n0 0 1\n");
  EXPECT_EQ(run({"sparsify", "-i", bad}), 3);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  const std::string big = write_graph("big.txt", cycle_graph(30));
  EXPECT_EQ(run({"verify", "-i", big, "--skeleton", big, "--mode", "exact"}), 2);
  EXPECT_EQ(run({"count-projections", "-i", big}), 3);
}

TEST_F(CliTest, NiAndLambdaOutput) {
  const std::string in = write_graph("k4.txt", complete_graph(4));
  ASSERT_EQ(run({"ni", "-i", in}), 0);
  EXPECT_EQ(out_.str(), "0\t1\n1\t1\n2\t1\n3\t3\n4\t2\n5\t2\nK\t3\n");
  const std::string tri = write_text("tri.txt", "3 3\n0 1 3\n1 2 2\n0 2 1\n");
  ASSERT_EQ(run({"ni", "-i", tri, "--order", "decreasing"}), 0);
  EXPECT_EQ(out_.str(), "0\t1\n1\t1\n2\t3\nK\t3\n");
  EXPECT_EQ(run({"ni", "-i", tri, "--order", "sideways"}), 2);
  ASSERT_EQ(run({"lambda", "-i", in, "--scheme", "strong"}), 0);
  EXPECT_EQ(out_.str(), "0\t3\n1\t3\n2\t3\n3\t3\n4\t3\n5\t3\nalpha\t1\n");
  const std::string dimacs = write_text("k4.dimacs", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  ASSERT_EQ(run({"lambda", "-i", dimacs, "--format", "dimacs", "--scheme", "conn"}), 0);
  EXPECT_NE(out_.str().find("alpha\t5"), std::string::npos);
}

TEST_F(CliTest, CountProjections) {
  const std::string in = write_graph("k4.txt", complete_graph(4));
  ASSERT_EQ(run({"count-projections", "-i", in}), 0);
  const Json j = Json::parse(out_.str());
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["projections"], 4);
  EXPECT_EQ(j["bound"], 16.0);
  EXPECT_EQ(run({"count-projections", "-i", in, "--k", "1"}), 2);
}

TEST_F(CliTest, BenchProducesRows) {
  ASSERT_EQ(run({"bench", "--scheme", "step1", "--min-log", "8", "--max-log", "10", "--repeats", "1"}), 0);
  const Json j = Json::parse(out_.str());
  ASSERT_EQ(j["rows"].size(), 3U);
  EXPECT_EQ(j["rows"][2]["m"], 1024);
  EXPECT_TRUE(j["rows"][0]["ratio"].is_null());
  EXPECT_EQ(run({"bench", "--min-log", "10", "--max-log", "8"}), 2);
}

}  // namespace
}  // namespace cutsparse
