#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reference.hpp"
#include "rtvd/cli.hpp"
#include "rtvd/instance_io.hpp"

namespace rtvd {
namespace {

namespace fs = std::filesystem;
using namespace rtvd::cli;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rtvd_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

// Value of `key: value` in a report, or "<missing>".
std::string field(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + ":", 0) == 0) {
      std::string v = line.substr(key.size() + 1);
      return v.empty() ? v : v.substr(1);
    }
  return "<missing>";
}

const char* kTriangle = "c acyclic triangle, midpoint 2\np rtvd 3 3 1 0\na 1 2\na 2 3\na 1 3\n";
const char* kCycle = "p rtvd 3 3 0 0\na 1 2\na 2 3\na 3 1\n";
const char* kTwoTriangles = "p rtvd 6 6 1 0\na 1 2\na 2 3\na 1 3\na 4 5\na 5 6\na 4 6\n";

TEST_F(CliTest, SolveExamples) {
  std::string tri = write("tri.txt", kTriangle);
  EXPECT_EQ(cmd_solve({tri, "hitting"}, out_, err_), kExitYes);
  EXPECT_EQ(field(out_.str(), "status"), "YES");
  EXPECT_EQ(field(out_.str(), "engine"), "hitting");
  EXPECT_EQ(field(out_.str(), "deleted"), "1");

  out_.str("");
  EXPECT_EQ(cmd_solve({write("cyc.txt", kCycle)}, out_, err_), kExitYes);
  EXPECT_EQ(field(out_.str(), "deleted"), "");
  EXPECT_EQ(field(out_.str(), "size"), "0");

  out_.str("");
  EXPECT_EQ(cmd_solve({write("two.txt", kTwoTriangles)}, out_, err_), kExitNo);
  EXPECT_EQ(field(out_.str(), "status"), "NO");

  // Engines that compute a minimum report it on NO.
  out_.str("");
  SolveOptions alt{write("t3.txt", "p rtvd 3 3 0 0\na 1 2\na 2 3\na 1 3\n"), "alt"};
  EXPECT_EQ(cmd_solve(alt, out_, err_), kExitNo);
  EXPECT_EQ(field(out_.str(), "optimum"), "1");
}

TEST_F(CliTest, SolveReportEndsWithDeletedSet) {
  std::string tri = write("tri.txt", kTriangle);
  ASSERT_EQ(cmd_solve({tri}, out_, err_), kExitYes);
  std::string report = out_.str();
  ASSERT_FALSE(report.empty());
  std::string last = report.substr(report.rfind('\n', report.size() - 2) + 1);
  EXPECT_EQ(last.rfind("deleted:", 0), 0u);
}

TEST_F(CliTest, EveryEngineAgreesOnSmallInstances) {
  // Transitive tournament on 4 vertices: in-tournament, tournament, ALT.
  std::string t4 = write("t4.txt", "p rtvd 4 6 2 0\na 1 2\na 1 3\na 1 4\na 2 3\na 2 4\na 3 4\n");
  for (const char* engine : {"auto", "oracle", "tournament", "alpha", "alt", "hitting"}) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_solve({t4, engine}, out, err), kExitYes) << engine << "\n" << err.str();
    EXPECT_EQ(field(out.str(), "size"), "2") << engine;
    std::ostringstream out1, err1;
    SolveOptions tight{t4, engine};
    tight.k = 1;
    EXPECT_EQ(cmd_solve(tight, out1, err1), kExitNo) << engine;
  }
}

TEST_F(CliTest, SolveErrors) {
  EXPECT_EQ(cmd_solve({write("bad.txt", "p rtvd 2 1 0 0\na 1 5\n")}, out_, err_), kExitParse);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  EXPECT_EQ(cmd_solve({"/nonexistent/x.txt"}, out_, err_), kExitParse);
  EXPECT_EQ(cmd_solve({write("two.txt", kTwoTriangles), "tournament"}, out_, err_), kExitPrecondition);
  EXPECT_EQ(cmd_solve({write("cyc3.txt", kCycle), "alt"}, out_, err_), kExitPrecondition);
  SolveOptions big_k{write("cyc2.txt", kCycle)};
  big_k.k = 7;
  EXPECT_EQ(cmd_solve(big_k, out_, err_), kExitPrecondition);
}

TEST_F(CliTest, SolveUnknownBeyondCaps) {
  // 40-vertex digraph outside every special class, with a large budget.
  std::ostringstream text;
  text << "p rtvd 40 44 20 0\n";
  for (int i = 1; i < 40; ++i) text << "a " << i << " " << i + 1 << "\n";
  text << "a 40 1\na 1 20\na 1 30\na 10 25\na 5 25\n";
  SolveOptions opts{write("big.txt", text.str())};
  EXPECT_EQ(cmd_solve(opts, out_, err_), kExitCap);
  EXPECT_EQ(field(out_.str(), "status"), "UNKNOWN");
}

TEST_F(CliTest, Verify) {
  std::string tri = write("tri.txt", kTriangle);
  EXPECT_EQ(cmd_verify({tri, "2"}, out_, err_), kExitYes);
  out_.str("");
  EXPECT_EQ(cmd_verify({tri, ""}, out_, err_), kExitNo);
  EXPECT_EQ(field(out_.str(), "transitive"), "(1,3)");
  VerifyOptions relaxed{tri, ""};
  relaxed.ell = 1;
  EXPECT_EQ(cmd_verify(relaxed, out_, err_), kExitYes);
  EXPECT_EQ(cmd_verify({tri, "1,2"}, out_, err_), kExitNo);
  EXPECT_EQ(cmd_verify({tri, "4"}, out_, err_), kExitPrecondition);
  EXPECT_EQ(cmd_verify({tri, "x"}, out_, err_), kExitParse);
}

TEST_F(CliTest, Kernelize) {
  std::string tri = write("tri.txt", kTriangle);
  for (const char* provider : {"trivial", "flow"}) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_kernelize({tri, provider}, out, err), kExitYes);
    std::istringstream in(out.str());
    ParsedInstance kern = read_instance(in);
    EXPECT_EQ(kern.instance.digraph.num_vertices(), 3);
    EXPECT_EQ(kern.instance.k, 1);
  }
  std::string three = write("three.txt",
                            "p rtvd 9 9 1 0\na 1 2\na 2 3\na 1 3\na 4 5\na 5 6\na 4 6\na 7 8\na 8 9\na 7 9\n");
  EXPECT_EQ(cmd_kernelize({three}, out_, err_), kExitNo);
  EXPECT_EQ(field(out_.str(), "status"), "NO");
  EXPECT_EQ(cmd_kernelize({tri, "magic"}, out_, err_), kExitPrecondition);
}

TEST_F(CliTest, ReduceVertexCover) {
  std::string k3 = write("k3.txt", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  ASSERT_EQ(cmd_reduce({"vc", k3, 2, 0}, out_, err_), kExitYes);
  std::istringstream in(out_.str());
  ParsedInstance inst = read_instance(in);
  EXPECT_EQ(inst.instance.digraph.num_vertices(), 6);
  EXPECT_EQ(inst.instance.k, 2);
  EXPECT_FALSE(inst.comments.empty());
}

TEST_F(CliTest, ReduceMulticut) {
  std::string mc = write("mc.txt", "p mcut 3 2 1\na 1 2\na 2 3\nt 1 3\n");
  ASSERT_EQ(cmd_reduce({"multicut", mc, 1, 0}, out_, err_), kExitYes);
  std::istringstream in(out_.str());
  EXPECT_EQ(read_instance(in).instance.digraph.num_vertices(), 9);
  EXPECT_EQ(cmd_reduce({"sat", mc, 1, 0}, out_, err_), kExitPrecondition);
}

TEST_F(CliTest, GenerateAltFromReach) {
  GenerateOptions opts;
  opts.graph_class = "alt";
  opts.reach = "2,3,4,5,5";
  ASSERT_EQ(cmd_generate(opts, out_, err_), kExitYes);
  std::istringstream in(out_.str());
  EXPECT_EQ(read_instance(in).instance.digraph.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
}

TEST_F(CliTest, GenerateClassesAreRecognized) {
  const std::pair<const char*, const char*> expect[] = {
      {"tournament", "tournament"}, {"alt", "connected-acyclic-local-tournament"}, {"in", "in-tournament"},
      {"out", "out-tournament"}, {"dag", "acyclic"}};
  for (auto [cls, key] : expect) {
    GenerateOptions opts;
    opts.graph_class = cls;
    opts.n = 9;
    opts.seed = 3;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_generate(opts, out, err), kExitYes) << cls << err.str();
    std::string path = write(std::string(cls) + ".txt", out.str());
    std::ostringstream rec, rerr;
    ASSERT_EQ(cmd_recognize(path, rec, rerr), kExitYes);
    EXPECT_EQ(field(rec.str(), key), "yes") << cls;
    std::ostringstream again, aerr;
    cmd_generate(opts, again, aerr);
    EXPECT_EQ(again.str(), out.str());
  }
  GenerateOptions bad;
  bad.graph_class = "in";
  bad.n = 20;
  bad.mode = "rejection";
  EXPECT_EQ(cmd_generate(bad, out_, err_), kExitCap);
  bad.graph_class = "planar";
  EXPECT_EQ(cmd_generate(bad, out_, err_), kExitPrecondition);
}

TEST_F(CliTest, RecognizeLocalTournament) {
  // Directed 4-cycle with one chord: local tournament, not a tournament.
  std::string path = write("local.txt", "p rtvd 4 5 0 0\na 1 2\na 2 3\na 3 4\na 4 1\na 1 3\n");
  ASSERT_EQ(cmd_recognize(path, out_, err_), kExitYes);
  EXPECT_EQ(field(out_.str(), "local-tournament"), "yes");
  EXPECT_EQ(field(out_.str(), "tournament"), "no");
  EXPECT_EQ(field(out_.str(), "acyclic"), "no");
}

}  // namespace
}  // namespace rtvd
