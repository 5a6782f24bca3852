#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "transat/cnfio.hpp"

namespace transat {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "transat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("transat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    write_file(path("k3.rel"), "p rel 3 3\n1 1 2\n2 2 3\n3 1 3\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenDense) {
  const Invocation r = run({"gen", "--method", "dense", "--rel", path("k3.rel"), "-o", path("out.cnf")});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(read_dimacs(read_file(path("out.cnf"))).clauses.size(), 3u);
}

TEST_F(CliTest, GenMergesWithCnfAndReadsBack) {
  write_file(path("f.cnf"), "p cnf 4 1\n1 4 0\n");
  const Invocation r = run({"gen", "--method", "sparse", "--rel", path("k3.rel"), "--cnf", path("f.cnf"), "-o",
                     path("out.cnf")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const ClauseSet merged = read_dimacs(read_file(path("out.cnf")));
  EXPECT_EQ(merged.clauses.size(), 4u);
  EXPECT_EQ(merged.clauses[0], (Clause{1, 4}));
}

TEST_F(CliTest, BenchMeshStats) {
  const Invocation r = run({"bench", "mesh", "--n", "4", "--method", "direct", "--stats"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("edges=24 cycles=24 clauses=192"), std::string::npos) << r.out;
}

TEST_F(CliTest, BenchWritesReadableRel) {
  const Invocation r = run({"bench", "random", "--n", "8", "--p", "0.3", "--seed", "42", "-o", path("g.rel")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(read_rel(read_file(path("g.rel"))).entries.size(), 10u);
  EXPECT_EQ(run({"gen", "--rel", path("g.rel"), "--method", "direct"}).code, cli::kExitOk);
}

TEST_F(CliTest, MeshTableCsv) {
  const Invocation r = run({"bench", "--table2", "--max-n", "5", "--csv", "--jobs", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("family,n,method,edges,cycles,clauses,seconds\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("mesh,4,direct,24,24,192,"), std::string::npos);
  EXPECT_NE(r.out.find("mesh,4,dense,120,560,1680,"), std::string::npos);
  EXPECT_NE(r.out.find("mesh,5,direct,40,229,3056,"), std::string::npos);
  EXPECT_NE(r.out.find("mesh,5,dense,300,2300,6900,"), std::string::npos);
}

TEST_F(CliTest, SolveLazyContradiction) {
  write_file(path("f.cnf"), "p cnf 3 3\n1 0\n2 0\n-3 0\n");
  const Invocation r = run({"solve", "--cnf", path("f.cnf"), "--rel", path("k3.rel"), "--mode", "lazy", "--stats"});
  EXPECT_EQ(r.code, cli::kExitUnsat) << r.err;
  EXPECT_NE(r.out.find("refinement_rounds=1"), std::string::npos) << r.out;
}

TEST_F(CliTest, SolveEagerWritesModel) {
  write_file(path("f.cnf"), "p cnf 3 2\n1 0\n2 0\n");
  const Invocation r = run({"solve", "--cnf", path("f.cnf"), "--rel", path("k3.rel"), "--model", path("m.txt")});
  ASSERT_EQ(r.code, cli::kExitSat) << r.err;
  const Assignment chi = read_assignment(read_file(path("m.txt")));
  EXPECT_TRUE(chi.at(3));
  const Invocation check = run({"check", "--rel", path("k3.rel"), "--assign", path("m.txt")});
  EXPECT_EQ(check.code, cli::kExitOk) << check.err;
  EXPECT_EQ(check.out, "ok\n");
}

TEST_F(CliTest, SolveWithEmbeddedRelation) {
  write_file(path("f.cnf"), "c rel 1 1 2\nc rel 2 2 3\nc rel 3 1 3\np cnf 3 3\n1 0\n2 0\n-3 0\n");
  EXPECT_EQ(run({"solve", "--cnf", path("f.cnf")}).code, cli::kExitUnsat);
}

TEST_F(CliTest, StatsAreStable) {
  write_file(path("f.cnf"), "p cnf 4 2\n1 4 0\n-2 3 0\n");
  const auto a = run({"solve", "--cnf", path("f.cnf"), "--rel", path("k3.rel"), "--stats", "--seed", "5"});
  const auto b = run({"solve", "--cnf", path("f.cnf"), "--rel", path("k3.rel"), "--stats", "--seed", "5"});
  EXPECT_EQ(a.code, cli::kExitSat);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("decisions="), std::string::npos);
}

TEST_F(CliTest, CheckPrintsWitness) {
  write_file(path("bad.txt"), "1 1\n2 1\n3 0\n");
  const Invocation r = run({"check", "--rel", path("k3.rel"), "--assign", path("bad.txt")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("violation cycle=1,2,3 zero_edge=1-3 var=3"), std::string::npos) << r.out;
}

TEST_F(CliTest, UsageAndParseErrors) {
  EXPECT_EQ(run({}).code, cli::kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitError);
  EXPECT_EQ(run({"gen", "--rel", path("missing.rel")}).code, cli::kExitError);
  write_file(path("broken.rel"), "p rel 3 1\n1 2 2\n");
  const Invocation r = run({"gen", "--rel", path("broken.rel")});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("VertexOutOfRange"), std::string::npos) << r.err;
}

TEST_F(CliTest, LimitsExitTwo) {
  EXPECT_EQ(run({"bench", "diamond", "--n", "8", "--method", "direct", "--cycle-limit", "10"}).code,
            cli::kExitLimit);
  EXPECT_EQ(run({"obdd", "--probe-growth", "--max-n", "4", "--node-limit", "100"}).code, cli::kExitLimit);
}

TEST_F(CliTest, EnvironmentDefaults) {
  ::setenv("TRANSAT_CYCLE_LIMIT", "10", 1);
  const int code = run({"bench", "diamond", "--n", "8", "--method", "direct"}).code;
  ::unsetenv("TRANSAT_CYCLE_LIMIT");
  EXPECT_EQ(code, cli::kExitLimit);
}

TEST_F(CliTest, ObddFlows) {
  write_file(path("bad.cnf"), "p cnf 3 3\n1 0\n2 0\n-3 0\n");
  EXPECT_EQ(run({"obdd", "--reduced-check", "--cnf", path("bad.cnf"), "--rel", path("k3.rel")}).code,
            cli::kExitUnsat);
  const Invocation imp = run({"obdd", "--implicants", "--cnf", path("bad.cnf"), "--rel", path("k3.rel")});
  EXPECT_EQ(imp.code, cli::kExitUnsat);
  EXPECT_NE(imp.out.find("exhausted examined=1"), std::string::npos) << imp.out;

  write_file(path("ok.cnf"), "p cnf 4 2\n-1 0\n4 0\n");
  const Invocation found = run({"obdd", "--implicants", "--cnf", path("ok.cnf"), "--rel", path("k3.rel")});
  EXPECT_EQ(found.code, cli::kExitSat);
  EXPECT_NE(found.out.find("implicant -1 4"), std::string::npos) << found.out;

  const Invocation probe = run({"obdd", "--probe-growth", "--max-n", "4", "--csv"});
  ASSERT_EQ(probe.code, cli::kExitOk) << probe.err;
  EXPECT_EQ(probe.out.rfind("n,ordering,nodes,seconds\n", 0), 0u);
  EXPECT_NE(probe.out.find("4,row-major,883,"), std::string::npos) << probe.out;
}

TEST_F(CliTest, HelpDocumentsCsvAndEnvironment) {
  const Invocation r = run({"bench", "--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("family,n,method,edges,cycles,clauses,seconds"), std::string::npos);
  EXPECT_NE(run({"--help"}).out.find("TRANSAT_CYCLE_LIMIT"), std::string::npos);
}

}  // namespace
}  // namespace transat
