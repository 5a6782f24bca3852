#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "transat/chordal.hpp"
#include "transat/cnfio.hpp"
#include "transat/constraints.hpp"
#include "transat/generators.hpp"

namespace transat {
namespace {

RelationGraph k3() { return build_graph(3, std::vector<Edge>{{1, 2, 1}, {2, 3, 2}, {1, 3, 3}}); }

Assignment from_bits(const RelationGraph& g, std::uint64_t bits) {
  Assignment chi;
  for (std::uint32_t k = 0; k < g.num_edges(); ++k) chi.set(g.edges()[k].var, (bits >> k) & 1);
  return chi;
}

TEST(ClausesForCycle, Triangle) {
  const auto clauses = clauses_for_cycle(Cycle{{1, 2, 3}}, k3());
  EXPECT_EQ(clauses, (std::vector<Clause>{{-1, -2, 3}, {-2, -3, 1}, {-3, -1, 2}}));
}

TEST(ClausesForCycle, FourCycleShape) {
  const RelationGraph g = build_graph(4, std::vector<Edge>{{1, 2, 1}, {2, 3, 2}, {3, 4, 3}, {1, 4, 4}});
  const auto clauses = clauses_for_cycle(Cycle{{1, 2, 3, 4}}, g);
  ASSERT_EQ(clauses.size(), 4u);
  std::set<Lit> asserted;
  for (const Clause& c : clauses) {
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(std::count_if(c.begin(), c.end(), [](Lit l) { return l < 0; }), 3);
    asserted.insert(*std::find_if(c.begin(), c.end(), [](Lit l) { return l > 0; }));
  }
  EXPECT_EQ(asserted, (std::set<Lit>{1, 2, 3, 4}));
}

TEST(ClausesForCycle, EdgeMissing) {
  const RelationGraph path = build_graph(3, std::vector<Edge>{{1, 2, 1}, {2, 3, 2}});
  try {
    clauses_for_cycle(Cycle{{1, 2, 3}}, path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EdgeMissing);
  }
}

TEST(ClausesForCycle, TriangleSatisfactionMatchesOracle) {
  const RelationGraph g = k3();
  const ClauseSet f{3, clauses_for_cycle(Cycle{{1, 2, 3}}, g)};
  int satisfying = 0;
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const Assignment chi = from_bits(g, bits);
    EXPECT_EQ(satisfies(f, chi), !find_violation(g, chi).has_value());
    satisfying += satisfies(f, chi) ? 1 : 0;
  }
  EXPECT_EQ(satisfying, 5);
}

TEST(Generate, Mesh4Direct) {
  const auto gen = generate(gen_mesh(4), Method::Direct, 0);
  EXPECT_EQ(gen.report.edges, 24u);
  EXPECT_EQ(gen.report.cycles, 24u);
  EXPECT_EQ(gen.report.clauses, 192u);
  EXPECT_EQ(gen.cnf.clauses.size(), 192u);
  EXPECT_EQ(gen.cnf.num_vars, 24u);
  EXPECT_TRUE(gen.report.fill_vars.empty());
}

TEST(Generate, Mesh4Dense) {
  const auto gen = generate(gen_mesh(4), Method::Dense, 25);
  EXPECT_EQ(gen.report.edges, 120u);
  EXPECT_EQ(gen.report.cycles, 560u);
  EXPECT_EQ(gen.report.clauses, 1680u);
  EXPECT_EQ(gen.report.fill_vars.size(), 96u);
  EXPECT_EQ(gen.cnf.num_vars, 120u);
}

TEST(Generate, Mesh5Sparse) {
  const auto gen = generate(gen_mesh(5), Method::Sparse, 41);
  EXPECT_EQ(gen.report.clauses, 3 * gen.report.cycles);
  EXPECT_LE(static_cast<double>(gen.report.edges), 1.25 * 77);
  EXPECT_TRUE(verify_chordal(gen.graph));
}

TEST(Generate, DenseFormula) {
  for (std::size_t n = 3; n <= 25; ++n) {
    const RelationGraph g = gen_random(n, 0.3, n);
    const auto gen = generate(g, Method::Dense, g.max_var() + 1);
    EXPECT_EQ(gen.report.clauses, n * (n - 1) * (n - 2) / 2) << n;
    EXPECT_EQ(gen.cnf.clauses.size(), gen.report.clauses);
    EXPECT_EQ(gen.report.edges, n * (n - 1) / 2);
    EXPECT_EQ(gen.report.cycles, n * (n - 1) * (n - 2) / 6);
  }
  const auto k = generate(k3(), Method::Dense, 4);
  EXPECT_EQ(k.cnf.clauses.size(), 3u);
}

TEST(Generate, VarBaseTooLow) {
  for (Method m : {Method::Dense, Method::Sparse}) {
    try {
      generate(k3(), m, 3);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::VarBaseTooLow);
    }
  }
  EXPECT_NO_THROW(generate(k3(), Method::Direct, 0));
}

TEST(Generate, DirectLimit) {
  EXPECT_THROW(generate(gen_diamond(8), Method::Direct, 0, CycleLimits{10, 1000000}), LimitError);
}

TEST(Generate, ClauseWellFormedness) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const RelationGraph g = oracle::random_small_graph(rng, 9, 14);
    for (Method m : {Method::Direct, Method::Dense, Method::Sparse}) {
      const auto gen = generate(g, m, g.max_var() + 1);
      std::size_t emitted = 0;
      for (const Clause& c : gen.cnf.clauses) {
        ASSERT_FALSE(c.empty());
        std::set<Var> seen;
        for (Lit l : c) {
          EXPECT_NE(l, 0);
          EXPECT_LE(static_cast<Var>(std::abs(l)), gen.cnf.num_vars);
          EXPECT_TRUE(seen.insert(std::abs(l)).second) << "repeated literal";
        }
        ++emitted;
      }
      EXPECT_EQ(emitted, gen.report.clauses);
      if (m == Method::Direct) {
        const auto stats = cycle_stats(enumerate_chord_free_cycles(g));
        EXPECT_EQ(gen.report.clauses, stats.total_length);
      } else {
        EXPECT_EQ(gen.report.clauses, 3 * gen.report.cycles);
      }
      EXPECT_EQ(write_dimacs(gen.cnf), write_dimacs(generate(g, m, g.max_var() + 1).cnf));
    }
  }
}

// Direct clauses hold exactly when no cycle carries a single 0-edge.
TEST(ClauseOracle, ExhaustiveSmallGraphs) {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 150; ++round) {
    const RelationGraph g = oracle::random_small_graph(rng, 8, 12);
    const auto masks = oracle::to_masks(generate(g, Method::Direct, 0).cnf);
    const auto cycles = oracle::simple_cycle_masks(g);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.num_edges()); ++bits) {
      std::uint64_t a = 0;
      for (std::uint32_t k = 0; k < g.num_edges(); ++k)
        if ((bits >> k) & 1) a |= std::uint64_t{1} << (g.edges()[k].var - 1);
      ASSERT_EQ(oracle::eval(masks, a), !oracle::violates(cycles, bits)) << round << " " << bits;
    }
  }
}

TEST(Methods, Equisatisfiable) {
  std::mt19937_64 rng(202);
  for (int round = 0; round < 120; ++round) {
    const RelationGraph g = oracle::random_small_graph(rng, 6, 8);
    const ClauseSet f_sat = oracle::random_fsat(rng, g, 2);
    const bool expected = oracle::brute_sat_transitive(f_sat, g);
    const Var base = std::max(f_sat.num_vars, g.max_var()) + 1;
    for (Method m : {Method::Direct, Method::Dense, Method::Sparse}) {
      const ClauseSet merged = merge(f_sat, generate(g, m, base).cnf);
      ASSERT_LE(merged.num_vars, 24u);
      EXPECT_EQ(oracle::brute_sat(merged), expected) << to_string(m) << " round " << round;
    }
  }
}

TEST(MethodNames, RoundTrip) {
  for (Method m : {Method::Direct, Method::Dense, Method::Sparse}) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("cubic"), Error);
}

}  // namespace
}  // namespace transat
