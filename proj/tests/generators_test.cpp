#include <gtest/gtest.h>

#include "oracles.hpp"
#include "transat/cnfio.hpp"
#include "transat/cycles.hpp"
#include "transat/generators.hpp"

namespace transat {
namespace {

TEST(Mesh, Sizes) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const RelationGraph g = gen_mesh(n);
    EXPECT_EQ(g.num_vertices(), n * n);
    EXPECT_EQ(g.num_edges(), 2 * n * (n - 1));
  }
  EXPECT_EQ(gen_mesh(4).num_edges(), 24u);
  EXPECT_EQ(gen_mesh(6).num_edges(), 60u);
  EXPECT_EQ(enumerate_chord_free_cycles(gen_mesh(2)).size(), 1u);
}

TEST(Mesh, VariableNumbering) {
  const RelationGraph g = gen_mesh(3);
  // horizontal edges row-major, then vertical edges row-major
  EXPECT_EQ(g.var_of(1, 2), 1u);
  EXPECT_EQ(g.var_of(2, 3), 2u);
  EXPECT_EQ(g.var_of(4, 5), 3u);
  EXPECT_EQ(g.var_of(8, 9), 6u);
  EXPECT_EQ(g.var_of(1, 4), 7u);
  EXPECT_EQ(g.var_of(2, 5), 8u);
  EXPECT_EQ(g.var_of(6, 9), 12u);
}

TEST(Mesh, CycleCounts) {
  EXPECT_EQ(enumerate_chord_free_cycles(gen_mesh(4)).size(), 24u);
  EXPECT_EQ(enumerate_chord_free_cycles(gen_mesh(5)).size(), 229u);
  EXPECT_EQ(enumerate_chord_free_cycles(gen_mesh(6)).size(), 3436u);
}

TEST(Diamond, Shape) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const RelationGraph g = gen_diamond(n);
    EXPECT_EQ(g.num_vertices(), 3 * n + 1);
    EXPECT_EQ(g.num_edges(), 4 * n + 1);
    EXPECT_EQ(enumerate_chord_free_cycles(g).size(), (std::size_t{1} << n) + n) << n;
  }
  const RelationGraph one = gen_diamond(1);
  EXPECT_EQ(one.num_vertices(), 5u);
  EXPECT_EQ(enumerate_chord_free_cycles(one).size(), 3u);
}

// Why the single-face member cannot live on 4 vertices: no graph on 4
// vertices has exactly 3 chord-free cycles.
TEST(Diamond, NoFourVertexGraphHasThreeChordFreeCycles) {
  const std::vector<std::pair<Vertex, Vertex>> pairs{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  std::set<std::size_t> counts;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Edge> edges;
    for (unsigned k = 0; k < 6; ++k)
      if ((mask >> k) & 1) edges.push_back({pairs[k].first, pairs[k].second, k + 1});
    const RelationGraph g = build_graph(4, edges);
    const std::size_t count = oracle::chord_free_cycles(g).size();
    EXPECT_NE(count, 3u) << "mask " << mask;
    counts.insert(count);
  }
  EXPECT_EQ(counts, (std::set<std::size_t>{0, 1, 2, 4}));
}

TEST(Random, Extremes) {
  EXPECT_EQ(gen_random(7, 0.0, 1).num_edges(), 0u);
  EXPECT_EQ(gen_random(7, 1.0, 1).num_edges(), 21u);
  EXPECT_EQ(gen_random(1, 1.0, 1).num_edges(), 0u);
}

TEST(Random, SeedDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(write_rel(rel_from_graph(gen_random(15, 0.35, seed))),
              write_rel(rel_from_graph(gen_random(15, 0.35, seed))));
  }
  EXPECT_NE(write_rel(rel_from_graph(gen_random(15, 0.35, 1))), write_rel(rel_from_graph(gen_random(15, 0.35, 2))));
}

TEST(Random, VariablesFollowCanonicalPairOrder) {
  const RelationGraph g = gen_random(10, 0.5, 3);
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    EXPECT_EQ(g.edges()[k].var, k + 1);
    if (k > 0) {
      const Edge& a = g.edges()[k - 1];
      const Edge& b = g.edges()[k];
      EXPECT_TRUE(a.i < b.i || (a.i == b.i && a.j < b.j));
    }
  }
}

TEST(Random, GoldenFile) {
  const std::string golden = read_file(std::string(TRANSAT_TEST_DATA) + "/random_8_0.3_42.rel");
  EXPECT_EQ(write_rel(rel_from_graph(gen_random(8, 0.3, 42))), golden);
}

TEST(BenchSpecs, Dispatch) {
  EXPECT_EQ(generate_bench({BenchFamily::Mesh, 3, 0, 0}).num_edges(), 12u);
  EXPECT_EQ(generate_bench({BenchFamily::Diamond, 3, 0, 0}).num_vertices(), 10u);
  EXPECT_EQ(generate_bench({BenchFamily::Random, 6, 1.0, 0}).num_edges(), 15u);
  EXPECT_EQ(parse_family("diamond"), BenchFamily::Diamond);
  EXPECT_THROW(parse_family("torus"), Error);
}

}  // namespace
}  // namespace transat
