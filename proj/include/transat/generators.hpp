#pragma once

#include <cstdint>
#include <string>

#include "transat/eqgraph.hpp"

namespace transat {

enum class BenchFamily { Mesh, Diamond, Random };

struct BenchSpec {
  BenchFamily family = BenchFamily::Mesh;
  std::size_t n = 4;         // mesh side / diamond face count / random vertex count
  double probability = 0.5;  // random only
  std::uint64_t seed = 0;    // random only
};

/// n x n grid. Vertex (r, c) is r*n + c + 1. Variables: all horizontal edges
/// row-major, then all vertical edges row-major.
RelationGraph gen_mesh(std::size_t n);

/// Chain of n diamond faces closed by a return edge from the last hinge
/// vertex to the first. Vertices are l_1, t_1, b_1, l_2, ..., l_{n+1}.
///
/// For n = 1 the return edge would coincide with the single face's
/// diagonal (a chord of the face), so it is routed through one extra vertex
/// instead; no simple 4-vertex graph has 2^1 + 1 chord-free cycles.
RelationGraph gen_diamond(std::size_t n);

/// G(N, p): each pair (i, j), i < j, kept independently with probability p,
/// decided by std::mt19937_64(seed) mapped to [0, 1) as (x >> 11) * 2^-53.
/// Both are fully specified by the C++ standard, so output is identical on
/// every platform. Variables are numbered in canonical pair order.
RelationGraph gen_random(std::size_t n, double p, std::uint64_t seed);

RelationGraph generate_bench(const BenchSpec& spec);

BenchFamily parse_family(const std::string& name);

}  // namespace transat
