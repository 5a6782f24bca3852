#include "transat/generators.hpp"

#include <random>

namespace transat {

RelationGraph gen_mesh(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "mesh side must be at least 2");
  auto id = [n](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * n + c + 1); };
  std::vector<Edge> edges;
  edges.reserve(2 * n * (n - 1));
  Var var = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) edges.push_back({id(r, c), id(r, c + 1), var++});
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c < n; ++c) edges.push_back({id(r, c), id(r + 1, c), var++});
  return build_graph(n * n, edges);
}

RelationGraph gen_diamond(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "diamond family needs at least one face");
  auto hinge = [](std::size_t i) { return static_cast<Vertex>(3 * i + 1); };  // l_{i+1}, 0-based i
  std::vector<Edge> edges;
  Var var = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex left = hinge(i), top = left + 1, bottom = left + 2, right = hinge(i + 1);
    edges.push_back({left, top, var++});
    edges.push_back({left, bottom, var++});
    edges.push_back({top, right, var++});
    edges.push_back({bottom, right, var++});
  }
  std::size_t vertices = 3 * n + 1;
  if (n == 1) {
    const auto extra = static_cast<Vertex>(++vertices);
    edges.push_back({hinge(1), extra, var++});
    edges.push_back({extra, hinge(0), var++});
  } else {
    edges.push_back({hinge(n), hinge(0), var++});
  }
  return build_graph(vertices, edges);
}

RelationGraph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "random graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "edge probability outside [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  Var var = 1;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({i, j, var++});
    }
  }
  return build_graph(n, edges);
}

RelationGraph generate_bench(const BenchSpec& spec) {
  switch (spec.family) {
    case BenchFamily::Mesh: return gen_mesh(spec.n);
    case BenchFamily::Diamond: return gen_diamond(spec.n);
    case BenchFamily::Random: return gen_random(spec.n, spec.probability, spec.seed);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown benchmark family");
}

BenchFamily parse_family(const std::string& name) {
  if (name == "mesh") return BenchFamily::Mesh;
  if (name == "diamond") return BenchFamily::Diamond;
  if (name == "random") return BenchFamily::Random;
  throw Error(ErrorCode::InvalidArgument, "unknown benchmark family '" + name + "'");
}

}  // namespace transat
