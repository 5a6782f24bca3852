#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the code paths they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "transat/constraints.hpp"
#include "transat/eqgraph.hpp"

namespace transat::oracle {

/// Every simple cycle (length >= 3) as a canonical vertex list: smallest
/// vertex first, second vertex smaller than the last.
inline std::vector<std::vector<Vertex>> simple_cycles(const RelationGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (const Edge& e : g.edges()) adj[e.i][e.j] = adj[e.j][e.i] = true;

  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on(n + 1, false);
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    for (Vertex w = 1; w <= n; ++w) {
      if (!adj[v][w]) continue;
      if (w == path[0] && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= path[0] || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = false;
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    path = {s};
    on[s] = true;
    dfs(s);
    on[s] = false;
  }
  return out;
}

inline bool has_chord(const RelationGraph& g, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 2; q < k; ++q) {
      if (p == 0 && q == k - 1) continue;  // adjacent through the closing edge
      if (g.has_edge(c[p], c[q])) return true;
    }
  return false;
}

inline std::set<std::vector<Vertex>> chord_free_cycles(const RelationGraph& g) {
  std::set<std::vector<Vertex>> out;
  for (auto& c : simple_cycles(g))
    if (!has_chord(g, c)) out.insert(c);
  return out;
}

/// Cycle as a bitmask over edge indices (graphs with at most 64 edges).
inline std::uint64_t cycle_mask(const RelationGraph& g, const std::vector<Vertex>& c) {
  std::uint64_t mask = 0;
  for (std::size_t t = 0; t < c.size(); ++t) mask |= std::uint64_t{1} << *g.edge_index(c[t], c[(t + 1) % c.size()]);
  return mask;
}

/// Transitivity violated iff some simple cycle has exactly one 0-edge.
/// `ones` holds the 1-edges as a bitmask over edge indices.
inline bool violates(const std::vector<std::uint64_t>& cycle_masks, std::uint64_t ones) {
  for (std::uint64_t m : cycle_masks)
    if (std::popcount(m & ~ones) == 1) return true;
  return false;
}

inline std::vector<std::uint64_t> simple_cycle_masks(const RelationGraph& g) {
  std::vector<std::uint64_t> out;
  for (auto& c : simple_cycles(g)) out.push_back(cycle_mask(g, c));
  return out;
}

/// Clause as (positive mask, negative mask) over variables 1..64.
struct MaskClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

inline std::vector<MaskClause> to_masks(const ClauseSet& f) {
  std::vector<MaskClause> out;
  for (const Clause& c : f.clauses) {
    MaskClause m;
    for (Lit lit : c) (lit > 0 ? m.pos : m.neg) |= std::uint64_t{1} << (std::abs(lit) - 1);
    out.push_back(m);
  }
  return out;
}

inline bool eval(const std::vector<MaskClause>& f, std::uint64_t a) {
  for (const MaskClause& c : f)
    if (((a & c.pos) | (~a & c.neg)) == 0) return false;
  return true;
}

/// Exhaustive satisfiability over variables 1..num_vars (<= 26).
inline bool brute_sat(const ClauseSet& f) {
  const auto masks = to_masks(f);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.num_vars); ++a)
    if (eval(masks, a)) return true;
  return false;
}

/// Number of models over variables 1..num_vars.
inline std::uint64_t brute_count(const ClauseSet& f) {
  const auto masks = to_masks(f);
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.num_vars); ++a) count += eval(masks, a) ? 1 : 0;
  return count;
}

/// Exhaustive check of F_sat under transitivity of g's edge variables.
inline bool brute_sat_transitive(const ClauseSet& f_sat, const RelationGraph& g) {
  const auto masks = to_masks(f_sat);
  const auto cycles = simple_cycle_masks(g);
  const Var vars = std::max(f_sat.num_vars, g.max_var());
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars); ++a) {
    if (!eval(masks, a)) continue;
    std::uint64_t ones = 0;
    for (std::uint32_t k = 0; k < g.num_edges(); ++k)
      if ((a >> (g.edges()[k].var - 1)) & 1) ones |= std::uint64_t{1} << k;
    if (!violates(cycles, ones)) return true;
  }
  return false;
}

inline ClauseSet random_kcnf(std::mt19937_64& rng, Var vars, std::size_t clauses, std::size_t width) {
  ClauseSet f;
  f.num_vars = vars;
  std::uniform_int_distribution<Var> pick(1, vars);
  for (std::size_t c = 0; c < clauses; ++c) {
    Clause clause;
    while (clause.size() < width) {
      const Var v = pick(rng);
      if (std::any_of(clause.begin(), clause.end(), [&](Lit l) { return static_cast<Var>(std::abs(l)) == v; }))
        continue;
      clause.push_back((rng() & 1) ? static_cast<Lit>(v) : -static_cast<Lit>(v));
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

/// Random graph on <= max_vertices vertices with <= max_edges edges.
inline RelationGraph random_small_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = 3 + rng() % (max_vertices - 2);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const std::size_t m = std::min<std::size_t>(pairs.size(), 2 + rng() % (max_edges - 1));
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < m; ++k) edges.push_back({pairs[k].first, pairs[k].second, static_cast<Var>(k + 1)});
  return build_graph(n, edges);
}

/// F_sat over the graph's variables plus `extra` free variables: a mix of
/// short clauses and units that tends to force relational patterns.
inline ClauseSet random_fsat(std::mt19937_64& rng, const RelationGraph& g, Var extra) {
  const Var vars = g.max_var() + extra;
  ClauseSet f = random_kcnf(rng, vars, 1 + rng() % (vars + 2), 2);
  const std::size_t units = rng() % 4;
  for (std::size_t u = 0; u < units; ++u) {
    const Var v = 1 + static_cast<Var>(rng() % vars);
    f.clauses.push_back({(rng() & 1) ? static_cast<Lit>(v) : -static_cast<Lit>(v)});
  }
  return f;
}

}  // namespace transat::oracle
