#include "transat/chordal.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>

namespace transat {

namespace {

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering iff the graph is chordal.
std::optional<std::vector<Vertex>> perfect_elimination_order(const RelationGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> weight(n + 1, 0);
  std::vector<bool> visited(n + 1, false);
  std::vector<std::size_t> rank(n + 1, 0);  // position in elimination order
  std::vector<Vertex> order(n);
  for (std::size_t step = n; step-- > 0;) {
    Vertex pick = 0;
    for (Vertex v = 1; v <= n; ++v)
      if (!visited[v] && (pick == 0 || weight[v] > weight[pick])) pick = v;
    visited[pick] = true;
    order[step] = pick;
    rank[pick] = step;
    for (const Incidence& inc : g.neighbors(pick))
      if (!visited[inc.neighbor]) ++weight[inc.neighbor];
  }

  for (Vertex v : order) {
    Vertex parent = 0;
    for (const Incidence& inc : g.neighbors(v))
      if (rank[inc.neighbor] > rank[v] && (parent == 0 || rank[inc.neighbor] < rank[parent]))
        parent = inc.neighbor;
    if (parent == 0) continue;
    for (const Incidence& inc : g.neighbors(v)) {
      const Vertex u = inc.neighbor;
      if (u != parent && rank[u] > rank[v] && !g.has_edge(parent, u)) return std::nullopt;
    }
  }
  return order;
}

}  // namespace

ChordalAugmentation make_chordal(const RelationGraph& g, Var fresh_var_base) {
  if (fresh_var_base <= g.max_var())
    throw Error(ErrorCode::VarBaseTooLow, "fresh base " + std::to_string(fresh_var_base) +
                                              " does not exceed variable " + std::to_string(g.max_var()));
  if (auto peo = perfect_elimination_order(g)) return {g, {}, std::move(*peo)};

  const std::size_t n = g.num_vertices();
  std::vector<std::set<Vertex>> adj(n + 1);
  for (const Edge& e : g.edges()) {
    adj[e.i].insert(e.j);
    adj[e.j].insert(e.i);
  }

  auto fill_count = [&](Vertex v) {
    std::size_t missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].contains(*b)) ++missing;
    return missing;
  };

  ChordalAugmentation out;
  std::vector<Edge> all(g.edges());
  std::vector<bool> eliminated(n + 1, false);
  Var next_var = fresh_var_base;

  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_degree = std::numeric_limits<std::size_t>::max();
    std::size_t best_fill = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 1; v <= n; ++v) {
      if (eliminated[v]) continue;
      const std::size_t degree = adj[v].size();
      if (degree > best_degree) continue;
      const std::size_t fill = fill_count(v);
      if (degree < best_degree || fill < best_fill) {
        best = v;
        best_degree = degree;
        best_fill = fill;
      }
    }

    const std::vector<Vertex> nbrs(adj[best].begin(), adj[best].end());
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (adj[nbrs[a]].insert(nbrs[b]).second) {
          adj[nbrs[b]].insert(nbrs[a]);
          Edge fill{nbrs[a], nbrs[b], next_var++};
          out.fill_edges.push_back(fill);
          all.push_back(fill);
        }
      }
    }
    for (Vertex u : nbrs) adj[u].erase(best);
    adj[best].clear();
    eliminated[best] = true;
    out.elimination_order.push_back(best);
  }

  out.graph = build_graph(n, all);
  return out;
}

bool verify_chordal(const RelationGraph& g) { return perfect_elimination_order(g).has_value(); }

}  // namespace transat
