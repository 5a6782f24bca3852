#include "transat/eqgraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "union_find.hpp"

namespace transat {

//===----------------------------------------------------------------------===//
// RelationGraph
//===----------------------------------------------------------------------===//

RelationGraph build_graph(std::size_t n, std::span<const Edge> edges) {
  RelationGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  std::vector<std::uint32_t> degree(n + 2, 0);

  for (const Edge& raw : edges) {
    Edge e = raw;
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i == 0 || e.j > n || e.i == e.j) {
      throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(raw.i) + "," +
                                                   std::to_string(raw.j) + ") with n=" + std::to_string(n));
    }
    if (e.var == 0) throw Error(ErrorCode::InvalidVariable, "variable ids must be positive");
    if (!g.by_var_.emplace(e.var, static_cast<std::uint32_t>(g.edges_.size())).second) {
      throw Error(ErrorCode::DuplicateVariable, "variable " + std::to_string(e.var) + " bound twice");
    }
    g.edges_.push_back(e);
    g.max_var_ = std::max(g.max_var_, e.var);
    ++degree[e.i];
    ++degree[e.j];
  }

  g.adj_offsets_.assign(n + 2, 0);
  for (std::size_t v = 1; v <= n; ++v) g.adj_offsets_[v + 1] = g.adj_offsets_[v] + degree[v];
  g.adj_.resize(2 * g.edges_.size());
  std::vector<std::uint32_t> fill(g.adj_offsets_.begin(), g.adj_offsets_.end());
  for (std::uint32_t k = 0; k < g.edges_.size(); ++k) {
    const Edge& e = g.edges_[k];
    g.adj_[fill[e.i]++] = {e.j, k};
    g.adj_[fill[e.j]++] = {e.i, k};
  }
  for (std::size_t v = 1; v <= n; ++v) {
    auto first = g.adj_.begin() + g.adj_offsets_[v];
    auto last = g.adj_.begin() + g.adj_offsets_[v + 1];
    std::sort(first, last, [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    auto dup = std::adjacent_find(first, last,
                                  [](const Incidence& a, const Incidence& b) { return a.neighbor == b.neighbor; });
    if (dup != last) {
      throw Error(ErrorCode::DuplicateEdge,
                  "pair (" + std::to_string(std::min<std::size_t>(v, dup->neighbor)) + "," +
                      std::to_string(std::max<std::size_t>(v, dup->neighbor)) + ") appears twice");
    }
  }

  g.canonical_.resize(g.edges_.size());
  for (std::uint32_t k = 0; k < g.canonical_.size(); ++k) g.canonical_[k] = k;
  std::sort(g.canonical_.begin(), g.canonical_.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Edge& x = g.edges_[a];
    const Edge& y = g.edges_[b];
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  });
  return g;
}

std::span<const Incidence> RelationGraph::neighbors(Vertex v) const {
  if (v == 0 || v > n_) return {};
  return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
}

std::optional<std::uint32_t> RelationGraph::edge_index(Vertex a, Vertex b) const {
  auto adj = neighbors(a);
  auto it = std::lower_bound(adj.begin(), adj.end(), b,
                             [](const Incidence& inc, Vertex key) { return inc.neighbor < key; });
  if (it == adj.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

std::optional<Var> RelationGraph::var_of(Vertex a, Vertex b) const {
  if (auto k = edge_index(a, b)) return edges_[*k].var;
  return std::nullopt;
}

std::optional<std::uint32_t> RelationGraph::edge_of_var(Var v) const {
  auto it = by_var_.find(v);
  if (it == by_var_.end()) return std::nullopt;
  return it->second;
}

//===----------------------------------------------------------------------===//
// Assignment
//===----------------------------------------------------------------------===//

void Assignment::set(Var v, bool value) {
  if (v == 0) throw Error(ErrorCode::InvalidVariable, "variable ids must be positive");
  if (v >= values_.size()) values_.resize(v + 1, -1);
  if (values_[v] < 0) ++count_;
  values_[v] = value ? 1 : 0;
}

void Assignment::unset(Var v) {
  if (v < values_.size() && values_[v] >= 0) {
    values_[v] = -1;
    --count_;
  }
}

std::optional<bool> Assignment::lookup(Var v) const {
  if (v >= values_.size() || values_[v] < 0) return std::nullopt;
  return values_[v] == 1;
}

bool Assignment::at(Var v) const {
  auto value = lookup(v);
  if (!value) throw Error(ErrorCode::UnsetVariable, "variable " + std::to_string(v) + " has no value");
  return *value;
}

std::vector<Var> Assignment::vars() const {
  std::vector<Var> out;
  out.reserve(count_);
  for (Var v = 1; v < values_.size(); ++v)
    if (values_[v] >= 0) out.push_back(v);
  return out;
}

bool operator==(const Assignment& a, const Assignment& b) {
  if (a.count_ != b.count_) return false;
  const std::size_t n = std::max(a.values_.size(), b.values_.size());
  for (Var v = 1; v < n; ++v)
    if (a.lookup(v) != b.lookup(v)) return false;
  return true;
}

//===----------------------------------------------------------------------===//
// Violation oracle
//===----------------------------------------------------------------------===//

namespace {

// Shortest path from `from` to `to` over edges accepted by `usable`; ties go
// to the smallest neighbor because adjacency lists are sorted.
template <typename Usable>
std::vector<Vertex> shortest_path(const RelationGraph& g, Vertex from, Vertex to, Usable usable) {
  std::vector<Vertex> parent(g.num_vertices() + 1, 0);
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (const Incidence& inc : g.neighbors(v)) {
      if (parent[inc.neighbor] != 0 || !usable(inc.edge)) continue;
      parent[inc.neighbor] = v;
      queue.push_back(inc.neighbor);
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

// label[k]: -1 edge absent, 0 or 1 its value.
std::optional<ViolationWitness> find_violation_labeled(const RelationGraph& g,
                                                       const std::vector<std::int8_t>& label) {
  detail::UnionFind components(g.num_vertices() + 1);
  for (std::uint32_t k = 0; k < g.num_edges(); ++k)
    if (label[k] == 1) components.unite(g.edges()[k].i, g.edges()[k].j);

  for (std::uint32_t k : g.canonical_order()) {
    if (label[k] != 0) continue;
    const Edge& e = g.edges()[k];
    if (!components.same(e.i, e.j)) continue;
    ViolationWitness w;
    w.cycle = shortest_path(g, e.i, e.j, [&](std::uint32_t edge) { return label[edge] == 1; });
    w.zero_edge = e;
    return w;
  }
  return std::nullopt;
}

std::vector<std::int8_t> label_edges(const RelationGraph& g, const Assignment& chi, bool require_total) {
  std::vector<std::int8_t> label(g.num_edges(), -1);
  for (std::uint32_t k = 0; k < g.num_edges(); ++k) {
    auto value = chi.lookup(g.edges()[k].var);
    if (!value) {
      if (require_total)
        throw Error(ErrorCode::PartialAssignment,
                    "edge variable " + std::to_string(g.edges()[k].var) + " is unset");
      continue;
    }
    label[k] = *value ? 1 : 0;
  }
  return label;
}

}  // namespace

std::optional<ViolationWitness> find_violation(const RelationGraph& g, const Assignment& chi) {
  return find_violation_labeled(g, label_edges(g, chi, true));
}

std::optional<ViolationWitness> find_partial_violation(const RelationGraph& g, const Assignment& chi) {
  return find_violation_labeled(g, label_edges(g, chi, false));
}

bool witness_is_valid(const RelationGraph& g, const Assignment& chi, const ViolationWitness& w) {
  const auto& c = w.cycle;
  if (c.size() < 3) return false;
  std::vector<Vertex> sorted(c);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  int zeros = 0;
  bool zero_edge_on_cycle = false;
  for (std::size_t t = 0; t < c.size(); ++t) {
    Vertex a = c[t];
    Vertex b = c[(t + 1) % c.size()];
    auto var = g.var_of(a, b);
    if (!var) return false;
    auto value = chi.lookup(*var);
    if (!value) return false;
    if (!*value) {
      ++zeros;
      zero_edge_on_cycle = *var == w.zero_edge.var;
    }
  }
  return zeros == 1 && zero_edge_on_cycle;
}

//===----------------------------------------------------------------------===//
// Assignment extension
//===----------------------------------------------------------------------===//

Assignment extend_assignment(const RelationGraph& g1, const Assignment& chi1, const RelationGraph& g2) {
  if (g1.num_vertices() > g2.num_vertices())
    throw Error(ErrorCode::NotASuperset, "second graph has fewer vertices");
  for (const Edge& e : g1.edges()) {
    if (g2.var_of(e.i, e.j) != e.var)
      throw Error(ErrorCode::NotASuperset, "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                               ") missing or rebound in the second graph");
  }
  if (find_violation(g1, chi1))
    throw Error(ErrorCode::InputViolatesTransitivity, "assignment violates transitivity on the first graph");

  detail::UnionFind components(g2.num_vertices() + 1);
  for (const Edge& e : g1.edges())
    if (chi1.at(e.var)) components.unite(e.i, e.j);

  Assignment out = chi1;
  for (std::uint32_t k : g2.canonical_order()) {
    const Edge& e = g2.edges()[k];
    if (g1.has_edge(e.i, e.j)) continue;
    const bool connected = components.same(e.i, e.j);
    out.set(e.var, connected);
    if (connected) components.unite(e.i, e.j);  // no-op: already one component
  }
  out.mark_total(true);
  return out;
}

}  // namespace transat
