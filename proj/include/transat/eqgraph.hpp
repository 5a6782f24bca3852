#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "transat/error.hpp"

namespace transat {

using Vertex = std::uint32_t;  // 1-based
using Var = std::uint32_t;     // positive propositional variable id

/// An undirected relation edge (i, j) bound to the variable e_{i,j}.
/// Stored canonically with i < j.
struct Edge {
  Vertex i = 0;
  Vertex j = 0;
  Var var = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Neighbor entry of the adjacency index.
struct Incidence {
  Vertex neighbor;
  std::uint32_t edge;  // index into RelationGraph::edges()
};

/// The graph G(E) over domain elements 1..n. Immutable after construction.
class RelationGraph {
 public:
  RelationGraph() = default;

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Edges in insertion order, each canonical (i < j).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Incident edges of v sorted by neighbor id.
  std::span<const Incidence> neighbors(Vertex v) const;

  std::optional<std::uint32_t> edge_index(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
  std::optional<Var> var_of(Vertex a, Vertex b) const;
  std::optional<std::uint32_t> edge_of_var(Var v) const;

  /// Largest variable id on any edge, 0 for an edgeless graph.
  Var max_var() const noexcept { return max_var_; }

  /// Edge indices sorted by canonical (i, j).
  const std::vector<std::uint32_t>& canonical_order() const noexcept { return canonical_; }

 private:
  friend RelationGraph build_graph(std::size_t n, std::span<const Edge> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adj_offsets_;  // CSR, size n + 2
  std::vector<Incidence> adj_;
  std::vector<std::uint32_t> canonical_;
  std::unordered_map<Var, std::uint32_t> by_var_;
  Var max_var_ = 0;
};

/// Canonicalizes (i, j) to i < j and validates. Throws DuplicateEdge,
/// DuplicateVariable, VertexOutOfRange (also for self-loops) or InvalidVariable.
RelationGraph build_graph(std::size_t n, std::span<const Edge> edges);

/// Variable assignment. A total assignment promises a value for every
/// variable the caller cares about; reading an unset key of a total
/// assignment is an error, while a partial one simply reports "unset".
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(bool total) : total_(total) {}

  void set(Var v, bool value);
  void unset(Var v);
  std::optional<bool> lookup(Var v) const;
  bool contains(Var v) const { return lookup(v).has_value(); }

  /// Value of v. Throws UnsetVariable when v has no value.
  bool at(Var v) const;

  bool is_total() const noexcept { return total_; }
  void mark_total(bool total) noexcept { total_ = total; }

  /// Assigned variables in increasing order.
  std::vector<Var> vars() const;
  std::size_t size() const noexcept { return count_; }
  Var max_var() const noexcept { return values_.empty() ? 0 : static_cast<Var>(values_.size() - 1); }

  friend bool operator==(const Assignment& a, const Assignment& b);

 private:
  std::vector<std::int8_t> values_;  // -1 unset, 0, 1; indexed by var
  std::size_t count_ = 0;
  bool total_ = true;
};

/// A cycle of G(E, chi) carrying exactly one 0-edge.
struct ViolationWitness {
  std::vector<Vertex> cycle;  // [i_1 .. i_k], closed implicitly by (i_k, i_1)
  Edge zero_edge;
};

/// Returns a witness iff some cycle of G(E, chi) has exactly one 0-edge.
/// Equivalently: some 0-edge joins two vertices already connected by 1-edges.
/// The witness is the first such 0-edge in canonical order, closed by a
/// shortest 1-path (BFS, smallest-neighbor-first). Throws PartialAssignment
/// if an edge variable is unset.
std::optional<ViolationWitness> find_violation(const RelationGraph& g, const Assignment& chi);

/// Same check restricted to the edges whose variables chi assigns; unset
/// edges are treated as absent. Used for cube filtering.
std::optional<ViolationWitness> find_partial_violation(const RelationGraph& g, const Assignment& chi);

/// True iff the witness names real edges of g and exactly one cycle edge is 0.
bool witness_is_valid(const RelationGraph& g, const Assignment& chi, const ViolationWitness& w);

/// Extends chi1 (transitivity-consistent over g1) to g2 ⊇ g1: every fresh
/// e_{i,j} becomes 1 iff i and j are joined by a path of 1-edges. Fresh edges
/// are handled one at a time in canonical order. Throws NotASuperset or
/// InputViolatesTransitivity.
Assignment extend_assignment(const RelationGraph& g1, const Assignment& chi1, const RelationGraph& g2);

}  // namespace transat
