#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "transat/eqgraph.hpp"

namespace transat {

/// A chord-free cycle [i_1 .. i_k], closed by (i_k, i_1). Canonical form:
/// i_1 is the smallest vertex and i_2 < i_k.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

struct CycleLimits {
  std::size_t max_cycles = 1'000'000;
  std::size_t max_paths = 10'000'000;  // extensible paths stored over all levels
};

/// Level-by-level breadth-first expansion of chord-free paths.
///
/// Level k holds P_k restricted to paths whose first vertex is their
/// smallest: acyclic, chord-free, non-terminal paths of k vertices. Each
/// step classifies every one-edge extension as cyclic, chorded, terminal or
/// extensible; terminal extensions closing in canonical direction are
/// collected as cycles, extensible ones form the next level.
///
/// Paths are stored as parent links into the previous level, so memory is
/// one (parent, vertex) pair per path.
class PathFrontier {
 public:
  PathFrontier(const RelationGraph& g, CycleLimits limits);

  /// Number of vertices on each path of the current level.
  std::size_t k() const noexcept { return levels_.size(); }
  std::size_t size() const noexcept { return levels_.empty() ? 0 : levels_.back().size(); }
  bool done() const noexcept { return size() == 0; }

  /// Materialized paths of the current level (for inspection and tests).
  std::vector<std::vector<Vertex>> paths() const;

  /// Advances to level k + 1, appending closed cycles to `out`.
  /// Throws LimitError(LimitExceeded) when a cap is hit.
  void step(std::vector<Cycle>& out);

  std::size_t stored_paths() const noexcept { return stored_; }

 private:
  struct Node {
    std::uint32_t parent;
    Vertex vertex;
  };

  void materialize(std::size_t level, std::uint32_t index, std::vector<Vertex>& buf) const;

  const RelationGraph* g_;
  CycleLimits limits_;
  std::vector<std::vector<Node>> levels_;
  std::size_t stored_ = 0;
  std::size_t emitted_ = 0;
};

/// All chord-free cycles of g, one canonical representative each, in order
/// of discovery (by length, then by path expansion order).
std::vector<Cycle> enumerate_chord_free_cycles(const RelationGraph& g, const CycleLimits& limits = {});

struct CycleStats {
  std::size_t count = 0;
  std::size_t total_length = 0;  // equals the direct-method clause count
  std::size_t max_length = 0;

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

CycleStats cycle_stats(std::span<const Cycle> cycles);

}  // namespace transat
