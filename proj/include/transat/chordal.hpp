#pragma once

#include <vector>

#include "transat/eqgraph.hpp"

namespace transat {

struct ChordalAugmentation {
  RelationGraph graph;               // original edges followed by fill edges
  std::vector<Edge> fill_edges;      // in creation order, vars base, base+1, ...
  std::vector<Vertex> elimination_order;
};

/// Minimum-degree elimination game. At each step the uneliminated vertex of
/// smallest current degree is removed, ties broken by fewest fill edges and
/// then by smallest index; its remaining neighbors are made pairwise
/// adjacent. Chordal inputs come back unchanged, eliminated along a perfect
/// elimination ordering. Throws VarBaseTooLow unless fresh_var_base > g.max_var().
ChordalAugmentation make_chordal(const RelationGraph& g, Var fresh_var_base);

/// True iff g has a perfect elimination ordering, tested on the reverse of
/// a maximum-cardinality-search order.
bool verify_chordal(const RelationGraph& g);

}  // namespace transat
