#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "transat/constraints.hpp"
#include "transat/eqgraph.hpp"

namespace transat {

/// Binding of relational variables to domain pairs, e_{i,j} for i < j.
struct RelMap {
  std::size_t n = 0;
  std::vector<FillVar> entries;  // (var, i, j), canonical i < j, file order

  friend bool operator==(const RelMap&, const RelMap&) = default;
};

RelMap rel_from_graph(const RelationGraph& g);
RelationGraph graph_from_rel(const RelMap& rel);

struct DimacsDocument {
  ClauseSet cnf;
  std::vector<std::string> warnings;  // e.g. ClauseCountMismatch
  RelMap embedded_rel;                // from "c rel <var> <i> <j>" lines; n = largest vertex seen
};

/// Parses `p cnf <vars> <clauses>`; clauses are 0-terminated and may span
/// lines. A clause-count mismatch is reported as a warning. Throws
/// MalformedHeader, MalformedToken, LiteralOutOfRange, UnterminatedClause.
DimacsDocument read_dimacs_document(std::string_view text);
ClauseSet read_dimacs(std::string_view text);

/// One clause per line, LF endings.
std::string write_dimacs(const ClauseSet& f);

/// `p rel <N> <M>` then M lines `<var> <i> <j>`. Throws MalformedHeader,
/// MalformedEntry, EntryCountMismatch, DuplicatePair, DuplicateVariable,
/// VertexOutOfRange.
RelMap read_rel(std::string_view text);
std::string write_rel(const RelMap& rel);

/// Lines `<var> <0|1>`; `c` comments allowed.
Assignment read_assignment(std::string_view text);
std::string write_assignment(const Assignment& chi);

/// sat's clauses followed by trans's; num_vars is the larger of the two.
ClauseSet merge(const ClauseSet& sat, const ClauseSet& trans);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace transat
