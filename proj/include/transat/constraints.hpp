#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transat/cycles.hpp"
#include "transat/eqgraph.hpp"

namespace transat {

using Lit = std::int32_t;  // DIMACS literal: +v or -v
using Clause = std::vector<Lit>;

/// CNF formula over variables 1..num_vars.
struct ClauseSet {
  Var num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
};

enum class Method { Direct, Dense, Sparse };

std::string to_string(Method m);
Method parse_method(const std::string& name);

struct FillVar {
  Var var;
  Vertex i;
  Vertex j;

  friend bool operator==(const FillVar&, const FillVar&) = default;
};

struct GenerationReport {
  Method method = Method::Direct;
  std::size_t edges = 0;
  std::size_t cycles = 0;
  std::size_t clauses = 0;
  std::vector<FillVar> fill_vars;
};

struct Generated {
  ClauseSet cnf;
  GenerationReport report;
  RelationGraph graph;  // the graph whose cycles were encoded
};

/// The k transitivity clauses of a length-k cycle. With e_t the edge from
/// the t-th vertex to its successor, clause t negates the k-1 edges starting
/// at e_t and asserts the edge before it. Throws EdgeMissing.
std::vector<Clause> clauses_for_cycle(const Cycle& c, const RelationGraph& g);

/// Transitivity constraints for g by the chosen method. Dense and sparse
/// bind new pairs to fresh_var_base, fresh_var_base + 1, ... Throws
/// VarBaseTooLow (dense/sparse) or LimitError (direct).
Generated generate(const RelationGraph& g, Method method, Var fresh_var_base, const CycleLimits& limits = {});

/// Every clause satisfied by chi (unset literals count as false).
bool satisfies(const ClauseSet& f, const Assignment& chi);

}  // namespace transat
