#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "transat/cnfio.hpp"
#include "transat/constraints.hpp"
#include "transat/eqgraph.hpp"

namespace transat {

enum class Status { Sat, Unsat };

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t refinement_rounds = 0;
  std::uint64_t added_clauses = 0;

  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

struct SolveResult {
  Status status = Status::Unsat;
  Assignment model;            // over the user's variables; empty when UNSAT
  Assignment auxiliary_model;  // fill variables introduced by dense/sparse
  SolveStats stats;
  GenerationReport generation;  // eager flows only
};

struct SolverOptions {
  std::uint64_t conflict_limit = 0;  // 0 = unlimited
  std::uint64_t seed = 0;            // 0 = plain index order on ties
  CycleLimits cycle_limits{};
};

/// CDCL search: two-watched-literal propagation, first-UIP learning, VSIDS
/// decisions with false-first phase, Luby restarts. Clauses may be added
/// between calls to solve().
class Solver {
 public:
  explicit Solver(const SolverOptions& options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  void reserve_vars(Var n);
  void add_clause(std::span<const Lit> clause);
  void add_clauses(const ClauseSet& f);

  /// Throws LimitError(ResourceLimit) when the conflict budget runs out.
  Status solve();

  /// Value of v in the last SAT model.
  bool model_value(Var v) const;
  Var num_vars() const;
  const SolveStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Plain satisfiability. The SAT model covers variables 1..f.num_vars.
SolveResult solve(const ClauseSet& f, const SolverOptions& options = {});

/// Solves f_sat together with the full transitivity encoding of rel's graph.
/// The model covers f_sat's and rel's variables; fill variables are returned
/// in auxiliary_model.
SolveResult solve_eager(const ClauseSet& f_sat, const RelMap& rel, Method method,
                        const SolverOptions& options = {});

/// Counterexample-guided refinement: solve, look for a transitivity
/// violation in the model, add the one clause of its witness cycle that the
/// model falsifies, repeat. Throws LimitError(RoundLimitExceeded) after
/// round_limit refinements.
SolveResult solve_lazy(const ClauseSet& f_sat, const RelMap& rel, std::uint64_t round_limit = 100000,
                       const SolverOptions& options = {});

/// The clause "all 1-edges of the witness imply its 0-edge".
Clause witness_clause(const RelationGraph& g, const ViolationWitness& w);

}  // namespace transat
