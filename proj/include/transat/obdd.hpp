#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "transat/cnfio.hpp"
#include "transat/constraints.hpp"
#include "transat/solver.hpp"

namespace transat {

using BigCount = boost::multiprecision::cpp_int;

/// Handle to a node of one BddStore. Equal functions have equal handles.
struct BddRef {
  std::uint32_t store = 0;
  std::uint32_t node = 0;

  friend bool operator==(const BddRef&, const BddRef&) = default;
};

enum class BddOp : std::uint8_t { And, Or };

/// Reduced ordered BDD node table with a unique table and a memo cache for
/// apply/negate. Variables are ordered by their position in `order`; more
/// variables can be appended below the existing ones at any time.
class BddStore {
 public:
  static constexpr std::size_t kDefaultNodeLimit = 20'000'000;

  explicit BddStore(std::vector<Var> order = {}, std::size_t node_limit = kDefaultNodeLimit);

  void append_var(Var v);
  bool has_var(Var v) const;
  const std::vector<Var>& order() const noexcept { return order_; }
  std::size_t level_of(Var v) const;

  BddRef zero() const noexcept { return {id_, 0}; }
  BddRef one() const noexcept { return {id_, 1}; }
  BddRef var(Var v);
  BddRef literal(Lit lit);

  BddRef apply(BddOp op, BddRef a, BddRef b);
  BddRef negate(BddRef a);

  bool is_terminal(BddRef a) const;
  Var top_var(BddRef a) const;
  BddRef low(BddRef a) const;
  BddRef high(BddRef a) const;

  bool evaluate(BddRef a, const Assignment& chi) const;

  /// Nodes in the table, terminals included.
  std::size_t table_size() const noexcept { return nodes_.size(); }
  std::size_t node_limit() const noexcept { return node_limit_; }
  void clear_cache() { cache_.clear(); }

 private:
  struct Node {
    std::uint32_t level;
    std::uint32_t lo;
    std::uint32_t hi;
  };
  struct Key {
    std::uint32_t a, b, c;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  static constexpr std::uint32_t kTerminalLevel = 0xffffffffu;

  void check(BddRef a) const;
  std::uint32_t make(std::uint32_t level, std::uint32_t lo, std::uint32_t hi);
  std::uint32_t apply_rec(BddOp op, std::uint32_t a, std::uint32_t b);
  std::uint32_t negate_rec(std::uint32_t a);
  BddRef wrap(std::uint32_t node) const noexcept { return {id_, node}; }

  std::uint32_t id_;
  std::size_t node_limit_;
  std::vector<Var> order_;
  std::unordered_map<Var, std::uint32_t> level_;
  std::vector<Node> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> unique_;
  std::unordered_map<Key, std::uint32_t, KeyHash> cache_;
};

/// Conjunction of the clauses, each built as a disjunction of literals.
/// Variables missing from the store's order are appended first.
BddRef build_cnf_bdd(BddStore& store, const ClauseSet& f);

/// Variables labeling some node reachable from a, ascending by id.
std::vector<Var> support(const BddStore& store, BddRef a);

/// Reachable nodes, terminals included.
std::size_t node_count(const BddStore& store, BddRef a);

/// Models of a over `universe`, which must contain the support.
BigCount sat_count(const BddStore& store, BddRef a, std::span<const Var> universe);

/// The path found by preferring the low branch; nullopt for terminal 0.
std::optional<Assignment> any_sat(const BddStore& store, BddRef a);

/// Depth-first, low child first. The callback gets each cube as literals in
/// order of the store's levels and returns false to stop.
void for_each_cube(const BddStore& store, BddRef a, const std::function<bool(const std::vector<Lit>&)>& visit);

//===----------------------------------------------------------------------===//
// Transitivity flows
//===----------------------------------------------------------------------===//

struct ReducedReport {
  std::size_t vertices = 0;     // domain elements touched by the supported relational variables
  std::size_t hat_edges = 0;    // relational variables in the support of F_sat
  std::size_t edges = 0;        // after augmentation
  std::size_t cycles = 0;
  std::size_t clauses = 0;
  std::size_t constraint_nodes = 0;  // nodes created while building the constraint BDD
  std::size_t trans_bdd_size = 0;    // node_count of the constraint BDD
};

struct ReducedResult {
  SolveResult result;
  ReducedReport report;
};

/// Restricts transitivity to the relational variables F_sat depends on,
/// augments them per `method`, conjoins the constraint BDD and extracts a
/// model. Unmentioned relational variables are filled in by the
/// 1-path rule so the whole model is transitive.
ReducedResult reduced_transitivity_check(BddStore& store, BddRef f_sat, const RelMap& rel, Method method,
                                         const CycleLimits& limits = {});

struct ImplicantResult {
  enum class Kind { Found, Exhausted, LimitExceeded };
  Kind kind = Kind::Exhausted;
  std::vector<Lit> cube;   // when Found
  std::size_t count = 0;   // cubes examined
};

/// Walks the cubes of F_sat and returns the first whose relational literals
/// do not by themselves violate transitivity. limit = 0 means unlimited.
ImplicantResult filtered_implicants(const BddStore& store, BddRef f_sat, const RelMap& rel, std::size_t limit = 0);

//===----------------------------------------------------------------------===//
// Growth probe
//===----------------------------------------------------------------------===//

enum class MeshOrdering { RowMajor, Interleaved, Reversed };

std::string to_string(MeshOrdering o);

/// Variable order of the mesh edges: RowMajor sorts edges by their
/// (smaller, larger) endpoint, Interleaved sweeps anti-diagonals of the grid,
/// Reversed is RowMajor backwards.
std::vector<Var> mesh_order(std::size_t n, MeshOrdering ordering);

struct GrowthSample {
  std::size_t n = 0;
  MeshOrdering ordering = MeshOrdering::RowMajor;
  std::size_t nodes = 0;
  double seconds = 0.0;
};

/// Node count of the direct transitivity encoding of M_n under the ordering.
GrowthSample measure_mesh_growth(std::size_t n, MeshOrdering ordering,
                                 std::size_t node_limit = BddStore::kDefaultNodeLimit);

}  // namespace transat
