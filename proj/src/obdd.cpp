#include "transat/obdd.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "transat/generators.hpp"

namespace transat {

namespace {
std::atomic<std::uint32_t> next_store_id{1};
}

std::size_t BddStore::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = k.a;
  h = h * 0x9e3779b97f4a7c15ull ^ k.b;
  h = h * 0x9e3779b97f4a7c15ull ^ k.c;
  h ^= h >> 31;
  return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ull);
}

BddStore::BddStore(std::vector<Var> order, std::size_t node_limit)
    : id_(next_store_id.fetch_add(1)), node_limit_(node_limit) {
  nodes_.push_back({kTerminalLevel, 0, 0});  // 0
  nodes_.push_back({kTerminalLevel, 1, 1});  // 1
  for (Var v : order) append_var(v);
}

void BddStore::append_var(Var v) {
  if (v == 0) throw Error(ErrorCode::InvalidVariable, "variable ids must be positive");
  if (!level_.emplace(v, static_cast<std::uint32_t>(order_.size())).second)
    throw Error(ErrorCode::DuplicateVariable, "variable " + std::to_string(v) + " already ordered");
  order_.push_back(v);
}

bool BddStore::has_var(Var v) const { return level_.contains(v); }

std::size_t BddStore::level_of(Var v) const {
  auto it = level_.find(v);
  if (it == level_.end()) throw Error(ErrorCode::UnknownVariable, "variable " + std::to_string(v) + " not in order");
  return it->second;
}

void BddStore::check(BddRef a) const {
  if (a.store != id_ || a.node >= nodes_.size())
    throw Error(ErrorCode::ForeignHandle, "handle does not belong to this store");
}

std::uint32_t BddStore::make(std::uint32_t level, std::uint32_t lo, std::uint32_t hi) {
  if (lo == hi) return lo;
  const Key key{level, lo, hi};
  if (auto it = unique_.find(key); it != unique_.end()) return it->second;
  if (nodes_.size() >= node_limit_) {
    cache_.clear();
    throw LimitError(ErrorCode::NodeLimitExceeded, "node limit of " + std::to_string(node_limit_) + " reached",
                     nodes_.size());
  }
  const auto idx = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({level, lo, hi});
  unique_.emplace(key, idx);
  return idx;
}

BddRef BddStore::var(Var v) { return wrap(make(static_cast<std::uint32_t>(level_of(v)), 0, 1)); }

BddRef BddStore::literal(Lit lit) {
  const auto level = static_cast<std::uint32_t>(level_of(static_cast<Var>(std::abs(lit))));
  return wrap(lit > 0 ? make(level, 0, 1) : make(level, 1, 0));
}

std::uint32_t BddStore::apply_rec(BddOp op, std::uint32_t a, std::uint32_t b) {
  if (op == BddOp::And) {
    if (a == 0 || b == 0) return 0;
    if (a == 1) return b;
    if (b == 1 || a == b) return a;
  } else {
    if (a == 1 || b == 1) return 1;
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
  }
  if (a > b) std::swap(a, b);  // both operators commute
  const Key key{static_cast<std::uint32_t>(op), a, b};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Node na = nodes_[a];
  const Node nb = nodes_[b];
  const std::uint32_t level = std::min(na.level, nb.level);
  const std::uint32_t a0 = na.level == level ? na.lo : a, a1 = na.level == level ? na.hi : a;
  const std::uint32_t b0 = nb.level == level ? nb.lo : b, b1 = nb.level == level ? nb.hi : b;
  const std::uint32_t lo = apply_rec(op, a0, b0);
  const std::uint32_t hi = apply_rec(op, a1, b1);
  const std::uint32_t r = make(level, lo, hi);
  cache_.emplace(key, r);
  return r;
}

std::uint32_t BddStore::negate_rec(std::uint32_t a) {
  if (a <= 1) return 1 - a;
  const Key key{2, a, 0};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const Node n = nodes_[a];
  const std::uint32_t lo = negate_rec(n.lo);
  const std::uint32_t hi = negate_rec(n.hi);
  const std::uint32_t r = make(n.level, lo, hi);
  cache_.emplace(key, r);
  return r;
}

BddRef BddStore::apply(BddOp op, BddRef a, BddRef b) {
  check(a);
  check(b);
  return wrap(apply_rec(op, a.node, b.node));
}

BddRef BddStore::negate(BddRef a) {
  check(a);
  return wrap(negate_rec(a.node));
}

bool BddStore::is_terminal(BddRef a) const {
  check(a);
  return a.node <= 1;
}

Var BddStore::top_var(BddRef a) const {
  check(a);
  if (a.node <= 1) throw Error(ErrorCode::InvalidArgument, "terminal has no variable");
  return order_[nodes_[a.node].level];
}

BddRef BddStore::low(BddRef a) const {
  check(a);
  if (a.node <= 1) throw Error(ErrorCode::InvalidArgument, "terminal has no children");
  return wrap(nodes_[a.node].lo);
}

BddRef BddStore::high(BddRef a) const {
  check(a);
  if (a.node <= 1) throw Error(ErrorCode::InvalidArgument, "terminal has no children");
  return wrap(nodes_[a.node].hi);
}

bool BddStore::evaluate(BddRef a, const Assignment& chi) const {
  check(a);
  std::uint32_t n = a.node;
  while (n > 1) {
    const Node& node = nodes_[n];
    n = chi.lookup(order_[node.level]).value_or(false) ? node.hi : node.lo;
  }
  return n == 1;
}

//===----------------------------------------------------------------------===//
// Queries
//===----------------------------------------------------------------------===//

namespace {

// Nodes reachable from a, each listed once, children before parents.
std::vector<BddRef> reachable(const BddStore& store, BddRef a) {
  std::vector<BddRef> out;
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::pair<BddRef, bool>> stack{{a, false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      out.push_back(n);
      continue;
    }
    if (!seen.insert(n.node).second) continue;
    stack.push_back({n, true});
    if (!store.is_terminal(n)) {
      stack.push_back({store.high(n), false});
      stack.push_back({store.low(n), false});
    }
  }
  return out;
}

}  // namespace

BddRef build_cnf_bdd(BddStore& store, const ClauseSet& f) {
  for (const Clause& clause : f.clauses)
    for (Lit lit : clause)
      if (!store.has_var(static_cast<Var>(std::abs(lit)))) store.append_var(static_cast<Var>(std::abs(lit)));

  BddRef result = store.one();
  for (const Clause& clause : f.clauses) {
    std::vector<Lit> lits(clause);
    std::sort(lits.begin(), lits.end(), [&](Lit x, Lit y) {
      const auto lx = store.level_of(static_cast<Var>(std::abs(x)));
      const auto ly = store.level_of(static_cast<Var>(std::abs(y)));
      return lx != ly ? lx > ly : x < y;
    });
    BddRef c = store.zero();
    for (Lit lit : lits) c = store.apply(BddOp::Or, store.literal(lit), c);
    result = store.apply(BddOp::And, result, c);
    if (result == store.zero()) break;
  }
  return result;
}

std::vector<Var> support(const BddStore& store, BddRef a) {
  std::vector<Var> out;
  for (BddRef n : reachable(store, a))
    if (!store.is_terminal(n)) out.push_back(store.top_var(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t node_count(const BddStore& store, BddRef a) { return reachable(store, a).size(); }

BigCount sat_count(const BddStore& store, BddRef a, std::span<const Var> universe) {
  // Position of each universe variable after sorting by store level; variables
  // outside the store sit below everything and are free.
  std::vector<Var> in_store, free_vars;
  for (Var v : universe) (store.has_var(v) ? in_store : free_vars).push_back(v);
  std::sort(in_store.begin(), in_store.end(),
            [&](Var x, Var y) { return store.level_of(x) < store.level_of(y); });
  if (std::adjacent_find(in_store.begin(), in_store.end()) != in_store.end())
    throw Error(ErrorCode::InvalidArgument, "universe lists a variable twice");
  std::map<Var, std::size_t> position;
  for (std::size_t p = 0; p < in_store.size(); ++p) position[in_store[p]] = p;
  for (Var v : support(store, a))
    if (!position.contains(v))
      throw Error(ErrorCode::InvalidArgument, "universe misses support variable " + std::to_string(v));

  const std::size_t bottom = in_store.size();
  std::unordered_map<std::uint32_t, BigCount> count;
  auto pos = [&](BddRef n) { return store.is_terminal(n) ? bottom : position.at(store.top_var(n)); };
  for (BddRef n : reachable(store, a)) {
    if (store.is_terminal(n)) {
      count[n.node] = n == store.one() ? 1 : 0;
      continue;
    }
    const std::size_t p = pos(n);
    const BddRef lo = store.low(n), hi = store.high(n);
    count[n.node] = (count[lo.node] << (pos(lo) - p - 1)) + (count[hi.node] << (pos(hi) - p - 1));
  }
  return (count[a.node] << pos(a)) << free_vars.size();
}

std::optional<Assignment> any_sat(const BddStore& store, BddRef a) {
  if (a == store.zero()) return std::nullopt;
  Assignment chi(false);
  while (!store.is_terminal(a)) {
    const bool take_low = store.low(a) != store.zero();
    chi.set(store.top_var(a), !take_low);
    a = take_low ? store.low(a) : store.high(a);
  }
  return chi;
}

void for_each_cube(const BddStore& store, BddRef a, const std::function<bool(const std::vector<Lit>&)>& visit) {
  std::vector<Lit> cube;
  bool stop = false;
  std::function<void(BddRef)> walk = [&](BddRef n) {
    if (stop || n == store.zero()) return;
    if (n == store.one()) {
      if (!visit(cube)) stop = true;
      return;
    }
    const auto v = static_cast<Lit>(store.top_var(n));
    cube.push_back(-v);
    walk(store.low(n));
    cube.back() = v;
    walk(store.high(n));
    cube.pop_back();
  };
  walk(a);
}

//===----------------------------------------------------------------------===//
// Reduced-support transitivity check
//===----------------------------------------------------------------------===//

ReducedResult reduced_transitivity_check(BddStore& store, BddRef f_sat, const RelMap& rel, Method method,
                                         const CycleLimits& limits) {
  const RelationGraph g = graph_from_rel(rel);
  ReducedResult out;
  ReducedReport& report = out.report;

  // Relational variables F_sat actually depends on, on a compacted vertex set.
  std::vector<Edge> hat;
  for (Var v : support(store, f_sat))
    if (auto k = g.edge_of_var(v)) hat.push_back(g.edges()[*k]);
  std::vector<Vertex> touched;
  for (const Edge& e : hat) {
    touched.push_back(e.i);
    touched.push_back(e.j);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  auto compact = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(touched.begin(), touched.end(), v) - touched.begin() + 1);
  };
  std::vector<Edge> hat_compact;
  for (const Edge& e : hat) hat_compact.push_back({compact(e.i), compact(e.j), e.var});
  const RelationGraph small = build_graph(touched.size(), hat_compact);

  Var base = g.max_var();
  for (Var v : store.order()) base = std::max(base, v);
  Generated gen = generate(small, method, base + 1, limits);

  // Fill pairs that already own a relational variable reuse it.
  std::unordered_map<Var, Var> rename;
  std::vector<Edge> augmented(hat);
  for (const FillVar& f : gen.report.fill_vars) {
    const Vertex i = touched[f.i - 1], j = touched[f.j - 1];
    Var var = f.var;
    if (auto existing = g.var_of(i, j)) {
      rename[f.var] = *existing;
      var = *existing;
    } else {
      out.result.generation.fill_vars.push_back({f.var, i, j});
    }
    augmented.push_back({i, j, var});
  }
  ClauseSet trans = gen.cnf;
  for (Clause& clause : trans.clauses)
    for (Lit& lit : clause)
      if (auto it = rename.find(static_cast<Var>(std::abs(lit))); it != rename.end())
        lit = lit > 0 ? static_cast<Lit>(it->second) : -static_cast<Lit>(it->second);

  report.vertices = touched.size();
  report.hat_edges = hat.size();
  report.edges = gen.report.edges;
  report.cycles = gen.report.cycles;
  report.clauses = gen.report.clauses;
  out.result.generation.method = method;
  out.result.generation.edges = report.edges;
  out.result.generation.cycles = report.cycles;
  out.result.generation.clauses = report.clauses;

  const std::size_t before = store.table_size();
  const BddRef f_trans = build_cnf_bdd(store, trans);
  report.constraint_nodes = store.table_size() - before;
  report.trans_bdd_size = node_count(store, f_trans);

  const BddRef conj = store.apply(BddOp::And, f_sat, f_trans);
  if (conj == store.zero()) {
    out.result.status = Status::Unsat;
    return out;
  }

  const Assignment path = *any_sat(store, conj);
  Assignment full;
  for (Var v : store.order()) full.set(v, path.lookup(v).value_or(false));

  const RelationGraph aug_graph = build_graph(g.num_vertices(), augmented);
  std::vector<Edge> everything(augmented);
  for (const Edge& e : g.edges())
    if (!aug_graph.has_edge(e.i, e.j)) everything.push_back(e);
  const RelationGraph union_graph = build_graph(g.num_vertices(), everything);

  Assignment chi1(false);
  for (const Edge& e : augmented) chi1.set(e.var, full.at(e.var));
  const Assignment extended = extend_assignment(aug_graph, chi1, union_graph);

  std::unordered_set<Var> fresh;
  for (const FillVar& f : out.result.generation.fill_vars) fresh.insert(f.var);
  Assignment model;
  for (Var v : store.order())
    if (!fresh.contains(v)) model.set(v, full.at(v));
  for (const Edge& e : g.edges()) model.set(e.var, extended.at(e.var));
  for (Var v : fresh) out.result.auxiliary_model.set(v, full.at(v));

  if (!store.evaluate(f_sat, model)) throw std::logic_error("reduced check produced a model falsifying F_sat");
  if (find_violation(g, model)) throw std::logic_error("reduced check produced a non-transitive model");
  out.result.status = Status::Sat;
  out.result.model = std::move(model);
  return out;
}

ImplicantResult filtered_implicants(const BddStore& store, BddRef f_sat, const RelMap& rel, std::size_t limit) {
  const RelationGraph g = graph_from_rel(rel);
  ImplicantResult out;
  for_each_cube(store, f_sat, [&](const std::vector<Lit>& cube) {
    if (limit != 0 && out.count >= limit) {
      out.kind = ImplicantResult::Kind::LimitExceeded;
      return false;
    }
    ++out.count;
    Assignment labels(false);
    for (Lit lit : cube)
      if (g.edge_of_var(static_cast<Var>(std::abs(lit)))) labels.set(static_cast<Var>(std::abs(lit)), lit > 0);
    if (find_partial_violation(g, labels)) return true;
    out.kind = ImplicantResult::Kind::Found;
    out.cube = cube;
    return false;
  });
  return out;
}

//===----------------------------------------------------------------------===//
// Growth probe
//===----------------------------------------------------------------------===//

std::string to_string(MeshOrdering o) {
  switch (o) {
    case MeshOrdering::RowMajor: return "row-major";
    case MeshOrdering::Interleaved: return "interleaved";
    case MeshOrdering::Reversed: return "reversed";
  }
  return "?";
}

std::vector<Var> mesh_order(std::size_t n, MeshOrdering ordering) {
  const RelationGraph mesh = gen_mesh(n);
  std::vector<Edge> edges = mesh.edges();
  auto row_major = [](const Edge& a, const Edge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; };
  if (ordering == MeshOrdering::Interleaved) {
    auto diagonal = [n](const Edge& e) { return (e.i - 1) / n + (e.i - 1) % n + (e.j - 1) / n + (e.j - 1) % n; };
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
      const auto da = diagonal(a), db = diagonal(b);
      return da != db ? da < db : row_major(a, b);
    });
  } else {
    std::sort(edges.begin(), edges.end(), row_major);
    if (ordering == MeshOrdering::Reversed) std::reverse(edges.begin(), edges.end());
  }
  std::vector<Var> order;
  for (const Edge& e : edges) order.push_back(e.var);
  return order;
}

GrowthSample measure_mesh_growth(std::size_t n, MeshOrdering ordering, std::size_t node_limit) {
  const auto start = std::chrono::steady_clock::now();
  const Generated gen = generate(gen_mesh(n), Method::Direct, 0);
  BddStore store(mesh_order(n, ordering), node_limit);
  const BddRef f_trans = build_cnf_bdd(store, gen.cnf);
  GrowthSample s;
  s.n = n;
  s.ordering = ordering;
  s.nodes = node_count(store, f_trans);
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace transat
