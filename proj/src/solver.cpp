#include "transat/solver.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace transat {

//===----------------------------------------------------------------------===//
// CDCL core
//===----------------------------------------------------------------------===//

namespace {

// Internal literal: 2 * (var - 1) + negated.
inline int encode(Lit lit) { return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0); }
inline int var_of(int x) { return x >> 1; }
inline int negate(int x) { return x ^ 1; }

constexpr int kNoReason = -1;
constexpr double kVarDecay = 0.95;
constexpr std::uint64_t kRestartBase = 100;

// luby(i) for i >= 0: 1 1 2 1 1 2 4 ...
std::uint64_t luby(std::uint64_t i) {
  std::uint64_t size = 1, seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  std::uint64_t x = i;
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::uint64_t{1} << seq;
}

}  // namespace

struct Solver::Impl {
  SolverOptions options;
  SolveStats stats;
  bool ok = true;

  std::vector<std::vector<int>> clauses;
  std::vector<std::vector<int>> watches;  // per literal: clauses watching it

  std::vector<std::int8_t> value;  // per var: -1 undef, 0, 1
  std::vector<int> level;
  std::vector<int> reason;
  std::vector<int> trail;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead = 0;

  std::vector<double> activity;
  double var_inc = 1.0;
  std::vector<int> heap;       // binary max-heap of vars
  std::vector<int> heap_pos;   // -1 when absent
  std::vector<char> seen;
  std::vector<std::int8_t> model;

  explicit Impl(const SolverOptions& opts) : options(opts) {}

  int num_vars() const { return static_cast<int>(value.size()); }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  // 1 true, 0 false, -1 undef
  int lit_value(int x) const {
    const int v = value[var_of(x)];
    return v < 0 ? -1 : (v ^ (x & 1));
  }

  //--- heap ---------------------------------------------------------------//

  bool before(int a, int b) const {
    return activity[a] != activity[b] ? activity[a] > activity[b] : a < b;
  }
  void heap_swap(std::size_t i, std::size_t j) {
    std::swap(heap[i], heap[j]);
    heap_pos[heap[i]] = static_cast<int>(i);
    heap_pos[heap[j]] = static_cast<int>(j);
  }
  void sift_up(std::size_t i) {
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!before(heap[i], heap[parent])) break;
      heap_swap(i, parent);
      i = parent;
    }
  }
  void sift_down(std::size_t i) {
    for (;;) {
      std::size_t best = i, l = 2 * i + 1, r = l + 1;
      if (l < heap.size() && before(heap[l], heap[best])) best = l;
      if (r < heap.size() && before(heap[r], heap[best])) best = r;
      if (best == i) return;
      heap_swap(i, best);
      i = best;
    }
  }
  void heap_insert(int v) {
    if (heap_pos[v] >= 0) return;
    heap_pos[v] = static_cast<int>(heap.size());
    heap.push_back(v);
    sift_up(heap.size() - 1);
  }
  int heap_pop() {
    int top = heap.front();
    heap_swap(0, heap.size() - 1);
    heap.pop_back();
    heap_pos[top] = -1;
    if (!heap.empty()) sift_down(0);
    return top;
  }

  void bump(int v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (double& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    if (heap_pos[v] >= 0) sift_up(static_cast<std::size_t>(heap_pos[v]));
  }

  //--- variables and trail ------------------------------------------------//

  void ensure_vars(int n) {
    if (n <= num_vars()) return;
    const int old = num_vars();
    value.resize(n, -1);
    level.resize(n, 0);
    reason.resize(n, kNoReason);
    activity.resize(n, 0.0);
    heap_pos.resize(n, -1);
    seen.resize(n, 0);
    watches.resize(2 * static_cast<std::size_t>(n));
    if (options.seed != 0) {
      std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(old));
      for (int v = old; v < n; ++v) activity[v] = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 1e-5;
    }
    for (int v = old; v < n; ++v) heap_insert(v);
  }

  void enqueue(int x, int from) {
    const int v = var_of(x);
    value[v] = static_cast<std::int8_t>((x & 1) ? 0 : 1);
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back(x);
  }

  void backtrack(int target) {
    if (decision_level() <= target) return;
    for (std::size_t i = trail.size(); i-- > trail_lim[target];) {
      const int v = var_of(trail[i]);
      value[v] = -1;
      reason[v] = kNoReason;
      heap_insert(v);
    }
    trail.resize(trail_lim[target]);
    trail_lim.resize(target);
    qhead = trail.size();
  }

  int propagate() {
    while (qhead < trail.size()) {
      const int false_lit = negate(trail[qhead++]);
      ++stats.propagations;
      auto& ws = watches[false_lit];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        const int c = ws[i++];
        auto& lits = clauses[c];
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        if (lit_value(lits[0]) == 1) {
          ws[j++] = c;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (lit_value(lits[k]) != 0) {
            std::swap(lits[1], lits[k]);
            watches[lits[1]].push_back(c);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = c;
        if (lit_value(lits[0]) == 0) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead = trail.size();
          return c;
        }
        enqueue(lits[0], c);
      }
      ws.resize(j);
    }
    return kNoReason;
  }

  // First-UIP learning. Returns the learnt clause (asserting literal first)
  // and the backjump level.
  std::pair<std::vector<int>, int> analyze(int conflict) {
    std::vector<int> learnt{0};
    int pending = 0;
    int p = -1;
    std::size_t index = trail.size();
    do {
      const auto& lits = clauses[conflict];
      for (std::size_t k = (p < 0 ? 0 : 1); k < lits.size(); ++k) {
        const int v = var_of(lits[k]);
        if (seen[v] || level[v] == 0) continue;
        seen[v] = 1;
        bump(v);
        if (level[v] >= decision_level()) ++pending;
        else learnt.push_back(lits[k]);
      }
      while (!seen[var_of(trail[--index])]) {
      }
      p = trail[index];
      conflict = reason[var_of(p)];
      seen[var_of(p)] = 0;
      --pending;
    } while (pending > 0);
    learnt[0] = negate(p);

    int back = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level[var_of(learnt[k])] > level[var_of(learnt[max_i])]) max_i = k;
      std::swap(learnt[1], learnt[max_i]);
      back = level[var_of(learnt[1])];
    }
    for (int x : learnt) seen[var_of(x)] = 0;
    return {std::move(learnt), back};
  }

  int attach(std::vector<int> lits) {
    const int idx = static_cast<int>(clauses.size());
    watches[lits[0]].push_back(idx);
    watches[lits[1]].push_back(idx);
    clauses.push_back(std::move(lits));
    return idx;
  }

  void add_clause(std::span<const Lit> clause) {
    if (!ok) return;
    backtrack(0);
    std::vector<int> lits;
    lits.reserve(clause.size());
    int max_var = 0;
    for (Lit lit : clause) {
      if (lit == 0) throw Error(ErrorCode::InvalidArgument, "literal 0 inside a clause");
      max_var = std::max(max_var, std::abs(lit));
      lits.push_back(encode(lit));
    }
    ensure_vars(max_var);
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (std::size_t k = 0; k < lits.size(); ++k) {
      if (k + 1 < lits.size() && lits[k + 1] == negate(lits[k])) return;  // tautology
      const int val = lit_value(lits[k]);
      if (val == 1) return;
      if (val == 0) continue;  // false at level 0
      kept.push_back(lits[k]);
    }
    if (kept.empty()) {
      ok = false;
    } else if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      if (propagate() != kNoReason) ok = false;
    } else {
      attach(std::move(kept));
    }
  }

  Status solve() {
    if (!ok) return Status::Unsat;
    backtrack(0);
    if (propagate() != kNoReason) {
      ok = false;
      return Status::Unsat;
    }
    std::uint64_t conflicts_here = 0;
    std::uint64_t restart_index = 0;
    std::uint64_t since_restart = 0;

    for (;;) {
      const int conflict = propagate();
      if (conflict != kNoReason) {
        ++stats.conflicts;
        ++conflicts_here;
        ++since_restart;
        if (decision_level() == 0) {
          ok = false;
          return Status::Unsat;
        }
        if (options.conflict_limit != 0 && conflicts_here > options.conflict_limit) {
          backtrack(0);
          throw LimitError(ErrorCode::ResourceLimit,
                           "conflict budget of " + std::to_string(options.conflict_limit) + " exhausted",
                           static_cast<std::size_t>(conflicts_here));
        }
        auto [learnt, back] = analyze(conflict);
        backtrack(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const int first = learnt[0];
          const int idx = attach(std::move(learnt));
          enqueue(first, idx);
        }
        var_inc /= kVarDecay;
        if (since_restart >= kRestartBase * luby(restart_index)) {
          ++restart_index;
          since_restart = 0;
          ++stats.restarts;
          backtrack(0);
        }
        continue;
      }

      int next = -1;
      while (!heap.empty()) {
        const int v = heap_pop();
        if (value[v] < 0) {
          next = v;
          break;
        }
      }
      if (next < 0) {
        model.assign(value.begin(), value.end());
        return Status::Sat;
      }
      ++stats.decisions;
      trail_lim.push_back(trail.size());
      enqueue(2 * next + 1, kNoReason);  // false first
    }
  }
};

Solver::Solver(const SolverOptions& options) : impl_(std::make_unique<Impl>(options)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

void Solver::reserve_vars(Var n) { impl_->ensure_vars(static_cast<int>(n)); }
void Solver::add_clause(std::span<const Lit> clause) { impl_->add_clause(clause); }
void Solver::add_clauses(const ClauseSet& f) {
  reserve_vars(f.num_vars);
  for (const Clause& c : f.clauses) impl_->add_clause(c);
}
Status Solver::solve() { return impl_->solve(); }
bool Solver::model_value(Var v) const {
  if (v == 0 || v > impl_->model.size()) return false;  // unconstrained: false-first
  return impl_->model[v - 1] == 1;
}
Var Solver::num_vars() const { return static_cast<Var>(impl_->num_vars()); }
const SolveStats& Solver::stats() const { return impl_->stats; }

//===----------------------------------------------------------------------===//
// Flows
//===----------------------------------------------------------------------===//

namespace {

Assignment extract_model(const Solver& s, Var first, Var last) {
  Assignment chi;
  for (Var v = first; v <= last; ++v) chi.set(v, s.model_value(v));
  return chi;
}

void check_model(const ClauseSet& f, const Assignment& model) {
  if (!satisfies(f, model)) throw std::logic_error("solver produced a model that falsifies an input clause");
}

void check_transitive(const RelationGraph& g, const Assignment& model) {
  if (find_violation(g, model)) throw std::logic_error("solver produced a model that violates transitivity");
}

Var user_var_count(const ClauseSet& f_sat, const RelationGraph& g) { return std::max(f_sat.num_vars, g.max_var()); }

}  // namespace

SolveResult solve(const ClauseSet& f, const SolverOptions& options) {
  Solver s(options);
  s.add_clauses(f);
  SolveResult r;
  r.status = s.solve();
  if (r.status == Status::Sat) {
    r.model = extract_model(s, 1, f.num_vars);
    check_model(f, r.model);
  }
  r.stats = s.stats();
  return r;
}

SolveResult solve_eager(const ClauseSet& f_sat, const RelMap& rel, Method method, const SolverOptions& options) {
  const RelationGraph g = graph_from_rel(rel);
  const Var user_vars = user_var_count(f_sat, g);
  Generated gen = generate(g, method, user_vars + 1, options.cycle_limits);

  ClauseSet combined = merge(f_sat, gen.cnf);
  combined.num_vars = std::max(combined.num_vars, user_vars);

  Solver s(options);
  s.add_clauses(combined);
  SolveResult r;
  r.status = s.solve();
  r.stats = s.stats();
  r.stats.added_clauses = gen.cnf.clauses.size();
  r.generation = std::move(gen.report);
  if (r.status == Status::Sat) {
    r.model = extract_model(s, 1, user_vars);
    for (const FillVar& f : r.generation.fill_vars) r.auxiliary_model.set(f.var, s.model_value(f.var));
    check_model(f_sat, r.model);
    check_transitive(g, r.model);
  }
  return r;
}

Clause witness_clause(const RelationGraph& g, const ViolationWitness& w) {
  Clause clause;
  const std::size_t k = w.cycle.size();
  for (std::size_t t = 0; t < k; ++t) {
    const Var v = *g.var_of(w.cycle[t], w.cycle[(t + 1) % k]);
    if (v != w.zero_edge.var) clause.push_back(-static_cast<Lit>(v));
  }
  clause.push_back(static_cast<Lit>(w.zero_edge.var));
  return clause;
}

SolveResult solve_lazy(const ClauseSet& f_sat, const RelMap& rel, std::uint64_t round_limit,
                       const SolverOptions& options) {
  const RelationGraph g = graph_from_rel(rel);
  const Var user_vars = user_var_count(f_sat, g);

  Solver s(options);
  s.reserve_vars(user_vars);
  s.add_clauses(f_sat);
  SolveResult r;
  for (;;) {
    r.status = s.solve();
    if (r.status == Status::Unsat) break;
    Assignment model = extract_model(s, 1, user_vars);
    auto witness = find_violation(g, model);
    if (!witness) {
      check_model(f_sat, model);
      r.model = std::move(model);
      break;
    }
    if (r.stats.refinement_rounds >= round_limit)
      throw LimitError(ErrorCode::RoundLimitExceeded,
                       "no transitive model after " + std::to_string(round_limit) + " refinement rounds",
                       static_cast<std::size_t>(r.stats.refinement_rounds));
    s.add_clause(witness_clause(g, *witness));
    ++r.stats.refinement_rounds;
    ++r.stats.added_clauses;
  }
  const auto rounds = r.stats.refinement_rounds;
  const auto added = r.stats.added_clauses;
  r.stats = s.stats();
  r.stats.refinement_rounds = rounds;
  r.stats.added_clauses = added;
  return r;
}

}  // namespace transat
