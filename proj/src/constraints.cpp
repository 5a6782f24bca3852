#include "transat/constraints.hpp"

#include <algorithm>

#include "transat/chordal.hpp"

namespace transat {

std::string to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Dense: return "dense";
    case Method::Sparse: return "sparse";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "direct") return Method::Direct;
  if (name == "dense") return Method::Dense;
  if (name == "sparse") return Method::Sparse;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
}

std::vector<Clause> clauses_for_cycle(const Cycle& c, const RelationGraph& g) {
  const std::size_t k = c.length();
  std::vector<Lit> edge_vars(k);
  for (std::size_t t = 0; t < k; ++t) {
    const Vertex a = c.vertices[t];
    const Vertex b = c.vertices[(t + 1) % k];
    auto var = g.var_of(a, b);
    if (!var)
      throw Error(ErrorCode::EdgeMissing, "cycle edge (" + std::to_string(a) + "," + std::to_string(b) +
                                              ") not in graph");
    edge_vars[t] = static_cast<Lit>(*var);
  }
  std::vector<Clause> out(k);
  for (std::size_t s = 0; s < k; ++s) {
    Clause& clause = out[s];
    clause.reserve(k);
    for (std::size_t t = 0; t + 1 < k; ++t) clause.push_back(-edge_vars[(s + t) % k]);
    clause.push_back(edge_vars[(s + k - 1) % k]);
  }
  return out;
}

namespace {

void check_base(const RelationGraph& g, Var base) {
  if (base <= g.max_var())
    throw Error(ErrorCode::VarBaseTooLow, "fresh base " + std::to_string(base) + " does not exceed variable " +
                                              std::to_string(g.max_var()));
}

void emit(const std::vector<Cycle>& cycles, const RelationGraph& g, Generated& out) {
  for (const Cycle& c : cycles) {
    auto cl = clauses_for_cycle(c, g);
    std::move(cl.begin(), cl.end(), std::back_inserter(out.cnf.clauses));
  }
  out.report.cycles = cycles.size();
  out.report.clauses = out.cnf.clauses.size();
}

}  // namespace

Generated generate(const RelationGraph& g, Method method, Var fresh_var_base, const CycleLimits& limits) {
  Generated out;
  out.report.method = method;

  switch (method) {
    case Method::Direct: {
      out.graph = g;
      emit(enumerate_chord_free_cycles(g, limits), g, out);
      break;
    }
    case Method::Dense: {
      check_base(g, fresh_var_base);
      const auto n = static_cast<Vertex>(g.num_vertices());
      std::vector<Edge> edges(g.edges());
      Var next = fresh_var_base;
      for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j)
          if (!g.has_edge(i, j)) {
            edges.push_back({i, j, next});
            out.report.fill_vars.push_back({next, i, j});
            ++next;
          }
      out.graph = build_graph(n, edges);
      // In a complete graph the chord-free cycles are exactly the triangles.
      std::vector<Cycle> triangles;
      triangles.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
      for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j)
          for (Vertex k = j + 1; k <= n; ++k) triangles.push_back(Cycle{{i, j, k}});
      emit(triangles, out.graph, out);
      break;
    }
    case Method::Sparse: {
      check_base(g, fresh_var_base);
      ChordalAugmentation aug = make_chordal(g, fresh_var_base);
      for (const Edge& e : aug.fill_edges) out.report.fill_vars.push_back({e.var, e.i, e.j});
      out.graph = std::move(aug.graph);
      emit(enumerate_chord_free_cycles(out.graph, limits), out.graph, out);
      break;
    }
  }

  out.report.edges = out.graph.num_edges();
  out.cnf.num_vars = out.graph.max_var();
  return out;
}

bool satisfies(const ClauseSet& f, const Assignment& chi) {
  for (const Clause& clause : f.clauses) {
    bool sat = false;
    for (Lit lit : clause) {
      auto value = chi.lookup(static_cast<Var>(std::abs(lit)));
      if (value && *value == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace transat
