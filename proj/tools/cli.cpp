#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "transat/chordal.hpp"
#include "transat/cnfio.hpp"
#include "transat/constraints.hpp"
#include "transat/cycles.hpp"
#include "transat/generators.hpp"
#include "transat/obdd.hpp"
#include "transat/solver.hpp"

namespace transat::cli {

namespace {

constexpr const char* kEnvHelp =
    "Environment (integer values, override built-in defaults):\n"
    "  TRANSAT_CYCLE_LIMIT     max chord-free cycles (default 1000000)\n"
    "  TRANSAT_PATH_LIMIT      max stored chord-free paths (default 10000000)\n"
    "  TRANSAT_NODE_LIMIT      max BDD nodes (default 20000000)\n"
    "  TRANSAT_ROUND_LIMIT     max lazy refinement rounds (default 100000)\n"
    "  TRANSAT_CONFLICT_LIMIT  max solver conflicts per call, 0 = none (default 0)\n";

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0)
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be a positive integer");
  return v;
}

struct RunConfig {
  std::string cnf_path;
  std::string rel_path;
  std::string assign_path;
  std::string output_path;
  std::string method = "sparse";
  std::string mode = "eager";
  std::uint64_t cycle_limit = 1'000'000;
  std::uint64_t path_limit = 10'000'000;
  std::uint64_t node_limit = BddStore::kDefaultNodeLimit;
  std::uint64_t round_limit = 100'000;
  std::uint64_t conflict_limit = 0;
  std::uint64_t seed = 0;
  bool stats = false;
  bool csv = false;

  // bench
  std::string family = "mesh";
  std::size_t n = 4;
  double probability = 0.3;
  bool table2 = false;
  std::size_t max_n = 6;
  std::size_t jobs = 1;

  // obdd
  bool probe_growth = false;
  bool reduced_check = false;
  bool implicants = false;
  std::size_t implicant_limit = 0;
  std::size_t probe_max_n = 5;
  Var fresh_base = 0;

  CycleLimits cycle_limits() const { return {cycle_limit, path_limit}; }
  SolverOptions solver_options() const { return {conflict_limit, seed, cycle_limits()}; }
};

void load_env_defaults(RunConfig& cfg) {
  cfg.cycle_limit = env_or("TRANSAT_CYCLE_LIMIT", cfg.cycle_limit);
  cfg.path_limit = env_or("TRANSAT_PATH_LIMIT", cfg.path_limit);
  cfg.node_limit = env_or("TRANSAT_NODE_LIMIT", cfg.node_limit);
  cfg.round_limit = env_or("TRANSAT_ROUND_LIMIT", cfg.round_limit);
  const char* conflicts = std::getenv("TRANSAT_CONFLICT_LIMIT");
  if (conflicts != nullptr && *conflicts != '\0') cfg.conflict_limit = env_or("TRANSAT_CONFLICT_LIMIT", 1);
}

void add_limit_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--cycle-limit", cfg.cycle_limit, "Cap on chord-free cycles")->check(CLI::PositiveNumber);
  cmd->add_option("--path-limit", cfg.path_limit, "Cap on stored chord-free paths")->check(CLI::PositiveNumber);
}

std::string stats_line(const GenerationReport& r) {
  return "edges=" + std::to_string(r.edges) + " cycles=" + std::to_string(r.cycles) +
         " clauses=" + std::to_string(r.clauses) + " fill_vars=" + std::to_string(r.fill_vars.size());
}

std::string solve_stats_line(const SolveResult& r) {
  const SolveStats& s = r.stats;
  return "decisions=" + std::to_string(s.decisions) + " propagations=" + std::to_string(s.propagations) +
         " conflicts=" + std::to_string(s.conflicts) + " restarts=" + std::to_string(s.restarts) +
         " refinement_rounds=" + std::to_string(s.refinement_rounds) +
         " added_clauses=" + std::to_string(s.added_clauses);
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? "," : "") + std::to_string(vs[k]);
  return out;
}

// Relation map from --rel, else from `c rel` lines embedded in the CNF.
RelMap load_rel(const RunConfig& cfg, const DimacsDocument* doc) {
  if (!cfg.rel_path.empty()) return read_rel(read_file(cfg.rel_path));
  if (doc != nullptr) return doc->embedded_rel;
  return {};
}

DimacsDocument load_cnf(const RunConfig& cfg, std::ostream& err) {
  DimacsDocument doc = read_dimacs_document(read_file(cfg.cnf_path));
  for (const auto& w : doc.warnings) err << "warning: " << w << "\n";
  return doc;
}

int report_status(const SolveResult& r, const RunConfig& cfg, std::ostream& out) {
  out << (r.status == Status::Sat ? "s SATISFIABLE" : "s UNSATISFIABLE") << "\n";
  if (cfg.stats) out << solve_stats_line(r) << "\n";
  if (r.status == Status::Sat && !cfg.output_path.empty()) write_file(cfg.output_path, write_assignment(r.model));
  return r.status == Status::Sat ? kExitSat : kExitUnsat;
}

//===----------------------------------------------------------------------===//
// Subcommands
//===----------------------------------------------------------------------===//

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RelMap rel = read_rel(read_file(cfg.rel_path));
  const RelationGraph g = graph_from_rel(rel);
  ClauseSet sat;
  if (!cfg.cnf_path.empty()) sat = load_cnf(cfg, err).cnf;
  const Var base = cfg.fresh_base != 0 ? cfg.fresh_base : std::max(sat.num_vars, g.max_var()) + 1;
  const Generated gen = generate(g, parse_method(cfg.method), base, cfg.cycle_limits());
  const ClauseSet combined = merge(sat, gen.cnf);
  const std::string text = write_dimacs(combined);
  if (cfg.output_path.empty()) out << text;
  else write_file(cfg.output_path, text);
  if (cfg.stats || !cfg.output_path.empty()) (cfg.output_path.empty() ? err : out) << stats_line(gen.report) << "\n";
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const RelationGraph g = graph_from_rel(read_rel(read_file(cfg.rel_path)));
  const Assignment chi = read_assignment(read_file(cfg.assign_path));
  if (auto w = find_violation(g, chi)) {
    out << "violation cycle=" << join(w->cycle) << " zero_edge=" << w->zero_edge.i << "-" << w->zero_edge.j
        << " var=" << w->zero_edge.var << "\n";
  } else {
    out << "ok\n";
  }
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const DimacsDocument doc = load_cnf(cfg, err);
  const RelMap rel = load_rel(cfg, &doc);
  SolveResult r;
  if (rel.entries.empty() && cfg.rel_path.empty()) {
    r = solve(doc.cnf, cfg.solver_options());
  } else if (cfg.mode == "lazy") {
    r = solve_lazy(doc.cnf, rel, cfg.round_limit, cfg.solver_options());
  } else if (cfg.mode == "eager") {
    r = solve_eager(doc.cnf, rel, parse_method(cfg.method), cfg.solver_options());
    if (cfg.stats) out << stats_line(r.generation) << "\n";
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown mode '" + cfg.mode + "'");
  }
  return report_status(r, cfg, out);
}

struct BenchRow {
  std::string family;
  std::size_t n;
  Method method;
  GenerationReport report;
  double seconds;
};

BenchRow bench_one(const BenchSpec& spec, const std::string& family, Method method, const CycleLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const RelationGraph g = generate_bench(spec);
  Generated gen = generate(g, method, g.max_var() + 1, limits);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {family, spec.n, method, std::move(gen.report), secs};
}

void print_rows(const std::vector<BenchRow>& rows, bool csv, std::ostream& out) {
  if (csv) {
    out << "family,n,method,edges,cycles,clauses,seconds\n";
    for (const auto& r : rows)
      out << r.family << "," << r.n << "," << to_string(r.method) << "," << r.report.edges << ","
          << r.report.cycles << "," << r.report.clauses << "," << r.seconds << "\n";
    return;
  }
  out << std::left << std::setw(10) << "graph" << std::setw(8) << "method" << std::right << std::setw(10)
      << "edges" << std::setw(12) << "cycles" << std::setw(14) << "clauses" << std::setw(10) << "seconds\n";
  for (const auto& r : rows)
    out << std::left << std::setw(10) << (r.family + "_" + std::to_string(r.n)) << std::setw(8)
        << to_string(r.method) << std::right << std::setw(10) << r.report.edges << std::setw(12) << r.report.cycles
        << std::setw(14) << r.report.clauses << std::setw(10) << std::fixed << std::setprecision(3) << r.seconds
        << "\n";
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  if (cfg.table2) {
    std::vector<std::future<BenchRow>> jobs;
    std::vector<BenchRow> rows;
    const auto launch = cfg.jobs > 1 ? std::launch::async : std::launch::deferred;
    for (std::size_t n = 4; n <= cfg.max_n; ++n)
      for (Method m : {Method::Direct, Method::Dense, Method::Sparse})
        jobs.push_back(std::async(launch, bench_one, BenchSpec{BenchFamily::Mesh, n, 0, 0}, "mesh", m,
                                  cfg.cycle_limits()));
    for (auto& j : jobs) rows.push_back(j.get());
    print_rows(rows, cfg.csv, out);
    return kExitOk;
  }

  const BenchSpec spec{parse_family(cfg.family), cfg.n, cfg.probability, cfg.seed};
  if (!cfg.output_path.empty()) write_file(cfg.output_path, write_rel(rel_from_graph(generate_bench(spec))));
  const BenchRow row = bench_one(spec, cfg.family, parse_method(cfg.method), cfg.cycle_limits());
  if (cfg.stats) out << "edges=" << row.report.edges << " cycles=" << row.report.cycles
                     << " clauses=" << row.report.clauses << "\n";
  else print_rows({row}, cfg.csv, out);
  return kExitOk;
}

int cmd_obdd(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int picked = int(cfg.probe_growth) + int(cfg.reduced_check) + int(cfg.implicants);
  if (picked != 1) throw Error(ErrorCode::InvalidArgument, "choose exactly one of --probe-growth, --reduced-check, --implicants");

  if (cfg.probe_growth) {
    out << (cfg.csv ? "n,ordering,nodes,seconds\n" : "");
    for (std::size_t n = 3; n <= cfg.probe_max_n; ++n)
      for (MeshOrdering o : {MeshOrdering::RowMajor, MeshOrdering::Interleaved, MeshOrdering::Reversed}) {
        const GrowthSample s = measure_mesh_growth(n, o, cfg.node_limit);
        if (cfg.csv) out << s.n << "," << to_string(s.ordering) << "," << s.nodes << "," << s.seconds << "\n";
        else out << "n=" << s.n << " ordering=" << to_string(s.ordering) << " nodes=" << s.nodes
                 << " seconds=" << s.seconds << "\n";
      }
    return kExitOk;
  }

  const DimacsDocument doc = load_cnf(cfg, err);
  const RelMap rel = load_rel(cfg, &doc);
  std::vector<Var> order;
  for (Var v = 1; v <= doc.cnf.num_vars; ++v) order.push_back(v);
  BddStore store(order, cfg.node_limit);
  for (const FillVar& e : rel.entries)
    if (!store.has_var(e.var)) store.append_var(e.var);
  const BddRef f_sat = build_cnf_bdd(store, doc.cnf);

  if (cfg.reduced_check) {
    const ReducedResult r = reduced_transitivity_check(store, f_sat, rel, parse_method(cfg.method),
                                                       cfg.cycle_limits());
    if (cfg.stats)
      out << "vertices=" << r.report.vertices << " hat_edges=" << r.report.hat_edges << " edges=" << r.report.edges
          << " cycles=" << r.report.cycles << " clauses=" << r.report.clauses
          << " constraint_nodes=" << r.report.constraint_nodes << "\n";
    return report_status(r.result, cfg, out);
  }

  const ImplicantResult r = filtered_implicants(store, f_sat, rel, cfg.implicant_limit);
  switch (r.kind) {
    case ImplicantResult::Kind::Found: {
      out << "implicant";
      for (Lit lit : r.cube) out << " " << lit;
      out << "\nexamined=" << r.count << "\n";
      return kExitSat;
    }
    case ImplicantResult::Kind::Exhausted:
      out << "exhausted examined=" << r.count << "\n";
      return kExitUnsat;
    case ImplicantResult::Kind::LimitExceeded:
      err << "implicant limit reached after " << r.count << " cubes\n";
      return kExitLimit;
  }
  return kExitError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    load_env_defaults(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  CLI::App app{"Boolean satisfiability with transitivity constraints over equality-relation variables"};
  app.footer(kEnvHelp);
  app.require_subcommand(1);

  const std::vector<std::string> methods{"direct", "dense", "sparse"};

  auto* gen = app.add_subcommand("gen", "Emit transitivity clauses (merged after --cnf's clauses, if given)");
  gen->add_option("--rel", cfg.rel_path, "Relation map (.rel)")->required();
  gen->add_option("--cnf", cfg.cnf_path, "CNF to merge with");
  gen->add_option("--method", cfg.method, "direct|dense|sparse")->check(CLI::IsMember(methods));
  gen->add_option("--fresh-base", cfg.fresh_base, "First id for new variables (default: max id + 1)");
  gen->add_option("-o,--output", cfg.output_path, "Output CNF (default stdout)");
  gen->add_flag("--stats", cfg.stats, "Print key=value statistics");
  add_limit_options(gen, cfg);

  auto* check = app.add_subcommand("check", "Check an assignment against transitivity; prints a witness cycle");
  check->add_option("--rel", cfg.rel_path, "Relation map (.rel)")->required();
  check->add_option("--assign", cfg.assign_path, "Assignment file, lines '<var> <0|1>'")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Solve a CNF under transitivity constraints (exit 10 SAT, 20 UNSAT)");
  solve_cmd->add_option("--cnf", cfg.cnf_path, "Input CNF; 'c rel <var> <i> <j>' lines act as the map")->required();
  solve_cmd->add_option("--rel", cfg.rel_path, "Relation map (.rel)");
  solve_cmd->add_option("--mode", cfg.mode, "eager|lazy")->check(CLI::IsMember({"eager", "lazy"}));
  solve_cmd->add_option("--method", cfg.method, "direct|dense|sparse (eager mode)")->check(CLI::IsMember(methods));
  solve_cmd->add_option("--model", cfg.output_path, "Write the model as an assignment file");
  solve_cmd->add_option("--round-limit", cfg.round_limit, "Lazy refinement round cap")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--conflict-limit", cfg.conflict_limit, "Conflict budget per solver call");
  solve_cmd->add_option("--seed", cfg.seed, "Decision tie-break seed");
  solve_cmd->add_flag("--stats", cfg.stats, "Print key=value statistics");
  add_limit_options(solve_cmd, cfg);

  auto* bench = app.add_subcommand("bench", "Benchmark graph families.\nCSV columns: family,n,method,edges,cycles,clauses,seconds");
  bench->add_option("family", cfg.family, "mesh|diamond|random")->check(CLI::IsMember({"mesh", "diamond", "random"}));
  bench->add_option("--n", cfg.n, "Mesh side, diamond faces, or random vertex count");
  bench->add_option("--p", cfg.probability, "Random edge probability")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--seed", cfg.seed, "Random seed");
  bench->add_option("--method", cfg.method, "direct|dense|sparse")->check(CLI::IsMember(methods));
  bench->add_option("-o,--output", cfg.output_path, "Also write the graph as a .rel file");
  bench->add_flag("--stats", cfg.stats, "Print edges=, cycles=, clauses=");
  bench->add_flag("--csv", cfg.csv, "CSV output");
  bench->add_flag("--table2", cfg.table2, "All three methods on meshes M_4 .. M_<max-n>");
  bench->add_option("--max-n", cfg.max_n, "Largest mesh for --table2");
  bench->add_option("--jobs", cfg.jobs, "Parallel workers for --table2")->check(CLI::PositiveNumber);
  add_limit_options(bench, cfg);

  auto* obdd = app.add_subcommand("obdd", "BDD flows.\nCSV columns (--probe-growth --csv): n,ordering,nodes,seconds");
  obdd->add_flag("--probe-growth", cfg.probe_growth, "Node counts of mesh transitivity BDDs, n = 3 .. max-n");
  obdd->add_flag("--reduced-check", cfg.reduced_check, "Transitivity check restricted to the true support");
  obdd->add_flag("--implicants", cfg.implicants, "First transitivity-consistent implicant");
  obdd->add_option("--cnf", cfg.cnf_path, "Input CNF");
  obdd->add_option("--rel", cfg.rel_path, "Relation map (.rel)");
  obdd->add_option("--method", cfg.method, "direct|dense|sparse")->check(CLI::IsMember(methods));
  obdd->add_option("--limit", cfg.implicant_limit, "Implicant cap (0 = none)");
  obdd->add_option("--max-n", cfg.probe_max_n, "Largest mesh for --probe-growth");
  obdd->add_option("--node-limit", cfg.node_limit, "BDD node cap")->check(CLI::PositiveNumber);
  obdd->add_option("--model", cfg.output_path, "Write the model (--reduced-check)");
  obdd->add_flag("--stats", cfg.stats, "Print key=value statistics");
  obdd->add_flag("--csv", cfg.csv, "CSV output");
  add_limit_options(obdd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitError;
  }

  try {
    if (*gen) return cmd_gen(cfg, out, err);
    if (*check) return cmd_check(cfg, out);
    if (*solve_cmd) return cmd_solve(cfg, out, err);
    if (*bench) return cmd_bench(cfg, out);
    if (*obdd) {
      if (!cfg.probe_growth && cfg.cnf_path.empty() && (cfg.reduced_check || cfg.implicants))
        throw Error(ErrorCode::InvalidArgument, "--cnf is required");
      return cmd_obdd(cfg, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_limit(e.code()) ? kExitLimit : kExitError;
  }
  return kExitError;
}

}  // namespace transat::cli
