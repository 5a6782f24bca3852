#include "transat/cnfio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace transat {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t p = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
  while (p < line.size()) {
    while (p < line.size() && space(line[p])) ++p;
    std::size_t q = p;
    while (q < line.size() && !space(line[q])) ++q;
    if (q > p) out.push_back(line.substr(p, q - p));
    p = q;
  }
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view tok) {
  std::int64_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') {
    ++first;
    if (first != last && *first == '-') return std::nullopt;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no + 1); }

std::int64_t expect_int(std::string_view tok, std::size_t line_no, ErrorCode code) {
  auto v = parse_int(tok);
  if (!v) throw Error(code, where(line_no) + ": '" + std::string(tok) + "' is not an integer");
  return *v;
}

// Shared "<tag> <a> <b>" header parsing for `p cnf` and `p rel`.
std::pair<std::int64_t, std::int64_t> parse_header(const std::vector<std::string_view>& toks,
                                                   std::string_view tag, std::size_t line_no) {
  if (toks.size() != 4 || toks[0] != "p" || toks[1] != tag)
    throw Error(ErrorCode::MalformedHeader, where(line_no) + ": expected 'p " + std::string(tag) + " <a> <b>'");
  auto a = parse_int(toks[2]);
  auto b = parse_int(toks[3]);
  if (!a || !b || *a < 0 || *b < 0 || *a > 0x7fffffff || *b > 0x7fffffff)
    throw Error(ErrorCode::MalformedHeader, where(line_no) + ": header counts must be non-negative integers");
  return {*a, *b};
}

bool is_comment(const std::vector<std::string_view>& toks) { return !toks.empty() && toks[0][0] == 'c'; }

FillVar parse_rel_entry(const std::vector<std::string_view>& toks, std::size_t first, std::size_t line_no,
                        std::optional<std::size_t> n) {
  if (toks.size() != first + 3)
    throw Error(ErrorCode::MalformedEntry, where(line_no) + ": expected '<var> <i> <j>'");
  const auto var = expect_int(toks[first], line_no, ErrorCode::MalformedEntry);
  const auto i = expect_int(toks[first + 1], line_no, ErrorCode::MalformedEntry);
  const auto j = expect_int(toks[first + 2], line_no, ErrorCode::MalformedEntry);
  if (var <= 0 || var > 0x7fffffff) throw Error(ErrorCode::MalformedEntry, where(line_no) + ": bad variable id");
  const std::int64_t limit = n ? static_cast<std::int64_t>(*n) : 0x7fffffff;
  if (i < 1 || j < 1 || i > limit || j > limit || i == j)
    throw Error(ErrorCode::VertexOutOfRange, where(line_no) + ": pair (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ")");
  return {static_cast<Var>(var), static_cast<Vertex>(std::min(i, j)), static_cast<Vertex>(std::max(i, j))};
}

void check_unique(const RelMap& rel) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  std::set<Var> vars;
  for (const FillVar& e : rel.entries) {
    if (!pairs.emplace(e.i, e.j).second)
      throw Error(ErrorCode::DuplicatePair,
                  "pair (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") listed twice");
    if (!vars.insert(e.var).second)
      throw Error(ErrorCode::DuplicateVariable, "variable " + std::to_string(e.var) + " listed twice");
  }
}

}  // namespace

//===----------------------------------------------------------------------===//
// RelMap <-> RelationGraph
//===----------------------------------------------------------------------===//

RelMap rel_from_graph(const RelationGraph& g) {
  RelMap rel;
  rel.n = g.num_vertices();
  for (const Edge& e : g.edges()) rel.entries.push_back({e.var, e.i, e.j});
  return rel;
}

RelationGraph graph_from_rel(const RelMap& rel) {
  std::vector<Edge> edges;
  edges.reserve(rel.entries.size());
  for (const FillVar& e : rel.entries) edges.push_back({e.i, e.j, e.var});
  return build_graph(rel.n, edges);
}

//===----------------------------------------------------------------------===//
// DIMACS
//===----------------------------------------------------------------------===//

DimacsDocument read_dimacs_document(std::string_view text) {
  DimacsDocument doc;
  bool have_header = false;
  std::int64_t declared_clauses = 0;
  Clause current;
  const auto lines = split_lines(text);

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto toks = tokens(lines[ln]);
    if (toks.empty()) continue;
    if (is_comment(toks)) {
      if (toks[0] == "c" && toks.size() >= 2 && toks[1] == "rel") {
        FillVar e = parse_rel_entry(toks, 2, ln, std::nullopt);
        doc.embedded_rel.n = std::max<std::size_t>(doc.embedded_rel.n, e.j);
        doc.embedded_rel.entries.push_back(e);
      }
      continue;
    }
    if (toks[0] == "p") {
      if (have_header) throw Error(ErrorCode::MalformedHeader, where(ln) + ": second header");
      auto [vars, clauses] = parse_header(toks, "cnf", ln);
      doc.cnf.num_vars = static_cast<Var>(vars);
      declared_clauses = clauses;
      have_header = true;
      continue;
    }
    if (!have_header) throw Error(ErrorCode::MalformedHeader, where(ln) + ": clause data before 'p cnf' header");
    for (std::string_view tok : toks) {
      auto lit = parse_int(tok);
      if (!lit) throw Error(ErrorCode::MalformedToken, where(ln) + ": '" + std::string(tok) + "' is not a literal");
      if (*lit == 0) {
        doc.cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto bound = static_cast<std::int64_t>(doc.cnf.num_vars);
      if (*lit > bound || *lit < -bound)
        throw Error(ErrorCode::LiteralOutOfRange, where(ln) + ": literal " + std::to_string(*lit) +
                                                      " exceeds " + std::to_string(doc.cnf.num_vars) + " variables");
      current.push_back(static_cast<Lit>(*lit));
    }
  }

  if (!have_header) throw Error(ErrorCode::MalformedHeader, "missing 'p cnf' header");
  if (!current.empty()) throw Error(ErrorCode::UnterminatedClause, "last clause is not terminated by 0");
  if (static_cast<std::int64_t>(doc.cnf.clauses.size()) != declared_clauses) {
    doc.warnings.push_back(std::string(to_string(ErrorCode::ClauseCountMismatch)) + ": header declares " +
                           std::to_string(declared_clauses) + " clauses, found " +
                           std::to_string(doc.cnf.clauses.size()));
  }
  if (!doc.embedded_rel.entries.empty()) check_unique(doc.embedded_rel);
  return doc;
}

ClauseSet read_dimacs(std::string_view text) { return read_dimacs_document(text).cnf; }

std::string write_dimacs(const ClauseSet& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const Clause& clause : f.clauses) {
    for (Lit lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

//===----------------------------------------------------------------------===//
// Relation map
//===----------------------------------------------------------------------===//

RelMap read_rel(std::string_view text) {
  RelMap rel;
  bool have_header = false;
  std::int64_t declared = 0;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto toks = tokens(lines[ln]);
    if (toks.empty() || is_comment(toks)) continue;
    if (toks[0] == "p") {
      if (have_header) throw Error(ErrorCode::MalformedHeader, where(ln) + ": second header");
      auto [n, m] = parse_header(toks, "rel", ln);
      rel.n = static_cast<std::size_t>(n);
      declared = m;
      have_header = true;
      continue;
    }
    if (!have_header) throw Error(ErrorCode::MalformedHeader, where(ln) + ": entry before 'p rel' header");
    rel.entries.push_back(parse_rel_entry(toks, 0, ln, rel.n));
  }
  if (!have_header) throw Error(ErrorCode::MalformedHeader, "missing 'p rel' header");
  if (static_cast<std::int64_t>(rel.entries.size()) != declared)
    throw Error(ErrorCode::EntryCountMismatch, "header declares " + std::to_string(declared) + " entries, found " +
                                                   std::to_string(rel.entries.size()));
  check_unique(rel);
  return rel;
}

std::string write_rel(const RelMap& rel) {
  std::string out = "p rel " + std::to_string(rel.n) + " " + std::to_string(rel.entries.size()) + "\n";
  for (const FillVar& e : rel.entries)
    out += std::to_string(e.var) + " " + std::to_string(e.i) + " " + std::to_string(e.j) + "\n";
  return out;
}

//===----------------------------------------------------------------------===//
// Assignments
//===----------------------------------------------------------------------===//

Assignment read_assignment(std::string_view text) {
  Assignment chi;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto toks = tokens(lines[ln]);
    if (toks.empty() || is_comment(toks)) continue;
    if (toks.size() != 2) throw Error(ErrorCode::MalformedEntry, where(ln) + ": expected '<var> <0|1>'");
    const auto var = expect_int(toks[0], ln, ErrorCode::MalformedEntry);
    const auto value = expect_int(toks[1], ln, ErrorCode::MalformedEntry);
    if (var <= 0 || var > 0x7fffffff || (value != 0 && value != 1))
      throw Error(ErrorCode::MalformedEntry, where(ln) + ": expected '<var> <0|1>'");
    if (chi.contains(static_cast<Var>(var)))
      throw Error(ErrorCode::DuplicateVariable, where(ln) + ": variable " + std::to_string(var) + " repeated");
    chi.set(static_cast<Var>(var), value == 1);
  }
  return chi;
}

std::string write_assignment(const Assignment& chi) {
  std::string out;
  for (Var v : chi.vars()) out += std::to_string(v) + (chi.at(v) ? " 1\n" : " 0\n");
  return out;
}

ClauseSet merge(const ClauseSet& sat, const ClauseSet& trans) {
  ClauseSet out;
  out.num_vars = std::max(sat.num_vars, trans.num_vars);
  out.clauses.reserve(sat.clauses.size() + trans.clauses.size());
  out.clauses = sat.clauses;
  out.clauses.insert(out.clauses.end(), trans.clauses.begin(), trans.clauses.end());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace transat
