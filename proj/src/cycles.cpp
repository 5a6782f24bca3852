#include "transat/cycles.hpp"

#include <algorithm>
#include <string>

namespace transat {

PathFrontier::PathFrontier(const RelationGraph& g, CycleLimits limits) : g_(&g), limits_(limits) {
  std::vector<Node> first;
  first.reserve(g.num_vertices());
  for (Vertex v = 1; v <= g.num_vertices(); ++v) first.push_back({0, v});
  stored_ = first.size();
  levels_.push_back(std::move(first));
}

void PathFrontier::materialize(std::size_t level, std::uint32_t index, std::vector<Vertex>& buf) const {
  buf.resize(level + 1);
  for (std::size_t l = level + 1; l-- > 0;) {
    const Node& node = levels_[l][index];
    buf[l] = node.vertex;
    index = node.parent;
  }
}

std::vector<std::vector<Vertex>> PathFrontier::paths() const {
  std::vector<std::vector<Vertex>> out;
  if (levels_.empty()) return out;
  const std::size_t level = levels_.size() - 1;
  out.resize(levels_[level].size());
  for (std::uint32_t p = 0; p < out.size(); ++p) materialize(level, p, out[p]);
  return out;
}

void PathFrontier::step(std::vector<Cycle>& out) {
  const RelationGraph& g = *g_;
  const std::size_t level = levels_.size() - 1;
  const std::size_t k = level + 1;  // vertices per current path

  // position[v] = 1-based index of v on the current path, 0 when absent.
  std::vector<std::uint32_t> position(g.num_vertices() + 1, 0);
  std::vector<Vertex> path;
  std::vector<Node> next;

  for (std::uint32_t p = 0; p < levels_[level].size(); ++p) {
    materialize(level, p, path);
    for (std::uint32_t q = 0; q < k; ++q) position[path[q]] = q + 1;
    const Vertex first = path.front();
    const Vertex last = path.back();

    for (const Incidence& ext : g.neighbors(last)) {
      const Vertex w = ext.neighbor;
      // Only paths seeded at their smallest vertex are explored.
      if (w <= first) continue;
      if (position[w] != 0) continue;  // cyclic

      bool chorded = false;
      bool closes = false;
      for (const Incidence& inc : g.neighbors(w)) {
        const std::uint32_t pos = position[inc.neighbor];
        if (pos == 1) closes = true;
        else if (pos > 1 && pos < k) {
          chorded = true;
          break;
        }
      }
      if (chorded) continue;

      if (closes && k + 1 >= 3) {
        // Each cycle is reached once per direction; keep i_2 < i_k.
        if (path[1] < w) {
          if (emitted_ >= limits_.max_cycles)
            throw LimitError(ErrorCode::LimitExceeded,
                             "more than " + std::to_string(limits_.max_cycles) + " chord-free cycles",
                             emitted_);
          Cycle c;
          c.vertices.reserve(k + 1);
          c.vertices.assign(path.begin(), path.end());
          c.vertices.push_back(w);
          out.push_back(std::move(c));
          ++emitted_;
        }
        continue;
      }

      if (stored_ >= limits_.max_paths)
        throw LimitError(ErrorCode::LimitExceeded,
                         "more than " + std::to_string(limits_.max_paths) + " chord-free paths", emitted_);
      next.push_back({p, w});
      ++stored_;
    }

    for (Vertex v : path) position[v] = 0;
  }

  levels_.push_back(std::move(next));
}

std::vector<Cycle> enumerate_chord_free_cycles(const RelationGraph& g, const CycleLimits& limits) {
  std::vector<Cycle> cycles;
  PathFrontier frontier(g, limits);
  while (!frontier.done()) frontier.step(cycles);
  return cycles;
}

CycleStats cycle_stats(std::span<const Cycle> cycles) {
  CycleStats s;
  s.count = cycles.size();
  for (const Cycle& c : cycles) {
    s.total_length += c.length();
    s.max_length = std::max(s.max_length, c.length());
  }
  return s;
}

}  // namespace transat
