#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "secroute/error.hpp"
#include "secroute/roadmap.hpp"

namespace secroute {

inline constexpr int kDefaultPathCap = 1 << 16;

// All simple routes between one source/target pair, as edge-index sequences,
// plus the union of edges appearing on at least one of them (the edges an
// attacker could usefully target).
struct PathSet {
  int source = 0;
  int target = 0;
  std::vector<std::vector<int>> paths;
  std::vector<int> attackable_edges;  // ascending edge indices

  // Vertex sequence of one path, e.g. {0, 1, 2}.
  std::vector<int> path_vertices(const Roadmap& g, std::size_t path_index) const {
    std::vector<int> out{source};
    int at = source;
    for (int eidx : paths[path_index]) {
      const Edge& e = g.edges[static_cast<std::size_t>(eidx)];
      at = (e.from == at) ? e.to : e.from;
      out.push_back(at);
    }
    return out;
  }

  // Index of the path with exactly this edge sequence, or -1.
  int find_path(const std::vector<int>& edge_sequence) const {
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (paths[i] == edge_sequence) return static_cast<int>(i);
    }
    return -1;
  }

  // Position of an edge inside attackable_edges, or -1.
  int attack_column(int edge_index) const {
    const auto it = std::lower_bound(attackable_edges.begin(), attackable_edges.end(), edge_index);
    if (it == attackable_edges.end() || *it != edge_index) return -1;
    return static_cast<int>(it - attackable_edges.begin());
  }
};

// Depth-first enumeration of every simple path from source to target, with
// neighbors visited in ascending vertex-id order so the listing is
// deterministic. Throws PathExplosion beyond max_paths.
inline PathSet enumerate_paths(const Roadmap& g, int source, int target,
                               int max_paths = kDefaultPathCap) {
  const int n = g.num_vertices();
  if (source < 0 || source >= n || target < 0 || target >= n) {
    throw InvariantViolation("enumerate_paths: source/target out of range");
  }
  if (source == target) {
    throw InvariantViolation("enumerate_paths: source and target must differ");
  }
  const auto adj = g.adjacency();
  PathSet out;
  out.source = source;
  out.target = target;

  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::vector<int> edge_stack;
  // Explicit stack of (vertex, next adjacency position) frames.
  std::vector<std::pair<int, std::size_t>> frames{{source, 0}};
  on_path[static_cast<std::size_t>(source)] = true;
  while (!frames.empty()) {
    auto& [u, next] = frames.back();
    if (u == target) {
      if (static_cast<int>(out.paths.size()) >= max_paths) {
        throw PathExplosion("enumerate_paths: more than " + std::to_string(max_paths) +
                            " simple paths");
      }
      out.paths.push_back(edge_stack);
      on_path[static_cast<std::size_t>(u)] = false;
      frames.pop_back();
      if (!edge_stack.empty()) edge_stack.pop_back();
      continue;
    }
    const auto& list = adj[static_cast<std::size_t>(u)];
    bool descended = false;
    while (next < list.size()) {
      const auto [v, eidx] = list[next++];
      if (on_path[static_cast<std::size_t>(v)]) continue;
      on_path[static_cast<std::size_t>(v)] = true;
      edge_stack.push_back(eidx);
      frames.emplace_back(v, 0);
      descended = true;
      break;
    }
    if (!descended) {
      on_path[static_cast<std::size_t>(u)] = false;
      frames.pop_back();
      if (!edge_stack.empty()) edge_stack.pop_back();
    }
  }
  if (out.paths.empty()) {
    throw NoPath("enumerate_paths: no route from " + std::to_string(source) + " to " +
                 std::to_string(target));
  }
  std::vector<bool> used(g.edges.size(), false);
  for (const auto& path : out.paths) {
    for (int eidx : path) used[static_cast<std::size_t>(eidx)] = true;
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.attackable_edges.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace secroute
