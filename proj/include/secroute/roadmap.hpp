#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "secroute/error.hpp"
#include "secroute/random.hpp"
#include "secroute/stage_game.hpp"

namespace secroute {

struct Vertex {
  int id = 0;
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Vertex&) const = default;
};

struct Edge {
  int from = 0;
  int to = 0;
  int num_stages = 1;
  StageCostMatrix stage_cost;

  bool operator==(const Edge&) const = default;
};

// Directed (or undirected) roadmap with planar vertex positions. Edges carry
// the stage count and the per-stage cost matrix of their edge-game.
struct Roadmap {
  bool directed = true;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int num_vertices() const { return static_cast<int>(vertices.size()); }

  bool operator==(const Roadmap&) const = default;

  // Vertex ids unique and contiguous from 0, edge endpoints in range, no
  // self-loops, no duplicate edges, stage counts >= 1.
  void validate() const {
    const int n = num_vertices();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const Vertex& v : vertices) {
      if (v.id < 0 || v.id >= n || seen[static_cast<std::size_t>(v.id)]) {
        throw InvariantViolation("roadmap: vertex ids must be unique and contiguous from 0");
      }
      seen[static_cast<std::size_t>(v.id)] = true;
    }
    std::set<std::pair<int, int>> keys;
    for (const Edge& e : edges) {
      if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
        throw InvariantViolation("roadmap: edge endpoint out of range");
      }
      if (e.from == e.to) {
        throw InvariantViolation("roadmap: self-loops are not allowed");
      }
      if (e.num_stages < 1) {
        throw InvariantViolation("roadmap: num_stages must be >= 1");
      }
      std::pair<int, int> key{e.from, e.to};
      if (!directed && key.first > key.second) std::swap(key.first, key.second);
      if (!keys.insert(key).second) {
        throw InvariantViolation("roadmap: duplicate edge " + std::to_string(e.from) +
                                 "->" + std::to_string(e.to));
      }
    }
  }

  // Per-vertex traversable (neighbor, edge index) pairs, neighbors ascending.
  // Undirected roadmaps list each edge from both endpoints.
  std::vector<std::vector<std::pair<int, int>>> adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(vertices.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const Edge& e = edges[static_cast<std::size_t>(i)];
      adj[static_cast<std::size_t>(e.from)].emplace_back(e.to, i);
      if (!directed) adj[static_cast<std::size_t>(e.to)].emplace_back(e.from, i);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
  }

  bool reaches(int source, int target) const {
    const auto adj = adjacency();
    std::vector<bool> visited(vertices.size(), false);
    std::vector<int> stack{source};
    visited[static_cast<std::size_t>(source)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (u == target) return true;
      for (const auto& step : adj[static_cast<std::size_t>(u)]) {
        const int v = step.first;
        if (!visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
    return false;
  }
};

namespace detail {

inline int stages_from_distance(double stage_scale, double dx, double dy) {
  const double dist = std::sqrt(dx * dx + dy * dy);
  const long stages = std::lround(stage_scale * dist);
  return stages < 1 ? 1 : static_cast<int>(stages);
}

inline std::vector<Vertex> sample_unit_square(int n, std::mt19937_64& rng) {
  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    vertices[static_cast<std::size_t>(i)].id = i;
    vertices[static_cast<std::size_t>(i)].x = uniform_unit(rng);
    vertices[static_cast<std::size_t>(i)].y = uniform_unit(rng);
  }
  return vertices;
}

inline Edge make_edge(const std::vector<Vertex>& vs, int from, int to,
                      double stage_scale, const StageCostMatrix& s) {
  const Vertex& a = vs[static_cast<std::size_t>(from)];
  const Vertex& b = vs[static_cast<std::size_t>(to)];
  return Edge{from, to, stages_from_distance(stage_scale, a.x - b.x, a.y - b.y), s};
}

}  // namespace detail

// Random planar roadmap with every vertex's undirected degree inside
// [degree_lo, degree_hi]. Vertices are sampled uniformly from the unit
// square; stage counts are proportional to Euclidean edge length. Edges are
// oriented from lower to higher vertex id, which makes the graph acyclic
// with source 0 and sink n-1. Regenerates with a derived sub-seed until the
// sink is reachable, up to 100 attempts.
inline Roadmap generate_sparse_graph(int n_vertices, double degree_lo, double degree_hi,
                                     double stage_scale, const StageCostMatrix& s,
                                     std::uint64_t seed) {
  if (n_vertices < 2) {
    throw InvariantViolation("generate_sparse_graph: need at least 2 vertices");
  }
  if (!(stage_scale > 0.0)) {
    throw InvariantViolation("generate_sparse_graph: stage_scale must be > 0");
  }
  if (n_vertices == 2) {
    std::mt19937_64 rng(derive_seed(seed, 0));
    Roadmap g;
    g.vertices = detail::sample_unit_square(2, rng);
    g.edges.push_back(detail::make_edge(g.vertices, 0, 1, stage_scale, s));
    return g;
  }
  if (!(2.0 <= degree_lo && degree_lo <= degree_hi && degree_hi < n_vertices)) {
    throw InvariantViolation("generate_sparse_graph: need 2 <= degree_lo <= degree_hi < n_vertices");
  }
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, attempt));
    Roadmap g;
    g.vertices = detail::sample_unit_square(n_vertices, rng);

    std::vector<std::set<int>> neighbors(static_cast<std::size_t>(n_vertices));
    std::vector<int> degree(static_cast<std::size_t>(n_vertices), 0);
    bool feasible = true;
    while (feasible) {
      std::vector<int> deficient;
      for (int v = 0; v < n_vertices; ++v) {
        if (degree[static_cast<std::size_t>(v)] < degree_lo) deficient.push_back(v);
      }
      if (deficient.empty()) break;
      const int u = deficient[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<int>(deficient.size()) - 1))];
      std::vector<int> candidates;
      for (int w = 0; w < n_vertices; ++w) {
        if (w == u) continue;
        if (degree[static_cast<std::size_t>(w)] + 1 > degree_hi) continue;
        if (neighbors[static_cast<std::size_t>(u)].count(w) != 0) continue;
        candidates.push_back(w);
      }
      if (candidates.empty()) {
        feasible = false;
        break;
      }
      const int w = candidates[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1))];
      neighbors[static_cast<std::size_t>(u)].insert(w);
      neighbors[static_cast<std::size_t>(w)].insert(u);
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(w)];
    }
    if (!feasible) continue;

    for (int u = 0; u < n_vertices; ++u) {
      for (int w : neighbors[static_cast<std::size_t>(u)]) {
        if (u < w) g.edges.push_back(detail::make_edge(g.vertices, u, w, stage_scale, s));
      }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
      return std::pair{a.from, a.to} < std::pair{b.from, b.to};
    });
    if (g.reaches(0, n_vertices - 1)) {
      return g;
    }
  }
  throw InfeasibleDegree("generate_sparse_graph: no connected graph with the requested degree range after 100 attempts");
}

// Complete directed acyclic roadmap: an edge i->j for every i < j, so the
// number of source-to-sink paths is 2^(n-2).
inline Roadmap generate_complete_dag(int n_vertices, double stage_scale,
                                     const StageCostMatrix& s, std::uint64_t seed) {
  if (n_vertices < 2) {
    throw InvariantViolation("generate_complete_dag: need at least 2 vertices");
  }
  if (!(stage_scale > 0.0)) {
    throw InvariantViolation("generate_complete_dag: stage_scale must be > 0");
  }
  std::mt19937_64 rng(derive_seed(seed, 0));
  Roadmap g;
  g.vertices = detail::sample_unit_square(n_vertices, rng);
  for (int i = 0; i < n_vertices; ++i) {
    for (int j = i + 1; j < n_vertices; ++j) {
      g.edges.push_back(detail::make_edge(g.vertices, i, j, stage_scale, s));
    }
  }
  return g;
}

}  // namespace secroute
