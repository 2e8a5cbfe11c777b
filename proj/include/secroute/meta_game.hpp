#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <queue>
#include <string>
#include <vector>

#include "secroute/edge_game.hpp"
#include "secroute/error.hpp"
#include "secroute/matrix_game.hpp"
#include "secroute/paths.hpp"
#include "secroute/roadmap.hpp"

namespace secroute {

// Weight of an edge whose edge-game is actually played: the game value.
inline double edge_weight_attacked(const Edge& e) {
  return solve_edge_game(e.stage_cost, e.num_stages).value();
}

// Weight of an undisturbed edge: the accumulated mobility cost.
inline double edge_weight_clean(const Edge& e) {
  return static_cast<double>(e.num_stages) * e.stage_cost.s22;
}

// Payoff matrix of the route-vs-edge-attack game: rows are routes, columns
// are attackable edges. An entry is the route's cost when that one edge is
// attacked: every traversed edge contributes its mobility cost except the
// attacked one, which contributes its edge-game value. Attacks outside the
// route leave the row at its plain mobility sum.
inline std::vector<std::vector<double>> build_meta_matrix(const Roadmap& g, const PathSet& ps) {
  std::vector<double> clean(g.edges.size(), 0.0);
  std::vector<double> attacked(g.edges.size(), 0.0);
  for (int eidx : ps.attackable_edges) {
    const Edge& e = g.edges[static_cast<std::size_t>(eidx)];
    clean[static_cast<std::size_t>(eidx)] = edge_weight_clean(e);
    attacked[static_cast<std::size_t>(eidx)] = edge_weight_attacked(e);
  }
  std::vector<std::vector<double>> w(ps.paths.size(),
                                     std::vector<double>(ps.attackable_edges.size(), 0.0));
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    double clean_sum = 0.0;
    for (int eidx : ps.paths[i]) clean_sum += clean[static_cast<std::size_t>(eidx)];
    for (std::size_t j = 0; j < ps.attackable_edges.size(); ++j) {
      const int attacked_edge = ps.attackable_edges[j];
      const bool on_path = std::find(ps.paths[i].begin(), ps.paths[i].end(), attacked_edge) !=
                           ps.paths[i].end();
      if (!on_path) {
        w[i][j] = clean_sum;
      } else {
        double total = attacked[static_cast<std::size_t>(attacked_edge)];
        for (int eidx : ps.paths[i]) {
          if (eidx != attacked_edge) total += clean[static_cast<std::size_t>(eidx)];
        }
        w[i][j] = total;
      }
    }
  }
  return w;
}

// Solved route-vs-edge-attack game.
struct MetaGame {
  PathSet path_set;
  std::vector<std::vector<double>> matrix;
  double value = 0.0;                // W_NE
  std::vector<double> defender_mix;  // over path_set.paths
  std::vector<double> attacker_mix;  // over path_set.attackable_edges
  double duality_gap = 0.0;
};

inline MetaGame solve_meta_game(const Roadmap& g, int source, int target,
                                int max_paths = kDefaultPathCap) {
  MetaGame mg;
  mg.path_set = enumerate_paths(g, source, target, max_paths);
  mg.matrix = build_meta_matrix(g, mg.path_set);
  MatrixGameSolution sol = solve_matrix_game(mg.matrix);
  mg.value = sol.value;
  mg.defender_mix = std::move(sol.row_mix);
  mg.attacker_mix = std::move(sol.col_mix);
  mg.duality_gap = sol.duality_gap;
  return mg;
}

struct HeuristicResult {
  std::vector<int> shortest_path;    // edge indices of the route
  double length_under_attack = 0.0;  // worst-case route cost, one edge attacked
  int worst_edge = -1;               // the edge achieving it
};

namespace detail {

// Distance from every vertex to the target under the given edge weights,
// reached by Dijkstra over reversed adjacency.
inline std::vector<double> distances_to_target(const Roadmap& g,
                                               const std::vector<double>& weight, int target) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::pair<int, int>>> radj(g.vertices.size());
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const Edge& e = g.edges[static_cast<std::size_t>(i)];
    radj[static_cast<std::size_t>(e.to)].emplace_back(e.from, i);
    if (!g.directed) radj[static_cast<std::size_t>(e.from)].emplace_back(e.to, i);
  }
  std::vector<double> dist(g.vertices.size(), inf);
  dist[static_cast<std::size_t>(target)] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.emplace(0.0, target);
  std::vector<bool> done(g.vertices.size(), false);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (done[static_cast<std::size_t>(v)]) continue;
    done[static_cast<std::size_t>(v)] = true;
    for (const auto& [u, eidx] : radj[static_cast<std::size_t>(v)]) {
      const double candidate = dist[static_cast<std::size_t>(v)] + weight[static_cast<std::size_t>(eidx)];
      if (candidate < dist[static_cast<std::size_t>(u)]) {
        dist[static_cast<std::size_t>(u)] = candidate;
        heap.emplace(candidate, u);
      }
    }
  }
  return dist;
}

}  // namespace detail

// Shortest-route heuristic: weight every edge by its edge-game value, take
// the shortest route (ties broken toward the lexicographically smallest
// vertex sequence), then price that route against the single worst edge
// attack on it.
inline HeuristicResult shortest_path_edge_attack(const Roadmap& g, int source, int target) {
  const int n = g.num_vertices();
  if (source < 0 || source >= n || target < 0 || target >= n || source == target) {
    throw InvariantViolation("shortest_path_edge_attack: bad source/target");
  }
  std::vector<double> attacked(g.edges.size(), 0.0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    attacked[i] = edge_weight_attacked(g.edges[i]);
    if (attacked[i] < 0.0) {
      throw InvariantViolation("shortest_path_edge_attack: negative edge-game value on edge " +
                               std::to_string(i));
    }
  }
  const std::vector<double> dist = detail::distances_to_target(g, attacked, target);
  if (!std::isfinite(dist[static_cast<std::size_t>(source)])) {
    throw NoPath("shortest_path_edge_attack: no route from " + std::to_string(source) +
                 " to " + std::to_string(target));
  }

  // Walk the distance field from the source, always taking the smallest
  // neighbor that lies on some shortest route. Every relaxation stored
  // dist[u] as dist[v] + w, so at least one outgoing edge reproduces it
  // exactly.
  const auto adj = g.adjacency();
  HeuristicResult out;
  int at = source;
  while (at != target) {
    int chosen_edge = -1;
    int chosen_vertex = -1;
    for (const auto& [v, eidx] : adj[static_cast<std::size_t>(at)]) {
      if (dist[static_cast<std::size_t>(at)] ==
          dist[static_cast<std::size_t>(v)] + attacked[static_cast<std::size_t>(eidx)]) {
        chosen_edge = eidx;
        chosen_vertex = v;
        break;  // neighbors ascend, so the first hit is the smallest id
      }
    }
    if (chosen_edge < 0) {
      throw SolverFailure("shortest_path_edge_attack: inconsistent distance field");
    }
    out.shortest_path.push_back(chosen_edge);
    at = chosen_vertex;
  }

  // Worst single-edge attack on the chosen route; lowest edge index wins ties.
  double best = -std::numeric_limits<double>::infinity();
  int best_edge = -1;
  for (int candidate : out.shortest_path) {
    double total = attacked[static_cast<std::size_t>(candidate)];
    for (int eidx : out.shortest_path) {
      if (eidx != candidate) total += edge_weight_clean(g.edges[static_cast<std::size_t>(eidx)]);
    }
    if (total > best || (total == best && candidate < best_edge)) {
      best = total;
      best_edge = candidate;
    }
  }
  out.length_under_attack = best;
  out.worst_edge = best_edge;
  return out;
}

struct CostSensitivityPoint {
  double r1 = 0.0;
  double r2 = 0.0;
  double p_shortest_path = 0.0;  // defender mass on the heuristic route
  double p_shortest_edge = 0.0;  // attacker mass on the heuristic's worst edge
};

struct StageSensitivityPoint {
  int stages_direct = 0;
  int stages_alt = 0;
  double p_shortest_path = 0.0;
  double p_shortest_edge = 0.0;
};

namespace detail {

// Defender mass on the heuristic route and attacker mass on its worst edge.
inline std::pair<double, double> heuristic_masses(const Roadmap& g, int source, int target,
                                                  const MetaGame& mg) {
  const HeuristicResult h = shortest_path_edge_attack(g, source, target);
  const int path_index = mg.path_set.find_path(h.shortest_path);
  const int col = mg.path_set.attack_column(h.worst_edge);
  if (path_index < 0 || col < 0) {
    throw SolverFailure("heuristic route missing from the enumerated path set");
  }
  return {mg.defender_mix[static_cast<std::size_t>(path_index)],
          mg.attacker_mix[static_cast<std::size_t>(col)]};
}

}  // namespace detail

// Re-solves the meta-game over a grid of cost ratios, with every edge's
// stage cost rebuilt as s11 * [[1, 1], [r1, r2]]. Reports, per grid point,
// the defender's probability of the heuristic route and the attacker's
// probability of that route's worst edge.
inline std::vector<CostSensitivityPoint> sensitivity_sweep_costs(
    const Roadmap& g, int source, int target, std::span<const double> r1_grid,
    std::span<const double> r2_grid, double s11) {
  Roadmap scratch = g;
  std::vector<CostSensitivityPoint> out;
  for (double r1 : r1_grid) {
    for (double r2 : r2_grid) {
      const StageCostMatrix s = StageCostMatrix::from_ratios(s11, r1, r2);
      for (Edge& e : scratch.edges) e.stage_cost = s;
      const MetaGame mg = solve_meta_game(scratch, source, target);
      const auto [p_path, p_edge] = detail::heuristic_masses(scratch, source, target, mg);
      out.push_back({r1, r2, p_path, p_edge});
    }
  }
  return out;
}

// Stage-count sensitivity on a three-vertex topology: one direct edge from
// source to target against a two-edge detour. The detour legs always share
// one stage count. Requires the graph to have exactly those two routes.
inline std::vector<StageSensitivityPoint> sensitivity_sweep_stages(
    const Roadmap& g, int source, int target, const StageCostMatrix& s,
    std::span<const int> direct_grid, std::span<const int> alt_grid) {
  const PathSet ps = enumerate_paths(g, source, target);
  if (ps.paths.size() != 2) {
    throw InvariantViolation("sensitivity_sweep_stages: expected exactly 2 routes");
  }
  const std::vector<int>* direct = &ps.paths[0];
  const std::vector<int>* detour = &ps.paths[1];
  if (direct->size() > detour->size()) std::swap(direct, detour);
  if (direct->size() != 1 || detour->size() != 2) {
    throw InvariantViolation("sensitivity_sweep_stages: expected a 1-edge route and a 2-edge route");
  }
  Roadmap scratch = g;
  for (Edge& e : scratch.edges) e.stage_cost = s;
  std::vector<StageSensitivityPoint> out;
  for (int d : direct_grid) {
    for (int a : alt_grid) {
      if (d < 1 || a < 1) {
        throw InvariantViolation("sensitivity_sweep_stages: stage counts must be >= 1");
      }
      scratch.edges[static_cast<std::size_t>((*direct)[0])].num_stages = d;
      for (int eidx : *detour) scratch.edges[static_cast<std::size_t>(eidx)].num_stages = a;
      const MetaGame mg = solve_meta_game(scratch, source, target);
      const auto [p_path, p_edge] = detail::heuristic_masses(scratch, source, target, mg);
      out.push_back({d, a, p_path, p_edge});
    }
  }
  return out;
}

// CSV dump of a solved meta-game: header of "from->to" edge labels, one row
// per route keyed by its vertex sequence, then the value and both mixes.
inline void write_meta_game_csv(std::ostream& os, const Roadmap& g, const MetaGame& mg) {
  os << "path";
  for (int eidx : mg.path_set.attackable_edges) {
    const Edge& e = g.edges[static_cast<std::size_t>(eidx)];
    os << ',' << e.from << "->" << e.to;
  }
  os << '\n';
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < mg.path_set.paths.size(); ++i) {
    const std::vector<int> vs = mg.path_set.path_vertices(g, i);
    for (std::size_t k = 0; k < vs.size(); ++k) os << (k == 0 ? "" : "-") << vs[k];
    for (double entry : mg.matrix[i]) os << ',' << entry;
    os << '\n';
  }
  os << "value," << mg.value << '\n';
  os << "defender_mix";
  for (double p : mg.defender_mix) os << ',' << p;
  os << '\n';
  os << "attacker_mix";
  for (double p : mg.attacker_mix) os << ',' << p;
  os << '\n';
  os.flags(flags);
  os.precision(precision);
}

}  // namespace secroute
