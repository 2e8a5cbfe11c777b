#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "secroute/error.hpp"
#include "secroute/meta_game.hpp"
#include "secroute/roadmap.hpp"

namespace secroute {

enum class GraphKind { sparse, complete_dag };

inline const char* to_string(GraphKind kind) {
  return kind == GraphKind::sparse ? "sparse" : "complete_dag";
}

struct ExperimentConfig {
  std::vector<int> vertex_counts;
  GraphKind graph_kind = GraphKind::sparse;
  int runs_per_size = 100;
  double degree_lo = 2.0;
  double degree_hi = 3.0;
  double stage_scale = 10.0;
  StageCostMatrix stage_cost{30.0, 30.0, 70.0, 10.0};
  std::uint64_t seed = 0;
  int max_paths = kDefaultPathCap;

  void validate() const {
    if (runs_per_size < 1) throw InvariantViolation("bench: runs_per_size must be >= 1");
    for (int n : vertex_counts) {
      if (n < 3) throw InvariantViolation("bench: vertex counts must be >= 3");
    }
  }
};

// One benchmark row: the meta-game value against the heuristic's worst-case
// route length, with wall-clock solve times.
struct ExperimentRecord {
  int n_vertices = 0;
  int run_index = 0;
  double w_ne = 0.0;
  double l_sea = 0.0;
  double cost_ratio = 0.0;  // w_ne / l_sea
  double time_meta_s = 0.0;
  double time_heuristic_s = 0.0;
  double time_ratio = 0.0;  // time_meta_s / time_heuristic_s
  double p_shortest_path = 0.0;
};

struct ExperimentFailure {
  int n_vertices = 0;
  int run_index = 0;
  std::string reason;
};

struct ExperimentResults {
  std::vector<ExperimentRecord> records;
  std::vector<ExperimentFailure> failures;  // runs skipped (path explosion)
  int regenerations = 0;                    // graphs rebuilt for lack of a route
};

// Runs the full sweep: per size and run, generate a graph, solve the
// meta-game and the heuristic between vertex 0 and vertex n-1, and time both
// solves (graph generation excluded). Path explosions are recorded and
// skipped rather than aborting the sweep. Per-run seeds derive from the
// config seed, so everything except the timing fields is reproducible.
inline ExperimentResults run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  using Clock = std::chrono::steady_clock;
  ExperimentResults out;
  for (int n : cfg.vertex_counts) {
    for (int run = 0; run < cfg.runs_per_size; ++run) {
      Roadmap g;
      bool have_graph = false;
      for (std::uint64_t attempt = 0; attempt < 100 && !have_graph; ++attempt) {
        const std::uint64_t run_seed =
            derive_seed(cfg.seed, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(run) + (attempt << 32));
        g = cfg.graph_kind == GraphKind::sparse
                ? generate_sparse_graph(n, cfg.degree_lo, cfg.degree_hi, cfg.stage_scale,
                                        cfg.stage_cost, run_seed)
                : generate_complete_dag(n, cfg.stage_scale, cfg.stage_cost, run_seed);
        if (g.reaches(0, n - 1)) {
          have_graph = true;
        } else {
          ++out.regenerations;
        }
      }
      if (!have_graph) {
        out.failures.push_back({n, run, "no route from source to sink after 100 graphs"});
        continue;
      }
      try {
        const auto t0 = Clock::now();
        const MetaGame mg = solve_meta_game(g, 0, n - 1, cfg.max_paths);
        const auto t1 = Clock::now();
        const HeuristicResult h = shortest_path_edge_attack(g, 0, n - 1);
        const auto t2 = Clock::now();

        const int path_index = mg.path_set.find_path(h.shortest_path);
        if (path_index < 0) {
          throw SolverFailure("bench: heuristic route missing from the path set");
        }
        ExperimentRecord rec;
        rec.n_vertices = n;
        rec.run_index = run;
        rec.w_ne = mg.value;
        rec.l_sea = h.length_under_attack;
        rec.cost_ratio = rec.w_ne / rec.l_sea;
        if (rec.cost_ratio > 1.0 + 1e-9) {
          throw SolverFailure("bench: meta-game value exceeded the heuristic bound");
        }
        const double min_time = 1e-9;  // clock tick floor keeps ratios finite
        rec.time_meta_s =
            std::max(min_time, std::chrono::duration<double>(t1 - t0).count());
        rec.time_heuristic_s =
            std::max(min_time, std::chrono::duration<double>(t2 - t1).count());
        rec.time_ratio = rec.time_meta_s / rec.time_heuristic_s;
        rec.p_shortest_path = mg.defender_mix[static_cast<std::size_t>(path_index)];
        out.records.push_back(rec);
      } catch (const PathExplosion& e) {
        out.failures.push_back({n, run, e.what()});
      }
    }
  }
  return out;
}

struct SummaryRow {
  int n_vertices = 0;
  int runs = 0;
  double mean_time_ratio = 0.0;
  double mean_cost_ratio = 0.0;
  double mean_p_shortest = 0.0;
};

inline std::vector<SummaryRow> summarize(std::span<const ExperimentRecord> records) {
  std::map<int, SummaryRow> by_size;
  for (const ExperimentRecord& rec : records) {
    SummaryRow& row = by_size[rec.n_vertices];
    row.n_vertices = rec.n_vertices;
    row.runs += 1;
    row.mean_time_ratio += rec.time_ratio;
    row.mean_cost_ratio += rec.cost_ratio;
    row.mean_p_shortest += rec.p_shortest_path;
  }
  std::vector<SummaryRow> out;
  for (auto& [n, row] : by_size) {
    row.mean_time_ratio /= row.runs;
    row.mean_cost_ratio /= row.runs;
    row.mean_p_shortest /= row.runs;
    out.push_back(row);
  }
  return out;
}

namespace detail {

inline void write_config_header(std::ostream& os, const ExperimentConfig& cfg) {
  os << "# kind=" << to_string(cfg.graph_kind) << " runs_per_size=" << cfg.runs_per_size
     << " degree=[" << cfg.degree_lo << ',' << cfg.degree_hi << ']'
     << " stage_scale=" << cfg.stage_scale << " stage_cost=" << cfg.stage_cost.s11 << ','
     << cfg.stage_cost.s12 << ',' << cfg.stage_cost.s21 << ',' << cfg.stage_cost.s22
     << " seed=" << cfg.seed << '\n';
}

}  // namespace detail

inline void write_records_csv(std::ostream& os, const ExperimentConfig& cfg,
                              std::span<const ExperimentRecord> records) {
  detail::write_config_header(os, cfg);
  os << "n,run,W_NE,L_SEA,cost_ratio,time_meta_s,time_heuristic_s,time_ratio,p_shortest_path\n";
  const auto flags = os.flags();
  const auto precision = os.precision(10);
  for (const ExperimentRecord& r : records) {
    os << r.n_vertices << ',' << r.run_index << ',' << r.w_ne << ',' << r.l_sea << ','
       << r.cost_ratio << ',' << r.time_meta_s << ',' << r.time_heuristic_s << ','
       << r.time_ratio << ',' << r.p_shortest_path << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

inline void write_summary_csv(std::ostream& os, const ExperimentConfig& cfg,
                              std::span<const SummaryRow> rows) {
  detail::write_config_header(os, cfg);
  os << "n,mean_time_ratio,mean_cost_ratio,mean_p_shortest_path\n";
  const auto flags = os.flags();
  const auto precision = os.precision(10);
  for (const SummaryRow& r : rows) {
    os << r.n_vertices << ',' << r.mean_time_ratio << ',' << r.mean_cost_ratio << ','
       << r.mean_p_shortest << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace secroute
