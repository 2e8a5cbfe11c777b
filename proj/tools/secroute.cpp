// Command-line front end: every library capability behind one reproducible,
// scriptable binary. Exit codes: 0 success, 1 domain errors, 2 usage errors.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secroute/secroute.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CostFlags {
  std::vector<double> entries;  // --s row-major s11,s12,s21,s22
  double r1 = std::numeric_limits<double>::quiet_NaN();
  double r2 = std::numeric_limits<double>::quiet_NaN();
  double s11 = std::numeric_limits<double>::quiet_NaN();

  bool has_entries() const { return !entries.empty(); }
  bool has_ratios() const { return !std::isnan(r1) || !std::isnan(r2) || !std::isnan(s11); }

  // Row-major and ratio forms are mutually exclusive; neither given falls
  // back to the reference matrix [[30,30],[70,10]].
  secroute::StageCostMatrix resolve() const {
    if (has_entries() && has_ratios()) {
      throw UsageError("give the stage cost either as --s s11,s12,s21,s22 or as --r1/--r2/--s11, not both");
    }
    if (has_entries()) {
      if (entries.size() != 4) {
        throw UsageError("--s expects exactly four comma-separated entries s11,s12,s21,s22");
      }
      return secroute::StageCostMatrix{entries[0], entries[1], entries[2], entries[3]};
    }
    if (has_ratios()) {
      const double v11 = std::isnan(s11) ? 30.0 : s11;
      const double v1 = std::isnan(r1) ? 7.0 / 3.0 : r1;
      const double v2 = std::isnan(r2) ? 1.0 / 3.0 : r2;
      return secroute::StageCostMatrix::from_ratios(v11, v1, v2);
    }
    return secroute::StageCostMatrix{30.0, 30.0, 70.0, 10.0};
  }
};

void add_cost_flags(CLI::App* cmd, CostFlags& flags) {
  cmd->add_option("--s", flags.entries, "stage cost matrix, row-major s11,s12,s21,s22")
      ->delimiter(',');
  cmd->add_option("--r1", flags.r1, "security-loss ratio s21/s11 (with --s11)");
  cmd->add_option("--r2", flags.r2, "mobility ratio s22/s11 (with --s11)");
  cmd->add_option("--s11", flags.s11, "defense cost for the ratio form");
}

std::string cost_to_string(const secroute::StageCostMatrix& s) {
  std::ostringstream os;
  os << '[' << s.s11 << ',' << s.s12 << ';' << s.s21 << ',' << s.s22 << ']';
  return os.str();
}

std::string edge_label(const secroute::Roadmap& g, int eidx) {
  const secroute::Edge& e = g.edges[static_cast<std::size_t>(eidx)];
  return std::to_string(e.from) + "->" + std::to_string(e.to);
}

std::string vertex_sequence(const secroute::PathSet& ps, const secroute::Roadmap& g,
                            std::size_t index) {
  std::string out;
  for (int v : ps.path_vertices(g, index)) {
    if (!out.empty()) out += '-';
    out += std::to_string(v);
  }
  return out;
}

// Streams the machine output to --out when given; "-" or "" means stdout.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") return;
  std::ofstream out(out_path);
  if (!out) throw secroute::ParseError("cannot open " + out_path + " for writing");
  out << text;
  if (!out) throw secroute::ParseError("write to " + out_path + " failed");
}

struct CommonFlags {
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
};

void add_io_flags(CLI::App* cmd, CommonFlags& flags, bool with_seed = true) {
  cmd->add_option("--out", flags.out, "write machine-readable output to this file");
  cmd->add_option("--format", flags.format, "machine output format")
      ->check(CLI::IsMember({"csv", "json"}));
  if (with_seed) cmd->add_option("--seed", flags.seed, "seed for all randomness");
}

int run_edge_game(const CostFlags& cost, int stages, const CommonFlags& io) {
  const secroute::StageCostMatrix s = cost.resolve();
  std::cout << "config: subcommand=edge-game stage_cost=" << cost_to_string(s)
            << " stages=" << stages << " out=" << (io.out.empty() ? "-" : io.out)
            << " format=" << io.format << '\n';
  const secroute::EdgeGameSolution sol = secroute::solve_edge_game(s, stages);
  std::cout << std::fixed << std::setprecision(6);
  std::cout << "edge-game value V_0 = " << sol.value() << '\n';
  std::cout << "  k       V[k-1]    defend_p    attack_p\n";
  for (int k = 1; k <= stages; ++k) {
    std::cout << std::setw(3) << k << ' ' << std::setw(12) << sol.values[static_cast<std::size_t>(k) - 1]
              << ' ' << std::setw(11) << sol.defender_policies[static_cast<std::size_t>(k) - 1].p_active
              << ' ' << std::setw(11) << sol.attacker_policies[static_cast<std::size_t>(k) - 1].p_active
              << '\n';
  }
  if (io.format == "json") {
    json j;
    j["value"] = sol.value();
    j["values"] = sol.values;
    j["defender_active"] = json::array();
    j["attacker_active"] = json::array();
    for (const auto& p : sol.defender_policies) j["defender_active"].push_back(p.p_active);
    for (const auto& p : sol.attacker_policies) j["attacker_active"].push_back(p.p_active);
    emit(io.out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "k,value,defend_p,attack_p\n" << std::setprecision(12);
    for (int k = 1; k <= stages; ++k) {
      os << k << ',' << sol.values[static_cast<std::size_t>(k) - 1] << ','
         << sol.defender_policies[static_cast<std::size_t>(k) - 1].p_active << ','
         << sol.attacker_policies[static_cast<std::size_t>(k) - 1].p_active << '\n';
    }
    emit(io.out, os.str());
  }
  return 0;
}

int run_analytic(double r1, double r2, int stages, const CommonFlags& io) {
  std::cout << "config: subcommand=analytic r1=" << r1 << " r2=" << r2 << " stages=" << stages
            << " out=" << (io.out.empty() ? "-" : io.out) << " format=" << io.format << '\n';
  const secroute::StageCostMatrix s = secroute::StageCostMatrix::from_ratios(1.0, r1, r2);
  const secroute::EdgeGameSolution sol = secroute::solve_edge_game(s, stages);
  const double err = secroute::approximation_error(r1, r2, stages);
  std::cout << std::fixed << std::setprecision(6);
  std::cout << "  k     analytic       approx    recursive\n";
  std::ostringstream os;
  os << "k,analytic,approx,recursive\n" << std::setprecision(12);
  json rows = json::array();
  for (int k = 1; k <= stages; ++k) {
    const double analytic = secroute::analytic_value(r1, r2, stages, k);
    const double approx = secroute::approx_value(r1, r2, stages, k);
    const double recursive = sol.values[static_cast<std::size_t>(k) - 1];
    std::cout << std::setw(3) << k << ' ' << std::setw(12) << analytic << ' ' << std::setw(12)
              << approx << ' ' << std::setw(12) << recursive << '\n';
    os << k << ',' << analytic << ',' << approx << ',' << recursive << '\n';
    rows.push_back({{"k", k}, {"analytic", analytic}, {"approx", approx}, {"recursive", recursive}});
  }
  std::cout << "approximation error vs recursion at k=1: " << err << " %\n";
  os << "approximation_error_pct," << err << '\n';
  if (io.format == "json") {
    emit(io.out, json{{"rows", rows}, {"approximation_error_pct", err}}.dump(2) + "\n");
  } else {
    emit(io.out, os.str());
  }
  return 0;
}

int run_generate(const std::string& kind, const std::vector<int>& sizes, double degree_lo,
                 double degree_hi, double stage_scale, const CostFlags& cost,
                 const CommonFlags& io) {
  if (sizes.size() != 1) throw UsageError("generate expects exactly one vertex count in --sizes");
  if (io.out.empty()) throw UsageError("generate requires --out for the graph file");
  const secroute::StageCostMatrix s = cost.resolve();
  std::cout << "config: subcommand=generate kind=" << kind << " n=" << sizes[0]
            << " degree=[" << degree_lo << ',' << degree_hi << "] stage_scale=" << stage_scale
            << " stage_cost=" << cost_to_string(s) << " seed=" << io.seed << " out=" << io.out
            << '\n';
  const secroute::Roadmap g =
      kind == "sparse"
          ? secroute::generate_sparse_graph(sizes[0], degree_lo, degree_hi, stage_scale, s, io.seed)
          : secroute::generate_complete_dag(sizes[0], stage_scale, s, io.seed);
  secroute::save_roadmap(g, io.out);
  std::cout << "wrote " << io.out << ": " << g.vertices.size() << " vertices, " << g.edges.size()
            << " edges\n";
  return 0;
}

int run_meta_game(const std::string& graph_path, int source, std::optional<int> target,
                  const CommonFlags& io) {
  const secroute::Roadmap g = secroute::load_roadmap(graph_path);
  const int t = target.value_or(g.num_vertices() - 1);
  std::cout << "config: subcommand=meta-game graph=" << graph_path << " source=" << source
            << " target=" << t << " out=" << (io.out.empty() ? "-" : io.out)
            << " format=" << io.format << '\n';
  const secroute::MetaGame mg = secroute::solve_meta_game(g, source, t);
  std::cout << std::fixed << std::setprecision(6);
  std::cout << "routes: " << mg.path_set.paths.size()
            << ", attackable edges: " << mg.path_set.attackable_edges.size() << '\n';
  std::cout << std::setw(16) << "path\\edge";
  for (int eidx : mg.path_set.attackable_edges) std::cout << std::setw(12) << edge_label(g, eidx);
  std::cout << '\n';
  for (std::size_t i = 0; i < mg.path_set.paths.size(); ++i) {
    std::cout << std::setw(16) << vertex_sequence(mg.path_set, g, i);
    for (double v : mg.matrix[i]) std::cout << std::setw(12) << v;
    std::cout << "   p=" << mg.defender_mix[i] << '\n';
  }
  std::cout << "attack mix:     ";
  for (double p : mg.attacker_mix) std::cout << std::setw(12) << p;
  std::cout << '\n';
  std::cout << "meta-game value W_NE = " << mg.value << " (duality gap " << std::scientific
            << std::setprecision(2) << mg.duality_gap << ")\n";
  std::cout.unsetf(std::ios_base::floatfield);
  if (io.format == "json") {
    json j;
    j["value"] = mg.value;
    j["duality_gap"] = mg.duality_gap;
    j["paths"] = json::array();
    for (std::size_t i = 0; i < mg.path_set.paths.size(); ++i) {
      j["paths"].push_back(mg.path_set.path_vertices(g, i));
    }
    j["edges"] = json::array();
    for (int eidx : mg.path_set.attackable_edges) j["edges"].push_back(edge_label(g, eidx));
    j["matrix"] = mg.matrix;
    j["defender_mix"] = mg.defender_mix;
    j["attacker_mix"] = mg.attacker_mix;
    emit(io.out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    secroute::write_meta_game_csv(os, g, mg);
    emit(io.out, os.str());
  }
  return 0;
}

int run_heuristic(const std::string& graph_path, int source, std::optional<int> target,
                  const CommonFlags& io) {
  const secroute::Roadmap g = secroute::load_roadmap(graph_path);
  const int t = target.value_or(g.num_vertices() - 1);
  std::cout << "config: subcommand=heuristic graph=" << graph_path << " source=" << source
            << " target=" << t << " out=" << (io.out.empty() ? "-" : io.out)
            << " format=" << io.format << '\n';
  const secroute::HeuristicResult h = secroute::shortest_path_edge_attack(g, source, t);
  std::string route = std::to_string(source);
  int at = source;
  for (int eidx : h.shortest_path) {
    const secroute::Edge& e = g.edges[static_cast<std::size_t>(eidx)];
    at = e.from == at ? e.to : e.from;
    route += '-' + std::to_string(at);
  }
  std::cout << std::fixed << std::setprecision(6);
  std::cout << "shortest route under attacked weights: " << route << '\n';
  std::cout << "worst attacked edge: " << edge_label(g, h.worst_edge) << '\n';
  std::cout << "L_SEA = " << h.length_under_attack << '\n';
  std::cout.unsetf(std::ios_base::floatfield);
  if (io.format == "json") {
    json j{{"path", route},
           {"edge_indices", h.shortest_path},
           {"worst_edge", edge_label(g, h.worst_edge)},
           {"l_sea", h.length_under_attack}};
    emit(io.out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << std::setprecision(12) << "path," << route << "\nworst_edge," << edge_label(g, h.worst_edge)
       << "\nl_sea," << h.length_under_attack << '\n';
    emit(io.out, os.str());
  }
  return 0;
}

secroute::Roadmap reference_three_node_roadmap(const secroute::StageCostMatrix& s) {
  secroute::Roadmap g;
  g.vertices = {{0, 0.0, 0.0}, {1, 0.5, 0.5}, {2, 1.0, 0.0}};
  g.edges = {{0, 2, 6, s}, {0, 1, 3, s}, {1, 2, 3, s}};
  return g;
}

int run_sweep_costs(const std::string& graph_path, int source, std::optional<int> target,
                    std::vector<double> r1_grid, std::vector<double> r2_grid, double s11,
                    const CommonFlags& io) {
  if (r1_grid.empty()) r1_grid = {1.0, 1.5, 2.0, 7.0 / 3.0, 3.0, 4.0};
  if (r2_grid.empty()) r2_grid = {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8};
  secroute::Roadmap g = graph_path.empty()
                            ? reference_three_node_roadmap({30.0, 30.0, 70.0, 10.0})
                            : secroute::load_roadmap(graph_path);
  const int t = target.value_or(g.num_vertices() - 1);
  std::cout << "config: subcommand=sweep-costs graph="
            << (graph_path.empty() ? "<builtin-3-node>" : graph_path) << " source=" << source
            << " target=" << t << " s11=" << s11 << " r1_grid=" << r1_grid.size()
            << " r2_grid=" << r2_grid.size() << " out=" << (io.out.empty() ? "-" : io.out)
            << " format=" << io.format << '\n';
  const auto points = secroute::sensitivity_sweep_costs(g, source, t, r1_grid, r2_grid, s11);
  std::cout << std::fixed << std::setprecision(6);
  std::cout << "      r1        r2    p_shortest_path  p_shortest_edge\n";
  std::ostringstream os;
  os << "r1,r2,p_shortest_path,p_shortest_edge\n" << std::setprecision(12);
  json rows = json::array();
  for (const auto& p : points) {
    std::cout << std::setw(8) << p.r1 << ' ' << std::setw(9) << p.r2 << ' ' << std::setw(18)
              << p.p_shortest_path << ' ' << std::setw(16) << p.p_shortest_edge << '\n';
    os << p.r1 << ',' << p.r2 << ',' << p.p_shortest_path << ',' << p.p_shortest_edge << '\n';
    rows.push_back({{"r1", p.r1},
                    {"r2", p.r2},
                    {"p_shortest_path", p.p_shortest_path},
                    {"p_shortest_edge", p.p_shortest_edge}});
  }
  std::cout.unsetf(std::ios_base::floatfield);
  if (io.format == "json") {
    emit(io.out, rows.dump(2) + "\n");
  } else {
    emit(io.out, os.str());
  }
  return 0;
}

// --stages for sweep-stages carries both grids: "D1,D2,...:A1,A2,...".
std::pair<std::vector<int>, std::vector<int>> parse_stage_grids(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("sweep-stages --stages expects \"directs:alts\", e.g. 6:3,4,5,6");
  }
  const auto parse_list = [](const std::string& part) {
    std::vector<int> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const int value = std::stoi(item, &used);
        if (used != item.size() || value < 1) throw std::invalid_argument(item);
        out.push_back(value);
      } catch (const std::exception&) {
        throw UsageError("sweep-stages --stages: bad stage count \"" + item + "\"");
      }
    }
    if (out.empty()) throw UsageError("sweep-stages --stages: empty grid");
    return out;
  };
  return {parse_list(text.substr(0, colon)), parse_list(text.substr(colon + 1))};
}

int run_sweep_stages(const std::string& graph_path, int source, std::optional<int> target,
                     const std::string& stages_spec, const CostFlags& cost,
                     const CommonFlags& io) {
  const auto [direct_grid, alt_grid] = parse_stage_grids(stages_spec);
  const secroute::StageCostMatrix s = cost.resolve();
  const secroute::Roadmap g = graph_path.empty() ? reference_three_node_roadmap(s)
                                                 : secroute::load_roadmap(graph_path);
  const int t = target.value_or(g.num_vertices() - 1);
  std::cout << "config: subcommand=sweep-stages graph="
            << (graph_path.empty() ? "<builtin-3-node>" : graph_path) << " source=" << source
            << " target=" << t << " stage_cost=" << cost_to_string(s) << " stages=" << stages_spec
            << " out=" << (io.out.empty() ? "-" : io.out) << " format=" << io.format << '\n';
  const auto points = secroute::sensitivity_sweep_stages(g, source, t, s, direct_grid, alt_grid);
  std::cout << std::fixed << std::setprecision(6);
  std::cout << " direct  alt   p_shortest_path  p_shortest_edge\n";
  std::ostringstream os;
  os << "stages_direct,stages_alt,p_shortest_path,p_shortest_edge\n" << std::setprecision(12);
  json rows = json::array();
  for (const auto& p : points) {
    std::cout << std::setw(7) << p.stages_direct << ' ' << std::setw(4) << p.stages_alt << ' '
              << std::setw(18) << p.p_shortest_path << ' ' << std::setw(16) << p.p_shortest_edge
              << '\n';
    os << p.stages_direct << ',' << p.stages_alt << ',' << p.p_shortest_path << ','
       << p.p_shortest_edge << '\n';
    rows.push_back({{"stages_direct", p.stages_direct},
                    {"stages_alt", p.stages_alt},
                    {"p_shortest_path", p.p_shortest_path},
                    {"p_shortest_edge", p.p_shortest_edge}});
  }
  std::cout.unsetf(std::ios_base::floatfield);
  if (io.format == "json") {
    emit(io.out, rows.dump(2) + "\n");
  } else {
    emit(io.out, os.str());
  }
  return 0;
}

int run_bench(const std::string& kind, const std::vector<int>& sizes, int runs, double degree_lo,
              double degree_hi, double stage_scale, const CostFlags& cost, const CommonFlags& io) {
  secroute::ExperimentConfig cfg;
  cfg.vertex_counts = sizes.empty() ? std::vector<int>{4, 6, 8, 10, 12, 14} : sizes;
  cfg.graph_kind = kind == "sparse" ? secroute::GraphKind::sparse
                                    : secroute::GraphKind::complete_dag;
  cfg.runs_per_size = runs;
  cfg.degree_lo = degree_lo;
  cfg.degree_hi = degree_hi;
  cfg.stage_scale = stage_scale;
  cfg.stage_cost = cost.resolve();
  cfg.seed = io.seed;
  std::cout << "config: subcommand=bench kind=" << secroute::to_string(cfg.graph_kind)
            << " sizes=";
  for (std::size_t i = 0; i < cfg.vertex_counts.size(); ++i) {
    std::cout << (i ? "," : "") << cfg.vertex_counts[i];
  }
  std::cout << " runs=" << cfg.runs_per_size << " degree=[" << cfg.degree_lo << ','
            << cfg.degree_hi << "] stage_scale=" << cfg.stage_scale
            << " stage_cost=" << cost_to_string(cfg.stage_cost) << " seed=" << cfg.seed
            << " out=" << (io.out.empty() ? "-" : io.out) << " format=" << io.format << '\n';
  const secroute::ExperimentResults res = secroute::run_experiment(cfg);
  const std::vector<secroute::SummaryRow> rows = secroute::summarize(res.records);
  std::cout << std::fixed << std::setprecision(4);
  std::cout << "   n   runs  mean_time_ratio  mean_cost_ratio  mean_p_shortest\n";
  for (const auto& row : rows) {
    std::cout << std::setw(4) << row.n_vertices << ' ' << std::setw(6) << row.runs << ' '
              << std::setw(16) << row.mean_time_ratio << ' ' << std::setw(16)
              << row.mean_cost_ratio << ' ' << std::setw(16) << row.mean_p_shortest << '\n';
  }
  std::cout.unsetf(std::ios_base::floatfield);
  for (const auto& failure : res.failures) {
    std::cout << "skipped n=" << failure.n_vertices << " run=" << failure.run_index << ": "
              << failure.reason << '\n';
  }
  if (!io.out.empty() && io.out != "-") {
    if (io.format == "json") {
      json j;
      j["records"] = json::array();
      for (const auto& r : res.records) {
        j["records"].push_back({{"n", r.n_vertices},
                                {"run", r.run_index},
                                {"W_NE", r.w_ne},
                                {"L_SEA", r.l_sea},
                                {"cost_ratio", r.cost_ratio},
                                {"time_meta_s", r.time_meta_s},
                                {"time_heuristic_s", r.time_heuristic_s},
                                {"time_ratio", r.time_ratio},
                                {"p_shortest_path", r.p_shortest_path}});
      }
      j["summary"] = json::array();
      for (const auto& row : rows) {
        j["summary"].push_back({{"n", row.n_vertices},
                                {"mean_time_ratio", row.mean_time_ratio},
                                {"mean_cost_ratio", row.mean_cost_ratio},
                                {"mean_p_shortest_path", row.mean_p_shortest}});
      }
      emit(io.out, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      secroute::write_records_csv(os, cfg, res.records);
      emit(io.out, os.str());
      const auto dot = io.out.rfind('.');
      const std::string summary_path = (dot == std::string::npos ? io.out : io.out.substr(0, dot)) +
                                       "_summary" +
                                       (dot == std::string::npos ? "" : io.out.substr(dot));
      std::ostringstream sos;
      secroute::write_summary_csv(sos, cfg, rows);
      emit(summary_path, sos.str());
      std::cout << "wrote " << io.out << " and " << summary_path << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secure route planning via per-edge stopping games and a route-vs-edge-attack matrix game"};
  app.require_subcommand(1);

  // edge-game
  auto* edge_cmd = app.add_subcommand("edge-game", "solve one edge-game and print values and policies");
  CostFlags edge_cost;
  int edge_stages = 1;
  CommonFlags edge_io;
  add_cost_flags(edge_cmd, edge_cost);
  edge_cmd->add_option("--stages", edge_stages, "number of stages on the edge")
      ->required()
      ->check(CLI::PositiveNumber);
  add_io_flags(edge_cmd, edge_io, false);

  // analytic
  auto* analytic_cmd =
      app.add_subcommand("analytic", "continuum / approximate value profile with defense cost one");
  double an_r1 = 2.0;
  double an_r2 = 0.0;
  int an_stages = 1;
  CommonFlags an_io;
  analytic_cmd->add_option("--r1", an_r1, "security-loss ratio")->required();
  analytic_cmd->add_option("--r2", an_r2, "mobility ratio")->required();
  analytic_cmd->add_option("--stages", an_stages, "number of stages")
      ->required()
      ->check(CLI::PositiveNumber);
  add_io_flags(analytic_cmd, an_io, false);

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "generate a random roadmap and write it as JSON");
  std::string gen_kind = "sparse";
  std::vector<int> gen_sizes;
  double gen_lo = 2.0, gen_hi = 3.0, gen_scale = 10.0;
  CostFlags gen_cost;
  CommonFlags gen_io;
  gen_cmd->add_option("--kind", gen_kind, "graph family")
      ->check(CLI::IsMember({"sparse", "complete_dag"}));
  gen_cmd->add_option("--sizes", gen_sizes, "vertex count")->delimiter(',')->required();
  gen_cmd->add_option("--degree-lo", gen_lo, "sparse: lower degree bound");
  gen_cmd->add_option("--degree-hi", gen_hi, "sparse: upper degree bound");
  gen_cmd->add_option("--stage-scale", gen_scale, "stages per unit Euclidean distance");
  add_cost_flags(gen_cmd, gen_cost);
  add_io_flags(gen_cmd, gen_io);

  // meta-game
  auto* meta_cmd = app.add_subcommand("meta-game", "solve the route-vs-edge-attack game on a graph");
  std::string meta_graph;
  int meta_source = 0;
  std::optional<int> meta_target;
  CommonFlags meta_io;
  meta_cmd->add_option("--graph", meta_graph, "roadmap JSON file")->required();
  meta_cmd->add_option("--source", meta_source, "source vertex id");
  meta_cmd->add_option("--target", meta_target, "target vertex id (default: last)");
  add_io_flags(meta_cmd, meta_io, false);

  // heuristic
  auto* heur_cmd = app.add_subcommand("heuristic", "shortest route under attacked edge weights");
  std::string heur_graph;
  int heur_source = 0;
  std::optional<int> heur_target;
  CommonFlags heur_io;
  heur_cmd->add_option("--graph", heur_graph, "roadmap JSON file")->required();
  heur_cmd->add_option("--source", heur_source, "source vertex id");
  heur_cmd->add_option("--target", heur_target, "target vertex id (default: last)");
  add_io_flags(heur_cmd, heur_io, false);

  // sweep-costs
  auto* swc_cmd = app.add_subcommand("sweep-costs", "defender/attacker sensitivity over cost ratios");
  std::string swc_graph;
  int swc_source = 0;
  std::optional<int> swc_target;
  std::vector<double> swc_r1, swc_r2;
  double swc_s11 = 30.0;
  CommonFlags swc_io;
  swc_cmd->add_option("--graph", swc_graph, "roadmap JSON file (default: builtin 3-node network)");
  swc_cmd->add_option("--source", swc_source, "source vertex id");
  swc_cmd->add_option("--target", swc_target, "target vertex id (default: last)");
  swc_cmd->add_option("--r1", swc_r1, "comma-separated r1 grid")->delimiter(',');
  swc_cmd->add_option("--r2", swc_r2, "comma-separated r2 grid")->delimiter(',');
  swc_cmd->add_option("--s11", swc_s11, "defense cost");
  add_io_flags(swc_cmd, swc_io, false);

  // sweep-stages
  auto* sws_cmd =
      app.add_subcommand("sweep-stages", "sensitivity over stage counts on a 3-node topology");
  std::string sws_graph;
  int sws_source = 0;
  std::optional<int> sws_target;
  std::string sws_stages = "6:3,4,5,6,7,8";
  CostFlags sws_cost;
  CommonFlags sws_io;
  sws_cmd->add_option("--graph", sws_graph, "roadmap JSON file (default: builtin 3-node network)");
  sws_cmd->add_option("--source", sws_source, "source vertex id");
  sws_cmd->add_option("--target", sws_target, "target vertex id (default: last)");
  sws_cmd->add_option("--stages", sws_stages, "grids as directs:alts, e.g. 6:3,4,5,6");
  add_cost_flags(sws_cmd, sws_cost);
  add_io_flags(sws_cmd, sws_io, false);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "meta-game vs heuristic sweep over random graphs");
  std::string bench_kind = "sparse";
  std::vector<int> bench_sizes;
  int bench_runs = 100;
  double bench_lo = 2.0, bench_hi = 3.0, bench_scale = 10.0;
  CostFlags bench_cost;
  CommonFlags bench_io;
  bench_cmd->add_option("--kind", bench_kind, "graph family")
      ->check(CLI::IsMember({"sparse", "complete_dag"}));
  bench_cmd->add_option("--sizes", bench_sizes, "comma-separated vertex counts")->delimiter(',');
  bench_cmd->add_option("--runs", bench_runs, "runs per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--degree-lo", bench_lo, "sparse: lower degree bound");
  bench_cmd->add_option("--degree-hi", bench_hi, "sparse: upper degree bound");
  bench_cmd->add_option("--stage-scale", bench_scale, "stages per unit Euclidean distance");
  add_cost_flags(bench_cmd, bench_cost);
  add_io_flags(bench_cmd, bench_io);

  try {
    app.parse(argc, argv);
    if (edge_cmd->parsed()) return run_edge_game(edge_cost, edge_stages, edge_io);
    if (analytic_cmd->parsed()) return run_analytic(an_r1, an_r2, an_stages, an_io);
    if (gen_cmd->parsed()) {
      return run_generate(gen_kind, gen_sizes, gen_lo, gen_hi, gen_scale, gen_cost, gen_io);
    }
    if (meta_cmd->parsed()) return run_meta_game(meta_graph, meta_source, meta_target, meta_io);
    if (heur_cmd->parsed()) return run_heuristic(heur_graph, heur_source, heur_target, heur_io);
    if (swc_cmd->parsed()) {
      return run_sweep_costs(swc_graph, swc_source, swc_target, swc_r1, swc_r2, swc_s11, swc_io);
    }
    if (sws_cmd->parsed()) {
      return run_sweep_stages(sws_graph, sws_source, sws_target, sws_stages, sws_cost, sws_io);
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_kind, bench_sizes, bench_runs, bench_lo, bench_hi, bench_scale,
                       bench_cost, bench_io);
    }
    std::cerr << app.help();
    return 2;
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    for (const CLI::App* sub : app.get_subcommands()) std::cerr << sub->help();
    return 2;
  } catch (const secroute::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
