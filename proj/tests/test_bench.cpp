#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "secroute/bench.hpp"

using namespace secroute;

namespace {

ExperimentConfig small_config(GraphKind kind) {
  ExperimentConfig cfg;
  cfg.vertex_counts = {4, 5};
  cfg.graph_kind = kind;
  cfg.runs_per_size = 3;
  cfg.seed = 77;
  return cfg;
}

}  // namespace

TEST_CASE("experiment records respect the heuristic bound and carry timings") {
  for (const GraphKind kind : {GraphKind::sparse, GraphKind::complete_dag}) {
    const ExperimentResults res = run_experiment(small_config(kind));
    REQUIRE(res.records.size() == 6);
    CHECK(res.failures.empty());
    for (const ExperimentRecord& rec : res.records) {
      CHECK(rec.cost_ratio <= 1.0 + 1e-9);
      CHECK(rec.cost_ratio == rec.w_ne / rec.l_sea);
      CHECK(rec.time_meta_s > 0.0);
      CHECK(rec.time_heuristic_s > 0.0);
      CHECK(rec.time_ratio == rec.time_meta_s / rec.time_heuristic_s);
      CHECK(rec.p_shortest_path >= 0.0);
      CHECK(rec.p_shortest_path <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("experiments are reproducible apart from timing fields") {
  const ExperimentResults a = run_experiment(small_config(GraphKind::sparse));
  const ExperimentResults b = run_experiment(small_config(GraphKind::sparse));
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].n_vertices == b.records[i].n_vertices);
    CHECK(a.records[i].run_index == b.records[i].run_index);
    CHECK(a.records[i].w_ne == b.records[i].w_ne);
    CHECK(a.records[i].l_sea == b.records[i].l_sea);
    CHECK(a.records[i].cost_ratio == b.records[i].cost_ratio);
    CHECK(a.records[i].p_shortest_path == b.records[i].p_shortest_path);
  }
}

TEST_CASE("path explosions are recorded, not fatal") {
  ExperimentConfig cfg = small_config(GraphKind::complete_dag);
  cfg.vertex_counts = {8};
  cfg.runs_per_size = 2;
  cfg.max_paths = 16;  // 2^6 source-to-sink routes exceed this
  const ExperimentResults res = run_experiment(cfg);
  CHECK(res.records.empty());
  REQUIRE(res.failures.size() == 2);
  CHECK(res.failures[0].n_vertices == 8);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = small_config(GraphKind::sparse);
  cfg.runs_per_size = 0;
  CHECK_THROWS_AS(run_experiment(cfg), InvariantViolation);
  cfg = small_config(GraphKind::sparse);
  cfg.vertex_counts = {2};
  CHECK_THROWS_AS(run_experiment(cfg), InvariantViolation);
}

TEST_CASE("complete graphs leave room below the heuristic") {
  ExperimentConfig cfg = small_config(GraphKind::complete_dag);
  cfg.vertex_counts = {4};
  cfg.runs_per_size = 10;
  const std::vector<SummaryRow> rows = summarize(run_experiment(cfg).records);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].mean_cost_ratio < 1.0);
}

TEST_CASE("summaries take arithmetic means per size") {
  ExperimentRecord a;
  a.n_vertices = 6;
  a.cost_ratio = 0.8;
  a.time_ratio = 10.0;
  a.p_shortest_path = 0.5;
  ExperimentRecord b = a;
  b.cost_ratio = 1.0;
  b.time_ratio = 30.0;
  b.p_shortest_path = 0.7;
  ExperimentRecord c;
  c.n_vertices = 4;
  c.cost_ratio = 0.9;
  c.time_ratio = 5.0;
  c.p_shortest_path = 1.0;

  const std::vector<ExperimentRecord> records{a, b, c};
  const std::vector<SummaryRow> rows = summarize(records);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n_vertices == 4);  // ascending by size
  CHECK(rows[0].runs == 1);
  CHECK(rows[0].mean_cost_ratio == doctest::Approx(0.9));
  CHECK(rows[1].n_vertices == 6);
  CHECK(rows[1].runs == 2);
  CHECK(rows[1].mean_cost_ratio == doctest::Approx(0.9));
  CHECK(rows[1].mean_time_ratio == doctest::Approx(20.0));
  CHECK(rows[1].mean_p_shortest == doctest::Approx(0.6));
}

TEST_CASE("CSV layouts") {
  const ExperimentConfig cfg = small_config(GraphKind::sparse);
  const ExperimentResults res = run_experiment(cfg);
  std::ostringstream records_csv;
  write_records_csv(records_csv, cfg, res.records);
  const std::string text = records_csv.str();
  CHECK(text.find("# kind=sparse") == 0);
  CHECK(text.find("n,run,W_NE,L_SEA,cost_ratio,time_meta_s,time_heuristic_s,time_ratio,"
                  "p_shortest_path\n") != std::string::npos);

  std::ostringstream summary_csv;
  const auto rows = summarize(res.records);
  write_summary_csv(summary_csv, cfg, rows);
  CHECK(summary_csv.str().find("n,mean_time_ratio,mean_cost_ratio,mean_p_shortest_path\n") !=
        std::string::npos);
  // One line per size plus the two header lines.
  int lines = 0;
  for (char ch : summary_csv.str()) lines += ch == '\n';
  CHECK(lines == 2 + static_cast<int>(rows.size()));
}
