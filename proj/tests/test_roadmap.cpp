#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "secroute/roadmap.hpp"
#include "secroute/roadmap_io.hpp"

using namespace secroute;

namespace {

const StageCostMatrix kReference{30.0, 30.0, 70.0, 10.0};

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

Roadmap three_node_roadmap(int stages_direct = 6, int stages_leg = 3) {
  Roadmap g;
  g.directed = true;
  g.vertices = {{0, 0.0, 0.0}, {1, 0.5, 0.5}, {2, 1.0, 0.0}};
  g.edges = {{0, 2, stages_direct, kReference},
             {0, 1, stages_leg, kReference},
             {1, 2, stages_leg, kReference}};
  return g;
}

}  // namespace

TEST_CASE("two-vertex generation yields the single edge") {
  const Roadmap g = generate_sparse_graph(2, 2.0, 3.0, 10.0, kReference, 7);
  REQUIRE(g.vertices.size() == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].from == 0);
  CHECK(g.edges[0].to == 1);
  const double dx = g.vertices[0].x - g.vertices[1].x;
  const double dy = g.vertices[0].y - g.vertices[1].y;
  const double dist = std::sqrt(dx * dx + dy * dy);
  CHECK(g.edges[0].num_stages == std::max(1L, std::lround(10.0 * dist)));
}

TEST_CASE("sparse generation is deterministic per seed") {
  const Roadmap a = generate_sparse_graph(10, 2.0, 3.0, 10.0, kReference, 42);
  const Roadmap b = generate_sparse_graph(10, 2.0, 3.0, 10.0, kReference, 42);
  CHECK(a == b);
  const Roadmap c = generate_sparse_graph(10, 2.0, 3.0, 10.0, kReference, 43);
  CHECK(a != c);
}

TEST_CASE("sparse generation hits the degree window and stays connected") {
  for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
    const Roadmap g = generate_sparse_graph(10, 2.0, 3.0, 10.0, kReference, seed);
    g.validate();
    std::vector<int> degree(10, 0);
    for (const Edge& e : g.edges) {
      CHECK(e.from < e.to);  // oriented low to high, hence acyclic
      CHECK(e.num_stages >= 1);
      ++degree[static_cast<std::size_t>(e.from)];
      ++degree[static_cast<std::size_t>(e.to)];
    }
    double mean = 0.0;
    for (int d : degree) {
      CHECK(d >= 2);
      CHECK(d <= 3);
      mean += d;
    }
    mean /= 10.0;
    CHECK(mean >= 2.0);
    CHECK(mean <= 3.0);
    CHECK(g.reaches(0, 9));
  }
}

TEST_CASE("sparse generation validates its arguments") {
  CHECK_THROWS_AS(generate_sparse_graph(1, 2.0, 3.0, 10.0, kReference, 1), InvariantViolation);
  CHECK_THROWS_AS(generate_sparse_graph(10, 1.0, 3.0, 10.0, kReference, 1), InvariantViolation);
  CHECK_THROWS_AS(generate_sparse_graph(10, 3.0, 2.0, 10.0, kReference, 1), InvariantViolation);
  CHECK_THROWS_AS(generate_sparse_graph(10, 2.0, 10.0, 10.0, kReference, 1), InvariantViolation);
  CHECK_THROWS_AS(generate_sparse_graph(10, 2.0, 3.0, 0.0, kReference, 1), InvariantViolation);
}

TEST_CASE("stage counts rise with distance") {
  const Roadmap g = generate_complete_dag(8, 10.0, kReference, 11);
  for (const Edge& a : g.edges) {
    for (const Edge& b : g.edges) {
      const auto dist = [&](const Edge& e) {
        const Vertex& u = g.vertices[static_cast<std::size_t>(e.from)];
        const Vertex& v = g.vertices[static_cast<std::size_t>(e.to)];
        return std::hypot(u.x - v.x, u.y - v.y);
      };
      if (dist(a) < dist(b)) CHECK(a.num_stages <= b.num_stages);
    }
  }
}

TEST_CASE("complete dag edge counts") {
  CHECK(generate_complete_dag(3, 10.0, kReference, 1).edges.size() == 3);
  CHECK(generate_complete_dag(4, 10.0, kReference, 1).edges.size() == 6);
  CHECK(generate_complete_dag(6, 10.0, kReference, 1).edges.size() == 15);
  const Roadmap g = generate_complete_dag(6, 10.0, kReference, 1);
  g.validate();
  CHECK(g.reaches(0, 5));
}

TEST_CASE("roadmap validation rejects malformed graphs") {
  Roadmap g = three_node_roadmap();
  g.validate();

  Roadmap self_loop = g;
  self_loop.edges[0].to = 0;
  CHECK_THROWS_AS(self_loop.validate(), InvariantViolation);

  Roadmap duplicate = g;
  duplicate.edges.push_back(duplicate.edges[1]);
  CHECK_THROWS_AS(duplicate.validate(), InvariantViolation);

  Roadmap bad_stage = g;
  bad_stage.edges[2].num_stages = 0;
  CHECK_THROWS_AS(bad_stage.validate(), InvariantViolation);

  Roadmap bad_ids = g;
  bad_ids.vertices[1].id = 5;
  CHECK_THROWS_AS(bad_ids.validate(), InvariantViolation);

  Roadmap undirected = g;
  undirected.directed = false;
  Edge reversed = undirected.edges[1];
  std::swap(reversed.from, reversed.to);
  undirected.edges.push_back(reversed);
  CHECK_THROWS_AS(undirected.validate(), InvariantViolation);
}

TEST_CASE("graph files round-trip exactly") {
  const auto path = temp_file("secroute_roundtrip.json");
  const Roadmap g = three_node_roadmap();
  save_roadmap(g, path.string());
  const Roadmap loaded = load_roadmap(path.string());
  CHECK(loaded == g);

  const Roadmap generated = generate_sparse_graph(9, 2.0, 3.0, 10.0, kReference, 5);
  save_roadmap(generated, path.string());
  CHECK(load_roadmap(path.string()) == generated);
  std::filesystem::remove(path);
}

TEST_CASE("graph files are validated on load") {
  const auto path = temp_file("secroute_bad.json");
  const auto write = [&](const std::string& text) {
    std::ofstream out(path);
    out << text;
  };

  write("{ not json");
  CHECK_THROWS_AS(load_roadmap(path.string()), ParseError);

  write(R"({"directed": true, "vertices": [], "edges": [], "extra": 1})");
  CHECK_THROWS_AS(load_roadmap(path.string()), ParseError);

  write(R"({"vertices": [], "edges": []})");
  CHECK_THROWS_AS(load_roadmap(path.string()), ParseError);

  write(R"({"directed": true, "vertices": [{"id": 0, "x": 0.0}], "edges": []})");
  CHECK_THROWS_AS(load_roadmap(path.string()), ParseError);

  write(R"({"directed": true,
            "vertices": [{"id": 0, "x": 0.0, "y": 0.0}, {"id": 1, "x": 1.0, "y": 0.0}],
            "edges": [{"from": 0, "to": 1, "num_stages": 0,
                       "s11": 30.0, "s12": 30.0, "s21": 70.0, "s22": 10.0}]})");
  CHECK_THROWS_AS(load_roadmap(path.string()), InvariantViolation);

  write(R"({"directed": true,
            "vertices": [{"id": 0, "x": 0.0, "y": 0.0}, {"id": 1, "x": 1.0, "y": 0.0}],
            "edges": [{"from": 0, "to": 1, "num_stages": 2,
                       "s11": 30.0, "s12": 30.0, "s21": 70.0, "s22": 10.0},
                      {"from": 0, "to": 1, "num_stages": 3,
                       "s11": 30.0, "s12": 30.0, "s21": 70.0, "s22": 10.0}]})");
  CHECK_THROWS_AS(load_roadmap(path.string()), InvariantViolation);

  CHECK_THROWS_AS(load_roadmap("/nonexistent/secroute.json"), ParseError);
  std::filesystem::remove(path);
}
