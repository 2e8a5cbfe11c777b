#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "secroute/error.hpp"
#include "secroute/roadmap.hpp"

namespace secroute {

namespace detail {

inline void reject_unknown_fields(const nlohmann::json& obj, const char* where,
                                  std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (item.key() == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError(std::string(where) + ": unknown field \"" + item.key() + "\"");
    }
  }
}

template <typename T>
T require_field(const nlohmann::json& obj, const char* where, const char* name) {
  if (!obj.contains(name)) {
    throw ParseError(std::string(where) + ": missing field \"" + name + "\"");
  }
  try {
    return obj.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(where) + ": field \"" + name + "\": " + e.what());
  }
}

}  // namespace detail

inline nlohmann::json roadmap_to_json(const Roadmap& g) {
  nlohmann::json j;
  j["directed"] = g.directed;
  j["vertices"] = nlohmann::json::array();
  for (const Vertex& v : g.vertices) {
    j["vertices"].push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}});
  }
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges) {
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"num_stages", e.num_stages},
                          {"s11", e.stage_cost.s11},
                          {"s12", e.stage_cost.s12},
                          {"s21", e.stage_cost.s21},
                          {"s22", e.stage_cost.s22}});
  }
  return j;
}

inline Roadmap roadmap_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("roadmap: top level must be an object");
  detail::reject_unknown_fields(j, "roadmap", {"directed", "vertices", "edges"});
  Roadmap g;
  g.directed = detail::require_field<bool>(j, "roadmap", "directed");
  if (!j.contains("vertices")) throw ParseError("roadmap: missing field \"vertices\"");
  if (!j.contains("edges")) throw ParseError("roadmap: missing field \"edges\"");
  const nlohmann::json& vs = j.at("vertices");
  if (!vs.is_array()) throw ParseError("roadmap: \"vertices\" must be an array");
  int index = 0;
  for (const nlohmann::json& jv : vs) {
    const std::string where = "vertices[" + std::to_string(index++) + "]";
    if (!jv.is_object()) throw ParseError(where + ": must be an object");
    detail::reject_unknown_fields(jv, where.c_str(), {"id", "x", "y"});
    Vertex v;
    v.id = detail::require_field<int>(jv, where.c_str(), "id");
    v.x = detail::require_field<double>(jv, where.c_str(), "x");
    v.y = detail::require_field<double>(jv, where.c_str(), "y");
    g.vertices.push_back(v);
  }
  const nlohmann::json& es = j.at("edges");
  if (!es.is_array()) throw ParseError("roadmap: \"edges\" must be an array");
  index = 0;
  for (const nlohmann::json& je : es) {
    const std::string where = "edges[" + std::to_string(index++) + "]";
    if (!je.is_object()) throw ParseError(where + ": must be an object");
    detail::reject_unknown_fields(je, where.c_str(),
                                  {"from", "to", "num_stages", "s11", "s12", "s21", "s22"});
    Edge e;
    e.from = detail::require_field<int>(je, where.c_str(), "from");
    e.to = detail::require_field<int>(je, where.c_str(), "to");
    e.num_stages = detail::require_field<int>(je, where.c_str(), "num_stages");
    e.stage_cost.s11 = detail::require_field<double>(je, where.c_str(), "s11");
    e.stage_cost.s12 = detail::require_field<double>(je, where.c_str(), "s12");
    e.stage_cost.s21 = detail::require_field<double>(je, where.c_str(), "s21");
    e.stage_cost.s22 = detail::require_field<double>(je, where.c_str(), "s22");
    g.edges.push_back(e);
  }
  g.validate();
  return g;
}

inline void save_roadmap(const Roadmap& g, const std::string& path) {
  g.validate();
  std::ofstream out(path);
  if (!out) throw ParseError("save_roadmap: cannot open " + path + " for writing");
  out << roadmap_to_json(g).dump(2) << '\n';
  if (!out) throw ParseError("save_roadmap: write to " + path + " failed");
}

inline Roadmap load_roadmap(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_roadmap: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("load_roadmap: " + path + ": " + e.what());
  }
  return roadmap_from_json(j);
}

}  // namespace secroute
