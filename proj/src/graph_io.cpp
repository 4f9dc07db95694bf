#include "magspec/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "magspec/error.hpp"

namespace magspec {

namespace {

template <typename T>
T field(const nlohmann::json& obj, const char* key, T fallback, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number())
    throw Error(Errc::ParseError, std::string(where) + " field '" + key + "' is not a number");
  return it->get<T>();
}

VertexId vertex_field(const nlohmann::json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw Error(Errc::ParseError, std::string(where) + " needs integer field '" + key + "'");
  return it->get<VertexId>();
}

}  // namespace

RawGraph raw_graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw Error(Errc::ParseError, "graph JSON needs a 'vertices' array");
  RawGraph raw;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object()) throw Error(Errc::ParseError, "vertex entry is not an object");
    raw.vertices.push_back({vertex_field(v, "id", "vertex"), field(v, "omega", 1.0, "vertex")});
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw Error(Errc::ParseError, "'edges' is not an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_object()) throw Error(Errc::ParseError, "edge entry is not an object");
      raw.edges.push_back({vertex_field(e, "u", "edge"), vertex_field(e, "v", "edge"),
                           field(e, "c", 1.0, "edge"), field(e, "alpha", 0.0, "edge")});
    }
  }
  return raw;
}

WeightedGraph graph_from_json(const nlohmann::json& j) { return build_graph(raw_graph_from_json(j)); }

nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json verts = nlohmann::json::array();
  for (int i = 0; i < g.num_vertices(); ++i)
    verts.push_back({{"id", g.id(i)}, {"omega", g.omega(i)}});
  nlohmann::json edges = nlohmann::json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    edges.push_back({{"u", g.id(ed.lo)}, {"v", g.id(ed.hi)}, {"c", ed.c}, {"alpha", g.alpha(e, ed.lo)}});
  }
  return {{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
}

WeightedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, path.string() + ": " + ex.what());
  }
  return graph_from_json(j);
}

nlohmann::json covering_to_json(const GoodCovering& cover) {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& sub : cover.subgraphs) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : sub.edges) edges.push_back({u, v});
    subs.push_back({{"vertices", sub.vertices}, {"edges", std::move(edges)}});
  }
  return {{"declared_degree", cover.declared_degree}, {"provenance", cover.provenance}, {"subgraphs", std::move(subs)}};
}

GoodCovering covering_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("subgraphs") || !j["subgraphs"].is_array())
    throw Error(Errc::ParseError, "covering JSON needs a 'subgraphs' array");
  if (!j.contains("declared_degree") || !j["declared_degree"].is_number_integer())
    throw Error(Errc::ParseError, "covering JSON needs an integer 'declared_degree'");
  GoodCovering cover;
  cover.declared_degree = j["declared_degree"].get<int>();
  cover.provenance = j.value("provenance", std::string("user"));
  try {
    for (const auto& s : j["subgraphs"]) {
      CoveringSubgraph sub;
      sub.vertices = s.at("vertices").get<std::vector<VertexId>>();
      for (const auto& e : s.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "covering edge must be a pair");
        sub.edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
      }
      cover.subgraphs.push_back(std::move(sub));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, std::string("covering JSON: ") + ex.what());
  }
  return cover;
}

GoodCovering load_covering(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, path.string() + ": " + ex.what());
  }
  return covering_from_json(j);
}

std::string canonical_graph_text(const WeightedGraph& g) { return graph_to_json(g).dump(); }

}  // namespace magspec
