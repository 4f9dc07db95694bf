#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "magspec/covering.hpp"
#include "magspec/graph.hpp"

namespace magspec {

// {"vertices":[{"id":0,"omega":1.0},...],"edges":[{"u":0,"v":1,"c":1.0,"alpha":0.0},...]}
// Missing "omega", "c" or "alpha" default to 1, 1 and 0.
RawGraph raw_graph_from_json(const nlohmann::json& j);
WeightedGraph graph_from_json(const nlohmann::json& j);

// Canonical form: vertices sorted by id, edges by (min(u,v), max(u,v)) with
// u < v and alpha normalized into (-pi, pi].
nlohmann::json graph_to_json(const WeightedGraph& g);

WeightedGraph load_graph(const std::filesystem::path& path);
std::string canonical_graph_text(const WeightedGraph& g);

// {"declared_degree":m,"provenance":"...","subgraphs":[{"vertices":[...],"edges":[[u,v],...]},...]}
nlohmann::json covering_to_json(const GoodCovering& cover);
GoodCovering covering_from_json(const nlohmann::json& j);
GoodCovering load_covering(const std::filesystem::path& path);

}  // namespace magspec
