#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magspec/graph.hpp"

namespace magspec {

struct Truncation {
  WeightedGraph graph;
  // Vertices of the truncation adjacent (in the full graph) to vertices
  // outside it. Sorted ascending.
  std::vector<VertexId> frontier;
};

// An infinite (or large) graph seen through its finite truncations G_R.
// Generators must be deterministic, keep vertex ids stable, and return G_R as
// an induced subgraph of G_R' for R < R'.
struct GraphFamily {
  std::string name;
  std::function<Truncation(int radius)> generator;
  VertexId base_vertex = 0;
  // Set when completeness of the d_p metric is known in closed form.
  std::optional<bool> metric_complete;
};

// Throws InvalidArgument for radius < 1 and GeneratorFailure when the
// generator throws or breaks the base-vertex contract.
Truncation truncate(const GraphFamily& family, int radius);

// A finite graph viewed as a family: G_R is the combinatorial R-ball around
// `base`. Once R reaches the eccentricity of `base`, the frontier is empty.
GraphFamily finite_family(WeightedGraph g, VertexId base);

}  // namespace magspec
