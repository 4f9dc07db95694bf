#pragma once

#include <span>
#include <vector>

#include "magspec/family.hpp"
#include "magspec/graph.hpp"

namespace magspec {

// p_xy = min(omega_x, omega_y) / sqrt(c_xy)
double edge_length(const WeightedGraph& g, int edge);

// d_p distances (by vertex index) from the nearest of `sources`. Dijkstra with
// a binary heap; ties are settled by smaller vertex id. Unreached vertices,
// or every vertex when `sources` is empty, get +infinity.
std::vector<double> dp_distances(const WeightedGraph& g, std::span<const int> sources);

double dp_distance(const WeightedGraph& g, VertexId x, VertexId y);

// Lower bound D_R(x) for the distance from x to the boundary at infinity.
// +infinity when the frontier is empty (finite graph).
double distance_to_frontier(const WeightedGraph& g, std::span<const VertexId> frontier, VertexId x);
std::vector<double> distances_to_frontier(const WeightedGraph& g, std::span<const VertexId> frontier);

struct CompletenessRow {
  int radius = 0;
  double base_distance = 0.0;  // D_R(base vertex)
  double core_min_distance = 0.0;  // min over vertices of G_{R/2} of D_R
};

// Radii must be strictly increasing.
std::vector<CompletenessRow> completeness_probe(const GraphFamily& family, std::span<const int> radii);

}  // namespace magspec
