#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "magspec/angle.hpp"
#include "magspec/graph.hpp"

namespace magspec {

// Closed walk x_0 -> x_1 -> ... -> x_{n-1} -> x_0 given by its vertex ids.
struct Cycle {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size(); }
  Cycle reversed() const;
};

// BFS spanning tree; neighbors are visited in ascending id order.
struct SpanningTree {
  VertexId root = 0;
  std::vector<char> in_tree;    // per edge
  std::vector<int> parent;      // per vertex index, -1 at the root
  std::vector<int> parent_edge; // per vertex index, -1 at the root
  std::vector<int> depth;
  std::vector<int> order;       // BFS visiting order
};

struct BasisCycle {
  int edge = 0;         // the non-tree edge
  VertexId from = 0;    // [from, to] in canonical orientation of that edge
  VertexId to = 0;
  Cycle cycle;          // [from, to] followed by the tree path to -> from
};

struct CycleBasis {
  SpanningTree tree;
  std::vector<BasisCycle> cycles;  // ordered by edge index
};

// Angles per vertex index.
struct GaugeFunction {
  std::vector<double> sigma;
};

SpanningTree spanning_tree(const WeightedGraph& g, VertexId root);
// Root = smallest vertex id.
SpanningTree spanning_tree(const WeightedGraph& g);

// Throws InvalidTree when `tree` does not span g.
CycleBasis cycle_basis(const WeightedGraph& g, const SpanningTree& tree);
CycleBasis cycle_basis(const WeightedGraph& g);

// Sum of the potential along the oriented cycle, in (-pi, pi]. Throws
// NotAnEdge when consecutive vertices are not adjacent.
double holonomy(const WeightedGraph& g, std::span<const double> alpha, const Cycle& cycle);
inline double holonomy(const WeightedGraph& g, const Cycle& cycle) {
  return holonomy(g, g.potential(), cycle);
}

// Potential vanishing on tree edges with alpha = target on the non-tree edge of
// each basis cycle. Throws MissingTarget unless there is one target per cycle.
Potential potential_from_holonomy(const WeightedGraph& g, const CycleBasis& basis,
                                  std::span<const double> targets);

// alpha'_xy = alpha_xy + sigma_y - sigma_x
Potential apply_gauge(const WeightedGraph& g, std::span<const double> alpha, const GaugeFunction& gauge);

struct GaugeReduction {
  GaugeFunction gauge;
  Potential reduced;
};

// Gauge that zeroes alpha on the tree edges of the default BFS tree; what is
// left on the non-tree edges is the holonomy of the matching basis cycles.
GaugeReduction gauge_reduce(const WeightedGraph& g, std::span<const double> alpha);
GaugeReduction gauge_reduce(const WeightedGraph& g, std::span<const double> alpha, const SpanningTree& tree);

// Holonomy of each basis cycle.
std::vector<double> basis_holonomies(const WeightedGraph& g, const CycleBasis& basis,
                                     std::span<const double> alpha);

// Gauge equivalence: equal holonomy on every basis cycle.
bool same_holonomy(const WeightedGraph& g, std::span<const double> alpha1,
                   std::span<const double> alpha2, double tol = kAngleTol);

// Coordinates of a cycle in the fundamental basis: the signed number of times
// it crosses each non-tree edge (in basis order).
std::vector<int> basis_coordinates(const WeightedGraph& g, const CycleBasis& basis, const Cycle& cycle);

// Integer combination of cycles.
using CycleChain = std::vector<std::pair<int, Cycle>>;

// Decides lhs == rhs in the cycle space by comparing holonomies under a batch
// of random potentials.
bool same_cycle_class(const WeightedGraph& g, const CycleChain& lhs, const CycleChain& rhs,
                      std::uint64_t seed = 0x5EED, int trials = 32);

}  // namespace magspec
