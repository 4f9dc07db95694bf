#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "magspec/angle.hpp"

namespace magspec {

using VertexId = std::int64_t;

struct VertexSpec {
  VertexId id = 0;
  double omega = 1.0;
};

// alpha is the angle read along u -> v.
struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  double c = 1.0;
  double alpha = 0.0;
};

struct RawGraph {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
};

// Stored edge in canonical orientation id(lo) < id(hi); the potential on an
// edge is read lo -> hi.
struct Edge {
  int lo = 0;
  int hi = 0;
  double c = 1.0;
};

struct Neighbor {
  int vertex = 0;
  int edge = 0;
};

// A magnetic potential is one angle per stored edge, read in the canonical
// orientation of that edge.
using Potential = std::vector<double>;

// Finite connected graph with vertex weights omega > 0, edge weights c > 0 and
// a magnetic potential. Vertices are indexed 0..n-1 in ascending id order and
// edges are sorted by (id(lo), id(hi)). Immutable after construction.
class WeightedGraph {
 public:
  // Validates and canonicalizes; throws magspec::Error.
  static WeightedGraph build(const RawGraph& raw);

  int num_vertices() const { return static_cast<int>(ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  VertexId id(int index) const { return ids_[index]; }
  const std::vector<VertexId>& ids() const { return ids_; }
  bool contains(VertexId id) const { return index_.count(id) != 0; }
  // Throws UnknownVertex.
  int index(VertexId id) const;

  double omega(int index) const { return omega_[index]; }
  const std::vector<double>& omegas() const { return omega_; }

  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted by neighbor id.
  std::span<const Neighbor> neighbors(int index) const {
    return {adj_.data() + offsets_[index], adj_.data() + offsets_[index + 1]};
  }
  int degree(int index) const { return offsets_[index + 1] - offsets_[index]; }

  // Edge index between two vertex indices, or -1.
  int find_edge(int a, int b) const;

  // Stored potential read from -> to along edge e.
  double alpha(int e, int from) const { return oriented(potential_, e, from); }
  Potential potential() const;

  // Angle of `alpha` along edge e when leaving vertex `from`.
  double oriented(std::span<const double> alpha, int e, int from) const {
    if (edges_[e].lo == from) return alpha[e];
    return alpha[e] == kPi ? kPi : -alpha[e];  // keep (-pi, pi] closed under reversal
  }

  // Same topology and weights, different potential (normalized on entry).
  WeightedGraph with_potential(std::span<const double> alpha) const;
  // Same topology and potential with replaced weights.
  WeightedGraph with_weights(std::span<const double> omega, std::span<const double> c) const;

  RawGraph to_raw() const;

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, int> index_;
  std::vector<double> omega_;
  std::vector<Edge> edges_;
  std::vector<double> potential_;
  std::vector<int> offsets_;
  std::vector<Neighbor> adj_;
  std::unordered_map<std::uint64_t, int> edge_lookup_;
};

inline WeightedGraph build_graph(const RawGraph& raw) { return WeightedGraph::build(raw); }

// Maximum vertex degree.
int degree_bound(const WeightedGraph& g);

// Subgraph on `vertex_indices` keeping only the listed edges (all edges must
// join kept vertices). Potential and weights are inherited.
WeightedGraph subgraph(const WeightedGraph& g, std::span<const int> vertex_indices,
                       std::span<const int> edge_indices);

// Induced subgraph on `vertex_indices`.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> vertex_indices);

// Vertex indices within `radius` hops of `center`, in BFS order.
std::vector<int> combinatorial_ball(const WeightedGraph& g, int center, int radius);

}  // namespace magspec
