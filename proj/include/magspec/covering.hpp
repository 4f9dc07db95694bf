#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "magspec/graph.hpp"
#include "magspec/operator.hpp"
#include "magspec/spectrum.hpp"

namespace magspec {

// Explicit subgraph: vertex ids and undirected edges as id pairs.
struct CoveringSubgraph {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

struct GoodCovering {
  std::vector<CoveringSubgraph> subgraphs;
  int declared_degree = 1;
  std::string provenance = "user";  // "k-ball(k)" or "user"
};

// One induced k-ball per vertex (ordered by vertex index).
// Declared degree (N(N-1)^k - 2)/(N-2) for N != 2, 2k+1 for N = 2.
GoodCovering ball_covering(const WeightedGraph& g, int k);
long ball_covering_degree(int max_degree, int k);

struct CoveringValidation {
  bool is_good = false;
  int empirical_max_multiplicity = 0;
  std::vector<std::pair<VertexId, VertexId>> uncovered_edges;
  std::vector<VertexId> uncovered_vertices;
  std::vector<int> disconnected_subgraphs;
  std::vector<int> malformed_subgraphs;  // unknown vertices or non-edges
};

CoveringValidation validate_covering(const WeightedGraph& g, const GoodCovering& cover);

// The subgraph as a WeightedGraph carrying the restricted potential. Throws
// DisconnectedSubgraph, UnknownVertex or NotAnEdge.
WeightedGraph restrict_to(const WeightedGraph& g, std::span<const double> alpha, const CoveringSubgraph& sub);

// |B_l|: field norm of the restriction (omega and c set to 1).
double restricted_field_norm(const WeightedGraph& g, std::span<const double> alpha, const CoveringSubgraph& sub,
                             const SolverOptions& opts = {});

struct CoveringTerm {
  int subgraph = 0;
  double field_norm = 0.0;
  double min_c = 0.0;  // 0 when the subgraph has no edges
};

struct EffectivePotential {
  std::vector<double> w;          // per vertex index
  std::vector<int> member_count;  // subgraphs containing each vertex
  std::vector<CoveringTerm> terms;
  int declared_degree = 1;
  int empirical_degree = 0;
};

// W(x) = (1/m) sum_{l : x in V_l} |B_l| inf_{E_l} c with m the declared
// degree. Field norms are computed on up to `threads` workers (0: the
// MAGSPEC_THREADS environment variable, else hardware concurrency).
EffectivePotential effective_potential(const WeightedGraph& g, const GoodCovering& cover,
                                       std::span<const double> alpha, const SolverOptions& opts = {},
                                       int threads = 0);

// Q_{c,A}(f) - sum_x W(x) omega_x^2 |f(x)|^2
double dirichlet_bound_check(const WeightedGraph& g, std::span<const double> alpha, const EffectivePotential& w,
                             const ComplexVector& f);

}  // namespace magspec
