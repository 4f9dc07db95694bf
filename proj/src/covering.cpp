#include "magspec/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magspec/error.hpp"
#include "magspec/parallel.hpp"

namespace magspec {

long ball_covering_degree(int max_degree, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "ball radius must be >= 1");
  const long n = max_degree;
  if (n == 0) return 1;
  if (n == 2) return 2L * k + 1;
  // Size bound of a k-ball: 1 + N + N(N-1) + ... + N(N-1)^{k-1}.
  long power = 1;
  for (int i = 0; i < k; ++i) power *= (n - 1);
  return (n * power - 2) / (n - 2);
}

GoodCovering ball_covering(const WeightedGraph& g, int k) {
  GoodCovering cover;
  cover.declared_degree = static_cast<int>(ball_covering_degree(degree_bound(g), k));
  cover.provenance = "k-ball(" + std::to_string(k) + ")";
  std::vector<char> inside(g.num_vertices(), 0);
  for (int center = 0; center < g.num_vertices(); ++center) {
    std::vector<int> ball = combinatorial_ball(g, center, k);
    std::sort(ball.begin(), ball.end());
    for (int v : ball) inside[v] = 1;
    CoveringSubgraph sub;
    for (int v : ball) sub.vertices.push_back(g.id(v));
    for (int v : ball) {
      for (const auto& nb : g.neighbors(v)) {
        if (nb.vertex > v && inside[nb.vertex]) sub.edges.emplace_back(g.id(v), g.id(nb.vertex));
      }
    }
    for (int v : ball) inside[v] = 0;
    cover.subgraphs.push_back(std::move(sub));
  }
  return cover;
}

namespace {

struct ResolvedSubgraph {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Throws UnknownVertex / NotAnEdge.
ResolvedSubgraph resolve(const WeightedGraph& g, const CoveringSubgraph& sub) {
  ResolvedSubgraph r;
  r.vertices.reserve(sub.vertices.size());
  for (VertexId id : sub.vertices) r.vertices.push_back(g.index(id));
  std::vector<int> sorted = r.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::InvalidArgument, "subgraph lists a vertex twice");
  r.edges.reserve(sub.edges.size());
  for (const auto& [a, b] : sub.edges) {
    const int ia = g.index(a);
    const int ib = g.index(b);
    const int e = g.find_edge(ia, ib);
    if (e < 0) throw Error(Errc::NotAnEdge, "{" + std::to_string(a) + "," + std::to_string(b) + "}");
    if (!std::binary_search(sorted.begin(), sorted.end(), ia) || !std::binary_search(sorted.begin(), sorted.end(), ib))
      throw Error(Errc::NotAnEdge, "{" + std::to_string(a) + "," + std::to_string(b) + "} leaves the subgraph");
    r.edges.push_back(e);
  }
  return r;
}

bool connected(const WeightedGraph& g, const ResolvedSubgraph& r) {
  if (r.vertices.empty()) return false;
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < r.vertices.size(); ++i) local[r.vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(r.vertices.size());
  for (int e : r.edges) {
    const int a = local[g.edge(e).lo];
    const int b = local[g.edge(e).hi];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(r.vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == r.vertices.size();
}

}  // namespace

CoveringValidation validate_covering(const WeightedGraph& g, const GoodCovering& cover) {
  CoveringValidation out;
  std::vector<int> edge_count(g.num_edges(), 0);
  std::vector<char> vertex_seen(g.num_vertices(), 0);
  for (std::size_t l = 0; l < cover.subgraphs.size(); ++l) {
    ResolvedSubgraph r;
    try {
      r = resolve(g, cover.subgraphs[l]);
    } catch (const Error&) {
      out.malformed_subgraphs.push_back(static_cast<int>(l));
      continue;
    }
    if (!connected(g, r)) out.disconnected_subgraphs.push_back(static_cast<int>(l));
    for (int v : r.vertices) vertex_seen[v] = 1;
    std::sort(r.edges.begin(), r.edges.end());
    r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
    for (int e : r.edges) ++edge_count[e];
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    out.empirical_max_multiplicity = std::max(out.empirical_max_multiplicity, edge_count[e]);
    if (edge_count[e] == 0) out.uncovered_edges.emplace_back(g.id(g.edge(e).lo), g.id(g.edge(e).hi));
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!vertex_seen[v]) out.uncovered_vertices.push_back(g.id(v));
  out.is_good = out.uncovered_edges.empty() && out.uncovered_vertices.empty() &&
                out.disconnected_subgraphs.empty() && out.malformed_subgraphs.empty() &&
                cover.declared_degree >= 1 && out.empirical_max_multiplicity <= cover.declared_degree;
  return out;
}

WeightedGraph restrict_to(const WeightedGraph& g, std::span<const double> alpha, const CoveringSubgraph& sub) {
  const ResolvedSubgraph r = resolve(g, sub);
  if (!connected(g, r)) throw Error(Errc::DisconnectedSubgraph, "covering subgraph is not connected");
  return subgraph(g.with_potential(alpha), r.vertices, r.edges);
}

double restricted_field_norm(const WeightedGraph& g, std::span<const double> alpha, const CoveringSubgraph& sub,
                             const SolverOptions& opts) {
  const WeightedGraph local = restrict_to(g, alpha, sub);
  return field_norm(local, local.potential(), opts);
}

EffectivePotential effective_potential(const WeightedGraph& g, const GoodCovering& cover,
                                       std::span<const double> alpha, const SolverOptions& opts, int threads) {
  if (cover.declared_degree < 1) throw Error(Errc::InvalidArgument, "covering degree must be >= 1");
  const int count = static_cast<int>(cover.subgraphs.size());
  std::vector<ResolvedSubgraph> resolved(count);
  std::vector<CoveringTerm> terms(count);
  const WeightedGraph magnetic = g.with_potential(alpha);

  parallel_for(count, worker_count(threads), [&](int l) {
    resolved[l] = resolve(g, cover.subgraphs[l]);
    const auto& r = resolved[l];
    if (!connected(g, r)) throw Error(Errc::DisconnectedSubgraph, "covering subgraph " + std::to_string(l));
    CoveringTerm t;
    t.subgraph = l;
    if (!r.edges.empty()) {
      t.min_c = std::numeric_limits<double>::infinity();
      for (int e : r.edges) t.min_c = std::min(t.min_c, g.edge(e).c);
      const WeightedGraph local = subgraph(magnetic, r.vertices, r.edges);
      t.field_norm = field_norm(local, local.potential(), opts);
    }
    terms[l] = t;
  });

  EffectivePotential out;
  out.declared_degree = cover.declared_degree;
  out.w.assign(g.num_vertices(), 0.0);
  out.member_count.assign(g.num_vertices(), 0);
  std::vector<int> edge_count(g.num_edges(), 0);
  for (int l = 0; l < count; ++l) {
    const double contribution = terms[l].field_norm * terms[l].min_c / cover.declared_degree;
    for (int v : resolved[l].vertices) {
      out.w[v] += contribution;
      ++out.member_count[v];
    }
    for (int e : resolved[l].edges) ++edge_count[e];
  }
  for (int c : edge_count) out.empirical_degree = std::max(out.empirical_degree, c);
  out.terms = std::move(terms);
  return out;
}

double dirichlet_bound_check(const WeightedGraph& g, std::span<const double> alpha, const EffectivePotential& w,
                             const ComplexVector& f) {
  if (static_cast<int>(w.w.size()) != g.num_vertices())
    throw Error(Errc::InvalidArgument, "effective potential does not match the graph");
  const double q = quadratic_form(g, alpha, f);
  double bound = 0.0;
  for (int x = 0; x < g.num_vertices(); ++x) bound += w.w[x] * g.omega(x) * g.omega(x) * std::norm(f[x]);
  return q - bound;
}

}  // namespace magspec
