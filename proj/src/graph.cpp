#include "magspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "magspec/angle.hpp"
#include "magspec/error.hpp"

namespace magspec {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::string edge_name(VertexId u, VertexId v) {
  return "edge {" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::GeneratorFailure: return "GeneratorFailure";
    case Errc::InvalidTree: return "InvalidTree";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::MissingTarget: return "MissingTarget";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NotASolution: return "NotASolution";
    case Errc::DisconnectedSubgraph: return "DisconnectedSubgraph";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

WeightedGraph WeightedGraph::build(const RawGraph& raw) {
  if (raw.vertices.empty()) throw Error(Errc::EmptyGraph, "graph has no vertices");

  WeightedGraph g;
  std::vector<VertexSpec> verts = raw.vertices;
  std::sort(verts.begin(), verts.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& v = verts[i];
    if (i > 0 && verts[i - 1].id == v.id)
      throw Error(Errc::DuplicateVertex, "vertex " + std::to_string(v.id) + " listed twice");
    if (!(v.omega > 0.0) || !std::isfinite(v.omega))
      throw Error(Errc::NonPositiveWeight,
                  "vertex " + std::to_string(v.id) + " has omega = " + std::to_string(v.omega));
    g.index_.emplace(v.id, static_cast<int>(i));
    g.ids_.push_back(v.id);
    g.omega_.push_back(v.omega);
  }

  struct Pending {
    Edge edge;
    double alpha;
  };
  std::vector<Pending> pending;
  pending.reserve(raw.edges.size());
  for (const auto& e : raw.edges) {
    auto iu = g.index_.find(e.u);
    auto iv = g.index_.find(e.v);
    if (iu == g.index_.end())
      throw Error(Errc::UnknownVertex, edge_name(e.u, e.v) + " references vertex " + std::to_string(e.u));
    if (iv == g.index_.end())
      throw Error(Errc::UnknownVertex, edge_name(e.u, e.v) + " references vertex " + std::to_string(e.v));
    if (e.u == e.v) throw Error(Errc::SelfLoop, edge_name(e.u, e.v));
    if (!(e.c > 0.0) || !std::isfinite(e.c))
      throw Error(Errc::NonPositiveWeight, edge_name(e.u, e.v) + " has c = " + std::to_string(e.c));
    if (!std::isfinite(e.alpha))
      throw Error(Errc::InvalidArgument, edge_name(e.u, e.v) + " has non-finite alpha");
    Pending p;
    if (e.u < e.v) {
      p.edge = {iu->second, iv->second, e.c};
      p.alpha = normalize_angle(e.alpha);
    } else {
      p.edge = {iv->second, iu->second, e.c};
      p.alpha = normalize_angle(-e.alpha);
    }
    pending.push_back(p);
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::pair(a.edge.lo, a.edge.hi) < std::pair(b.edge.lo, b.edge.hi);
  });
  for (std::size_t i = 1; i < pending.size(); ++i) {
    if (pending[i].edge.lo == pending[i - 1].edge.lo && pending[i].edge.hi == pending[i - 1].edge.hi)
      throw Error(Errc::DuplicateEdge,
                  edge_name(g.ids_[pending[i].edge.lo], g.ids_[pending[i].edge.hi]) + " listed twice");
  }

  const int n = g.num_vertices();
  g.edges_.reserve(pending.size());
  g.potential_.reserve(pending.size());
  std::vector<int> deg(n, 0);
  for (const auto& p : pending) {
    g.edge_lookup_.emplace(pair_key(p.edge.lo, p.edge.hi), static_cast<int>(g.edges_.size()));
    g.edges_.push_back(p.edge);
    g.potential_.push_back(p.alpha);
    ++deg[p.edge.lo];
    ++deg[p.edge.hi];
  }
  g.offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.adj_.resize(g.offsets_[n]);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edges_[e];
    g.adj_[fill[ed.lo]++] = {ed.hi, e};
    g.adj_[fill[ed.hi]++] = {ed.lo, e};
  }
  for (int i = 0; i < n; ++i) {
    std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(x)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++reached;
        queue.push_back(nb.vertex);
      }
    }
  }
  if (reached != n) {
    int missing = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw Error(Errc::Disconnected, "vertex " + std::to_string(g.ids_[missing]) +
                                        " is not reachable from vertex " + std::to_string(g.ids_[0]));
  }
  return g;
}

int WeightedGraph::index(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(id));
  return it->second;
}

int WeightedGraph::find_edge(int a, int b) const {
  if (a == b) return -1;
  auto it = edge_lookup_.find(pair_key(a, b));
  return it == edge_lookup_.end() ? -1 : it->second;
}

Potential WeightedGraph::potential() const { return potential_; }

WeightedGraph WeightedGraph::with_potential(std::span<const double> alpha) const {
  if (alpha.size() != edges_.size())
    throw Error(Errc::InvalidArgument, "potential has " + std::to_string(alpha.size()) +
                                           " entries for " + std::to_string(edges_.size()) + " edges");
  WeightedGraph g = *this;
  for (std::size_t e = 0; e < alpha.size(); ++e) g.potential_[e] = normalize_angle(alpha[e]);
  return g;
}

WeightedGraph WeightedGraph::with_weights(std::span<const double> omega,
                                          std::span<const double> c) const {
  if (omega.size() != omega_.size() || c.size() != edges_.size())
    throw Error(Errc::InvalidArgument, "weight vectors do not match the graph");
  WeightedGraph g = *this;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0.0))
      throw Error(Errc::NonPositiveWeight, "vertex " + std::to_string(ids_[i]));
    g.omega_[i] = omega[i];
  }
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (!(c[e] > 0.0))
      throw Error(Errc::NonPositiveWeight, edge_name(ids_[edges_[e].lo], ids_[edges_[e].hi]));
    g.edges_[e].c = c[e];
  }
  return g;
}

RawGraph WeightedGraph::to_raw() const {
  RawGraph raw;
  raw.vertices.reserve(ids_.size());
  for (int i = 0; i < num_vertices(); ++i) raw.vertices.push_back({ids_[i], omega_[i]});
  raw.edges.reserve(edges_.size());
  for (int e = 0; e < num_edges(); ++e)
    raw.edges.push_back({ids_[edges_[e].lo], ids_[edges_[e].hi], edges_[e].c, potential_[e]});
  return raw;
}

int degree_bound(const WeightedGraph& g) {
  int n = 0;
  for (int i = 0; i < g.num_vertices(); ++i) n = std::max(n, g.degree(i));
  return n;
}

WeightedGraph subgraph(const WeightedGraph& g, std::span<const int> vertex_indices,
                       std::span<const int> edge_indices) {
  RawGraph raw;
  raw.vertices.reserve(vertex_indices.size());
  for (int v : vertex_indices) raw.vertices.push_back({g.id(v), g.omega(v)});
  raw.edges.reserve(edge_indices.size());
  for (int e : edge_indices) {
    const auto& ed = g.edge(e);
    raw.edges.push_back({g.id(ed.lo), g.id(ed.hi), ed.c, g.alpha(e, ed.lo)});
  }
  return WeightedGraph::build(raw);
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> vertex_indices) {
  std::vector<char> keep(g.num_vertices(), 0);
  for (int v : vertex_indices) keep[v] = 1;
  std::vector<int> edges;
  for (int e = 0; e < g.num_edges(); ++e)
    if (keep[g.edge(e).lo] && keep[g.edge(e).hi]) edges.push_back(e);
  return subgraph(g, vertex_indices, edges);
}

std::vector<int> combinatorial_ball(const WeightedGraph& g, int center, int radius) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<int> order{center};
  dist[center] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int x = order[head];
    if (dist[x] == radius) continue;
    for (const auto& nb : g.neighbors(x)) {
      if (dist[nb.vertex] < 0) {
        dist[nb.vertex] = dist[x] + 1;
        order.push_back(nb.vertex);
      }
    }
  }
  return order;
}

}  // namespace magspec
