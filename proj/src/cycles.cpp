#include "magspec/cycles.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "magspec/angle.hpp"
#include "magspec/error.hpp"

namespace magspec {

Cycle Cycle::reversed() const {
  Cycle r;
  if (vertices.empty()) return r;
  // x0, x_{n-1}, ..., x1
  r.vertices.push_back(vertices.front());
  r.vertices.insert(r.vertices.end(), vertices.rbegin(), vertices.rend() - 1);
  return r;
}

SpanningTree spanning_tree(const WeightedGraph& g, VertexId root) {
  const int n = g.num_vertices();
  SpanningTree t;
  t.root = root;
  t.in_tree.assign(g.num_edges(), 0);
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.depth.assign(n, -1);
  const int r = g.index(root);
  t.depth[r] = 0;
  t.order.push_back(r);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const int x = t.order[head];
    for (const auto& nb : g.neighbors(x)) {
      if (t.depth[nb.vertex] >= 0) continue;
      t.depth[nb.vertex] = t.depth[x] + 1;
      t.parent[nb.vertex] = x;
      t.parent_edge[nb.vertex] = nb.edge;
      t.in_tree[nb.edge] = 1;
      t.order.push_back(nb.vertex);
    }
  }
  return t;
}

SpanningTree spanning_tree(const WeightedGraph& g) { return spanning_tree(g, g.id(0)); }

namespace {

void check_tree(const WeightedGraph& g, const SpanningTree& tree) {
  const int n = g.num_vertices();
  if (static_cast<int>(tree.in_tree.size()) != g.num_edges() ||
      static_cast<int>(tree.parent.size()) != n || static_cast<int>(tree.parent_edge.size()) != n ||
      static_cast<int>(tree.depth.size()) != n)
    throw Error(Errc::InvalidTree, "tree arrays do not match the graph");
  if (!g.contains(tree.root)) throw Error(Errc::InvalidTree, "root is not a vertex");
  const int root = g.index(tree.root);
  int tree_edges = 0;
  for (char c : tree.in_tree) tree_edges += c ? 1 : 0;
  if (tree_edges != n - 1)
    throw Error(Errc::InvalidTree, std::to_string(tree_edges) + " tree edges for " + std::to_string(n) + " vertices");
  for (int v = 0; v < n; ++v) {
    if (v == root) {
      if (tree.parent[v] != -1 || tree.depth[v] != 0) throw Error(Errc::InvalidTree, "root has a parent");
      continue;
    }
    const int p = tree.parent[v];
    const int e = tree.parent_edge[v];
    if (p < 0 || p >= n || e < 0 || e >= g.num_edges() || !tree.in_tree[e] || g.find_edge(v, p) != e ||
        tree.depth[v] != tree.depth[p] + 1)
      throw Error(Errc::InvalidTree, "vertex " + std::to_string(g.id(v)) + " has an inconsistent parent");
  }
}

// Vertex indices on the tree path from a to b (both included).
std::vector<int> tree_path(const SpanningTree& t, int a, int b) {
  std::vector<int> up_a{a};
  std::vector<int> up_b{b};
  while (t.depth[up_a.back()] > t.depth[up_b.back()]) up_a.push_back(t.parent[up_a.back()]);
  while (t.depth[up_b.back()] > t.depth[up_a.back()]) up_b.push_back(t.parent[up_b.back()]);
  while (up_a.back() != up_b.back()) {
    up_a.push_back(t.parent[up_a.back()]);
    up_b.push_back(t.parent[up_b.back()]);
  }
  up_b.pop_back();
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

}  // namespace

CycleBasis cycle_basis(const WeightedGraph& g, const SpanningTree& tree) {
  check_tree(g, tree);
  CycleBasis basis;
  basis.tree = tree;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (tree.in_tree[e]) continue;
    const auto& ed = g.edge(e);
    BasisCycle bc;
    bc.edge = e;
    bc.from = g.id(ed.lo);
    bc.to = g.id(ed.hi);
    // [x, y] + beta_yx: the path y -> x ends at x, which closes the walk.
    std::vector<int> path = tree_path(tree, ed.hi, ed.lo);
    bc.cycle.vertices.push_back(bc.from);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) bc.cycle.vertices.push_back(g.id(path[i]));
    basis.cycles.push_back(std::move(bc));
  }
  return basis;
}

CycleBasis cycle_basis(const WeightedGraph& g) { return cycle_basis(g, spanning_tree(g)); }

namespace {

// Raw (unreduced) sum of alpha along the cycle.
double holonomy_sum(const WeightedGraph& g, std::span<const double> alpha, const Cycle& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 2) throw Error(Errc::NotAnEdge, "cycle needs at least two vertices");
  double sum = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const VertexId x = vs[i];
    const VertexId y = vs[(i + 1) % vs.size()];
    if (!g.contains(x) || !g.contains(y))
      throw Error(Errc::NotAnEdge, "[" + std::to_string(x) + "," + std::to_string(y) + "] has an unknown endpoint");
    const int ix = g.index(x);
    const int e = g.find_edge(ix, g.index(y));
    if (e < 0) throw Error(Errc::NotAnEdge, "[" + std::to_string(x) + "," + std::to_string(y) + "]");
    sum += g.oriented(alpha, e, ix);
  }
  return sum;
}

}  // namespace

double holonomy(const WeightedGraph& g, std::span<const double> alpha, const Cycle& cycle) {
  return normalize_angle(holonomy_sum(g, alpha, cycle));
}

Potential potential_from_holonomy(const WeightedGraph& g, const CycleBasis& basis,
                                  std::span<const double> targets) {
  if (targets.size() != basis.cycles.size())
    throw Error(Errc::MissingTarget, std::to_string(targets.size()) + " targets for " +
                                         std::to_string(basis.cycles.size()) + " basis cycles");
  Potential alpha(g.num_edges(), 0.0);
  for (std::size_t i = 0; i < basis.cycles.size(); ++i) {
    // Basis cycles start with their non-tree edge in canonical orientation.
    alpha[basis.cycles[i].edge] = normalize_angle(targets[i]);
  }
  return alpha;
}

Potential apply_gauge(const WeightedGraph& g, std::span<const double> alpha, const GaugeFunction& gauge) {
  if (static_cast<int>(gauge.sigma.size()) != g.num_vertices())
    throw Error(Errc::InvalidArgument, "gauge must be defined on every vertex");
  Potential out(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    out[e] = normalize_angle(alpha[e] + gauge.sigma[ed.hi] - gauge.sigma[ed.lo]);
  }
  return out;
}

GaugeReduction gauge_reduce(const WeightedGraph& g, std::span<const double> alpha, const SpanningTree& tree) {
  check_tree(g, tree);
  GaugeReduction r;
  r.gauge.sigma.assign(g.num_vertices(), 0.0);
  // sigma_x = alpha_{x,parent} + sigma_parent, so alpha' vanishes on tree edges.
  for (int x : tree.order) {
    const int p = tree.parent[x];
    if (p < 0) continue;
    r.gauge.sigma[x] = normalize_angle(g.oriented(alpha, tree.parent_edge[x], x) + r.gauge.sigma[p]);
  }
  r.reduced = apply_gauge(g, alpha, r.gauge);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (tree.in_tree[e]) r.reduced[e] = 0.0;
  }
  return r;
}

GaugeReduction gauge_reduce(const WeightedGraph& g, std::span<const double> alpha) {
  return gauge_reduce(g, alpha, spanning_tree(g));
}

std::vector<double> basis_holonomies(const WeightedGraph& g, const CycleBasis& basis,
                                     std::span<const double> alpha) {
  std::vector<double> out;
  out.reserve(basis.cycles.size());
  for (const auto& bc : basis.cycles) out.push_back(holonomy(g, alpha, bc.cycle));
  return out;
}

bool same_holonomy(const WeightedGraph& g, std::span<const double> alpha1, std::span<const double> alpha2,
                   double tol) {
  const CycleBasis basis = cycle_basis(g);
  for (const auto& bc : basis.cycles) {
    if (!same_angle(holonomy_sum(g, alpha1, bc.cycle), holonomy_sum(g, alpha2, bc.cycle), tol)) return false;
  }
  return true;
}

std::vector<int> basis_coordinates(const WeightedGraph& g, const CycleBasis& basis, const Cycle& cycle) {
  std::vector<int> slot(g.num_edges(), -1);
  for (std::size_t i = 0; i < basis.cycles.size(); ++i) slot[basis.cycles[i].edge] = static_cast<int>(i);
  std::vector<int> coords(basis.cycles.size(), 0);
  const auto& vs = cycle.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int x = g.index(vs[i]);
    const int y = g.index(vs[(i + 1) % vs.size()]);
    const int e = g.find_edge(x, y);
    if (e < 0)
      throw Error(Errc::NotAnEdge, "[" + std::to_string(vs[i]) + "," + std::to_string(vs[(i + 1) % vs.size()]) + "]");
    if (slot[e] >= 0) coords[slot[e]] += (g.edge(e).lo == x) ? 1 : -1;
  }
  return coords;
}

bool same_cycle_class(const WeightedGraph& g, const CycleChain& lhs, const CycleChain& rhs,
                      std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  Potential alpha(g.num_edges());
  for (int t = 0; t < trials; ++t) {
    for (auto& a : alpha) a = angle(rng);
    double left = 0.0;
    double right = 0.0;
    for (const auto& [k, c] : lhs) left += k * holonomy_sum(g, alpha, c);
    for (const auto& [k, c] : rhs) right += k * holonomy_sum(g, alpha, c);
    if (!same_angle(left, right, 1e-9)) return false;
  }
  return true;
}

}  // namespace magspec
