#include "magspec/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

#include "magspec/error.hpp"

namespace magspec {

double edge_length(const WeightedGraph& g, int edge) {
  const auto& e = g.edge(edge);
  return std::min(g.omega(e.lo), g.omega(e.hi)) / std::sqrt(e.c);
}

std::vector<double> dp_distances(const WeightedGraph& g, std::span<const int> sources) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.num_vertices(), inf);
  // Index order equals id order, so equal distances pop the smaller id first.
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int s : sources) {
    dist[s] = 0.0;
    heap.emplace(0.0, s);
  }
  std::vector<char> done(g.num_vertices(), 0);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (done[x]) continue;
    done[x] = 1;
    for (const auto& nb : g.neighbors(x)) {
      double nd = d + edge_length(g, nb.edge);
      if (nd < dist[nb.vertex]) {
        dist[nb.vertex] = nd;
        heap.emplace(nd, nb.vertex);
      }
    }
  }
  return dist;
}

double dp_distance(const WeightedGraph& g, VertexId x, VertexId y) {
  const int ix = g.index(x);
  const int iy = g.index(y);
  if (ix == iy) return 0.0;
  const int src[] = {ix};
  return dp_distances(g, src)[iy];
}

std::vector<double> distances_to_frontier(const WeightedGraph& g, std::span<const VertexId> frontier) {
  std::vector<int> sources;
  sources.reserve(frontier.size());
  for (VertexId f : frontier) sources.push_back(g.index(f));
  return dp_distances(g, sources);
}

double distance_to_frontier(const WeightedGraph& g, std::span<const VertexId> frontier, VertexId x) {
  const int ix = g.index(x);
  return distances_to_frontier(g, frontier)[ix];
}

std::vector<CompletenessRow> completeness_probe(const GraphFamily& family, std::span<const int> radii) {
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (radii[i] <= radii[i - 1])
      throw Error(Errc::InvalidArgument, "completeness probe radii must be strictly increasing");
  }
  std::vector<CompletenessRow> rows;
  for (int r : radii) {
    Truncation t = truncate(family, r);
    Truncation core = truncate(family, std::max(1, r / 2));
    auto dist = distances_to_frontier(t.graph, t.frontier);
    CompletenessRow row;
    row.radius = r;
    row.base_distance = dist[t.graph.index(family.base_vertex)];
    row.core_min_distance = std::numeric_limits<double>::infinity();
    for (VertexId id : core.graph.ids())
      row.core_min_distance = std::min(row.core_min_distance, dist[t.graph.index(id)]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace magspec
