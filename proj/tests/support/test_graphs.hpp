#pragma once

// Graph fixtures and seeded random generators shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "magspec/angle.hpp"
#include "magspec/graph.hpp"

namespace magspec::testing {

inline RawGraph cycle_raw(int n, double holonomy = 0.0, bool spread = true) {
  RawGraph raw;
  for (int i = 0; i < n; ++i) raw.vertices.push_back({i, 1.0});
  for (int i = 0; i < n; ++i) {
    const double alpha = spread ? holonomy / n : (i == n - 1 ? holonomy : 0.0);
    raw.edges.push_back({i, (i + 1) % n, 1.0, alpha});
  }
  return raw;
}

inline WeightedGraph cycle_graph(int n, double holonomy = 0.0, bool spread = true) {
  return build_graph(cycle_raw(n, holonomy, spread));
}

inline WeightedGraph path_graph(int n, double c = 1.0) {
  RawGraph raw;
  for (int i = 0; i < n; ++i) raw.vertices.push_back({i, 1.0});
  for (int i = 0; i + 1 < n; ++i) raw.edges.push_back({i, i + 1, c, 0.0});
  return build_graph(raw);
}

inline WeightedGraph star_graph(int leaves) {
  RawGraph raw;
  raw.vertices.push_back({0, 1.0});
  for (int i = 1; i <= leaves; ++i) {
    raw.vertices.push_back({i, 1.0});
    raw.edges.push_back({0, i, 1.0, 0.0});
  }
  return build_graph(raw);
}

inline WeightedGraph complete_graph(int n) {
  RawGraph raw;
  for (int i = 0; i < n; ++i) raw.vertices.push_back({i, 1.0});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) raw.edges.push_back({i, j, 1.0, 0.0});
  return build_graph(raw);
}

// Triangulated rows x cols grid: squares split by one diagonal. Vertex id
// r * cols + q.
inline WeightedGraph triangulated_grid(int rows, int cols) {
  RawGraph raw;
  for (int r = 0; r < rows; ++r)
    for (int q = 0; q < cols; ++q) raw.vertices.push_back({r * cols + q, 1.0});
  auto id = [cols](int r, int q) { return static_cast<VertexId>(r * cols + q); };
  for (int r = 0; r < rows; ++r) {
    for (int q = 0; q < cols; ++q) {
      if (q + 1 < cols) raw.edges.push_back({id(r, q), id(r, q + 1), 1.0, 0.0});
      if (r + 1 < rows) raw.edges.push_back({id(r, q), id(r + 1, q), 1.0, 0.0});
      if (r + 1 < rows && q + 1 < cols) raw.edges.push_back({id(r, q), id(r + 1, q + 1), 1.0, 0.0});
    }
  }
  return build_graph(raw);
}

struct RandomGraphSpec {
  int min_vertices = 2;
  int max_vertices = 40;
  double extra_edge_fraction = 0.6;  // extra edges as a fraction of n
  double min_weight = 0.1;
  double max_weight = 10.0;
  bool unit_weights = false;
  int max_degree = 0;  // 0: unbounded
};

// Random connected graph: random recursive tree plus extra edges, with
// scattered (non-contiguous) vertex ids and random potential.
inline WeightedGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec = {}) {
  std::uniform_int_distribution<int> size(spec.min_vertices, spec.max_vertices);
  const int n = size(rng);
  std::uniform_real_distribution<double> weight(spec.min_weight, spec.max_weight);
  std::uniform_real_distribution<double> angle(-kPi, kPi);

  std::vector<VertexId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = 7 * static_cast<VertexId>(i) + 3;
  std::shuffle(ids.begin(), ids.end(), rng);

  RawGraph raw;
  for (int i = 0; i < n; ++i) raw.vertices.push_back({ids[i], spec.unit_weights ? 1.0 : weight(rng)});
  std::vector<int> degree(n, 0);
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  auto add = [&](int i, int j) {
    degree[i]++;
    degree[j]++;
    adjacent[i][j] = adjacent[j][i] = 1;
    raw.edges.push_back({ids[i], ids[j], spec.unit_weights ? 1.0 : weight(rng), angle(rng)});
  };
  for (int i = 1; i < n; ++i) {
    std::vector<int> options;
    for (int j = 0; j < i; ++j)
      if (spec.max_degree == 0 || degree[j] < spec.max_degree) options.push_back(j);
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    add(i, options[pick(rng)]);
  }
  const int extra = static_cast<int>(spec.extra_edge_fraction * n);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  for (int t = 0; t < 4 * extra && static_cast<int>(raw.edges.size()) < n - 1 + extra; ++t) {
    const int i = vertex(rng);
    const int j = vertex(rng);
    if (i == j || adjacent[i][j]) continue;
    if (spec.max_degree > 0 && (degree[i] >= spec.max_degree || degree[j] >= spec.max_degree)) continue;
    add(i, j);
  }
  return build_graph(raw);
}

inline Potential random_potential(const WeightedGraph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  Potential alpha(g.num_edges());
  for (auto& a : alpha) a = angle(rng);
  return alpha;
}

inline std::vector<double> random_sigma(const WeightedGraph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-3 * kPi, 3 * kPi);
  std::vector<double> sigma(g.num_vertices());
  for (auto& s : sigma) s = angle(rng);
  return sigma;
}

}  // namespace magspec::testing
