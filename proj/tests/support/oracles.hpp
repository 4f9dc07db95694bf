#pragma once

// Reference computations used as independent oracles. None of these go
// through the library's operator assembly, solvers or Dijkstra.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "magspec/graph.hpp"

namespace magspec::testing {

// Floyd-Warshall on p_xy = min(omega_x, omega_y) / sqrt(c_xy).
inline std::vector<std::vector<double>> floyd_warshall_dp(const WeightedGraph& g) {
  const int n = g.num_vertices();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const auto& e : g.edges()) {
    const double p = std::min(g.omega(e.lo), g.omega(e.hi)) / std::sqrt(e.c);
    d[e.lo][e.hi] = std::min(d[e.lo][e.hi], p);
    d[e.hi][e.lo] = d[e.lo][e.hi];
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Hop distances by repeated relaxation (all pairs).
inline std::vector<std::vector<int>> hop_distances(const WeightedGraph& g) {
  const int n = g.num_vertices();
  const int big = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, big));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.lo][e.hi] = d[e.hi][e.lo] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// H applied entrywise from its defining sum:
// (Hf)(x) = omega_x^{-2} sum_{y~x} c_xy [f(x) - e^{i alpha_xy} f(y)].
inline Eigen::VectorXcd apply_by_definition(const WeightedGraph& g, std::span<const double> alpha,
                                            const Eigen::VectorXcd& f) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(g.num_vertices());
  for (int x = 0; x < g.num_vertices(); ++x) {
    std::complex<double> acc = 0.0;
    for (const auto& nb : g.neighbors(x)) {
      const double a = g.oriented(alpha, nb.edge, x);
      acc += g.edge(nb.edge).c * (f[x] - std::polar(1.0, a) * f[nb.vertex]);
    }
    out[x] = acc / (g.omega(x) * g.omega(x));
  }
  return out;
}

// Matrix of H in the standard basis, column by column from the definition.
inline Eigen::MatrixXcd matrix_by_definition(const WeightedGraph& g, std::span<const double> alpha) {
  const int n = g.num_vertices();
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
    e[j] = 1.0;
    m.col(j) = apply_by_definition(g, alpha, e);
  }
  return m;
}

// Eigenvalues of H by diagonalizing the general (non-Hermitian in the flat
// product) matrix; sorted ascending by real part.
inline std::vector<double> eigenvalues_by_definition(const WeightedGraph& g, std::span<const double> alpha) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(matrix_by_definition(g, alpha), false);
  std::vector<double> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i].real());
  std::sort(out.begin(), out.end());
  return out;
}

// l^2_omega inner product.
inline std::complex<double> inner_by_definition(const WeightedGraph& g, const Eigen::VectorXcd& f,
                                                const Eigen::VectorXcd& h) {
  std::complex<double> s = 0.0;
  for (int x = 0; x < g.num_vertices(); ++x) s += g.omega(x) * g.omega(x) * f[x] * std::conj(h[x]);
  return s;
}

}  // namespace magspec::testing
