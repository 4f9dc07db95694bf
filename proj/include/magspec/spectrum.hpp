#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "magspec/graph.hpp"
#include "magspec/operator.hpp"

namespace magspec {

struct SolverOptions {
  // Converged when ||H v - lambda v||_omega <= tol * max(1, H.scale()).
  double tol = 1e-10;
  std::uint64_t seed = 0x5EED;
  // Dense eigendecomposition up to this dimension, iterative above it.
  int dense_limit = 512;
  // Matrix-vector products allowed to the iterative solver; 0 means 10 * dimension.
  long max_iterations = 0;
  int krylov_dim = 48;
  int keep = 12;
};

struct SpectrumResult {
  double lambda_min = 0.0;
  ComplexVector eigenvector;  // ||v||_omega = 1
  double residual = 0.0;
  long iterations = 0;        // matrix-vector products; 0 for the dense path
  std::string method;         // "dense" or "krylov"
};

// Throws NoConvergence when the iterative solver hits its cap.
SpectrumResult lowest_eigenvalue(const MagneticOperator& h, const SolverOptions& opts = {});

// All eigenvalues, ascending.
std::vector<double> dense_spectrum(const MagneticOperator& h);

// |B|: lowest eigenvalue of H_{1,1,A}, clamped at 0.
double field_norm(const WeightedGraph& g, std::span<const double> alpha, const SolverOptions& opts = {});
SpectrumResult field_norm_result(const WeightedGraph& g, std::span<const double> alpha,
                                 const SolverOptions& opts = {});

// |1 - e^{i delta / N}|^2 with delta = min_k |omega - 2 pi k|; N >= 3.
double cyclic_field_norm_closed_form(int n, double holonomy);

}  // namespace magspec
