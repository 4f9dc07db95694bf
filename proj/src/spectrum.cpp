#include "magspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "magspec/angle.hpp"
#include "magspec/error.hpp"

namespace magspec {

namespace {

double threshold(const MagneticOperator& h, const SolverOptions& opts) {
  return opts.tol * std::max(1.0, h.scale());
}

SpectrumResult finish(const MagneticOperator& h, double lambda, ComplexVector u, long iters, const char* method) {
  u /= u.norm();
  SpectrumResult r;
  r.lambda_min = lambda;
  // ||H v - lambda v||_omega = ||S u - lambda u|| for v = D^{-1} u.
  r.residual = (h.apply_symmetric(u) - lambda * u).norm();
  r.eigenvector = u.cwiseQuotient(h.omega().cast<Complex>());
  r.iterations = iters;
  r.method = method;
  return r;
}

SpectrumResult dense_lowest(const MagneticOperator& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.dense_symmetric());
  return finish(h, es.eigenvalues()[0], es.eigenvectors().col(0), 0, "dense");
}

// Two passes of classical Gram-Schmidt against the first `count` columns.
void orthogonalize(const Eigen::MatrixXcd& basis, int count, ComplexVector& w) {
  for (int pass = 0; pass < 2; ++pass) {
    if (count == 0) return;
    ComplexVector coeffs = basis.leftCols(count).adjoint() * w;
    w -= basis.leftCols(count) * coeffs;
  }
}

ComplexVector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v;
}

// Thick-restart Krylov Rayleigh-Ritz for the smallest eigenpair of S.
SpectrumResult krylov_lowest(const MagneticOperator& h, const SolverOptions& opts) {
  const int n = h.dimension();
  const int m = std::clamp(opts.krylov_dim, 2, n);
  const int keep = std::clamp(opts.keep, 1, m - 1);
  const long cap = opts.max_iterations > 0 ? opts.max_iterations : 10L * n;
  const double thresh = threshold(h, opts);

  std::mt19937_64 rng(opts.seed);
  Eigen::MatrixXcd v(n, m);
  Eigen::MatrixXcd w(n, m);
  ComplexVector start = random_vector(n, rng);
  v.col(0) = start / start.norm();
  int filled = 0;  // columns of v with w = S v computed
  int have = 1;    // orthonormal columns in v
  long matvecs = 0;
  double best = std::numeric_limits<double>::infinity();

  while (true) {
    while (filled < m) {
      w.col(filled) = h.apply_symmetric(v.col(filled));
      ++matvecs;
      ++filled;
      if (have < m && filled == have) {
        ComplexVector next = w.col(filled - 1);
        orthogonalize(v, have, next);
        double nn = next.norm();
        if (nn < 1e-12 * std::max(1.0, h.scale())) {
          // Invariant subspace: continue with a fresh random direction.
          next = random_vector(n, rng);
          orthogonalize(v, have, next);
          nn = next.norm();
        }
        v.col(have++) = next / nn;
      }
    }

    Eigen::MatrixXcd t = v.adjoint() * w;
    t = (0.5 * (t + t.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t);
    const Eigen::MatrixXcd y = es.eigenvectors();
    const double theta = es.eigenvalues()[0];
    ComplexVector x = v * y.col(0);
    ComplexVector sx = w * y.col(0);
    const double res = (sx - theta * x).norm() / x.norm();
    best = std::min(best, res);
    if (res <= thresh) return finish(h, theta, x, matvecs, "krylov");
    if (matvecs >= cap)
      throw Error(Errc::NoConvergence, "iteration cap " + std::to_string(cap) + " reached, best residual " +
                                           std::to_string(best));

    // Keep the lowest Ritz vectors, extend with the residual direction.
    const Eigen::MatrixXcd vk = v * y.leftCols(keep);
    const Eigen::MatrixXcd wk = w * y.leftCols(keep);
    v.leftCols(keep) = vk;
    w.leftCols(keep) = wk;
    ComplexVector r = sx - theta * x;
    orthogonalize(v, keep, r);
    double rn = r.norm();
    if (rn < 1e-14) {
      r = random_vector(n, rng);
      orthogonalize(v, keep, r);
      rn = r.norm();
    }
    v.col(keep) = r / rn;
    filled = keep;
    have = keep + 1;
  }
}

}  // namespace

SpectrumResult lowest_eigenvalue(const MagneticOperator& h, const SolverOptions& opts) {
  if (!(opts.tol > 0.0)) throw Error(Errc::InvalidArgument, "solver tolerance must be positive");
  if (h.dimension() == 0) throw Error(Errc::InvalidArgument, "empty operator");
  if (h.dimension() <= opts.dense_limit || h.dimension() <= 2) return dense_lowest(h);
  return krylov_lowest(h, opts);
}

std::vector<double> dense_spectrum(const MagneticOperator& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.dense_symmetric(), Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumResult field_norm_result(const WeightedGraph& g, std::span<const double> alpha, const SolverOptions& opts) {
  SpectrumResult r = lowest_eigenvalue(assemble_unit_operator(g, alpha), opts);
  r.lambda_min = std::max(0.0, r.lambda_min);
  return r;
}

double field_norm(const WeightedGraph& g, std::span<const double> alpha, const SolverOptions& opts) {
  return field_norm_result(g, alpha, opts).lambda_min;
}

double cyclic_field_norm_closed_form(int n, double holonomy) {
  if (n < 3) throw Error(Errc::InvalidArgument, "cyclic graph needs N >= 3");
  const double delta = angular_distance(holonomy, 0.0);
  return std::norm(Complex(1.0, 0.0) - std::polar(1.0, delta / n));
}

}  // namespace magspec
