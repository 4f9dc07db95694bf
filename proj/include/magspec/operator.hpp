#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "magspec/graph.hpp"

namespace magspec {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// H_{omega,c,A} f(x) = (1/omega_x^2) sum_{y~x} c_xy [f(x) - e^{i alpha_xy} f(y)]
// on l^2_omega. Stored as S = D H D^{-1}, D = diag(omega), which is Hermitian
// for the flat inner product and has the same spectrum.
class MagneticOperator {
 public:
  MagneticOperator(Eigen::SparseMatrix<Complex, Eigen::RowMajor> symmetric, RealVector omega);

  int dimension() const { return static_cast<int>(omega_.size()); }
  const RealVector& omega() const { return omega_; }

  ComplexVector apply(const ComplexVector& f) const;
  ComplexVector apply_symmetric(const ComplexVector& u) const { return s_ * u; }

  // <f, g> = sum omega_x^2 f(x) conj(g(x))
  Complex inner(const ComplexVector& f, const ComplexVector& g) const;
  double norm(const ComplexVector& f) const;

  Eigen::MatrixXcd dense() const;
  Eigen::MatrixXcd dense_symmetric() const { return Eigen::MatrixXcd(s_); }
  const Eigen::SparseMatrix<Complex, Eigen::RowMajor>& symmetric() const { return s_; }

  // Largest diagonal entry; ||H|| <= 2 * scale().
  double scale() const { return scale_; }

 private:
  Eigen::SparseMatrix<Complex, Eigen::RowMajor> s_;
  RealVector omega_;
  double scale_ = 0.0;
};

MagneticOperator assemble_operator(const WeightedGraph& g, std::span<const double> alpha);
inline MagneticOperator assemble_operator(const WeightedGraph& g) {
  return assemble_operator(g, g.potential());
}
// H_{1,1,A}: omega and c replaced by 1.
MagneticOperator assemble_unit_operator(const WeightedGraph& g, std::span<const double> alpha);

// Q_{c,A}(f) = sum over edges of c_xy |f(x) - e^{i alpha_xy} f(y)|^2
double quadratic_form(const WeightedGraph& g, std::span<const double> alpha, const ComplexVector& f);

struct AgmonCheck {
  double lhs = 0.0;       // <f v, (H - lambda)(f v)>
  double rhs = 0.0;       // 1/2 sum_x sum_{y~x} Re[v(x) conj(v(y)) C_yx] (f(x) - f(y))^2
  double residual = 0.0;  // ||(H - lambda) v||_omega

  bool holds(double rel_tol = 1e-9) const;
};

// Requires (H - lambda) v = 0 up to residual_tol * max(1, scale) * ||v||;
// throws NotASolution otherwise. f is real.
AgmonCheck agmon_identity_check(const WeightedGraph& g, std::span<const double> alpha, double lambda,
                                const ComplexVector& v, const RealVector& f, double residual_tol = 1e-10);

}  // namespace magspec
