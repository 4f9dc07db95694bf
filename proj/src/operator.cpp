#include "magspec/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "magspec/error.hpp"

namespace magspec {

MagneticOperator::MagneticOperator(Eigen::SparseMatrix<Complex, Eigen::RowMajor> symmetric, RealVector omega)
    : s_(std::move(symmetric)), omega_(std::move(omega)) {
  s_.makeCompressed();
  for (int i = 0; i < s_.rows(); ++i) scale_ = std::max(scale_, std::abs(s_.coeff(i, i)));
}

ComplexVector MagneticOperator::apply(const ComplexVector& f) const {
  ComplexVector u = omega_.cast<Complex>().cwiseProduct(f);
  ComplexVector su = s_ * u;
  return su.cwiseQuotient(omega_.cast<Complex>());
}

Complex MagneticOperator::inner(const ComplexVector& f, const ComplexVector& g) const {
  Complex sum = 0.0;
  for (int i = 0; i < dimension(); ++i) sum += omega_[i] * omega_[i] * f[i] * std::conj(g[i]);
  return sum;
}

double MagneticOperator::norm(const ComplexVector& f) const { return std::sqrt(std::real(inner(f, f))); }

Eigen::MatrixXcd MagneticOperator::dense() const {
  const RealVector inv = omega_.cwiseInverse();
  return inv.asDiagonal() * Eigen::MatrixXcd(s_) * omega_.asDiagonal();
}

namespace {

MagneticOperator assemble(const WeightedGraph& g, std::span<const double> alpha, bool unit) {
  if (static_cast<int>(alpha.size()) != g.num_edges())
    throw Error(Errc::InvalidArgument, "potential size does not match the edge count");
  const int n = g.num_vertices();
  RealVector omega(n);
  for (int i = 0; i < n; ++i) omega[i] = unit ? 1.0 : g.omega(i);
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(n + 2 * g.num_edges());
  std::vector<double> diag(n, 0.0);
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    const double c = unit ? 1.0 : ed.c;
    const double denom = omega[ed.lo] * omega[ed.hi];
    const Complex phase = std::polar(1.0, alpha[e]);
    trip.emplace_back(ed.lo, ed.hi, -c * phase / denom);
    trip.emplace_back(ed.hi, ed.lo, -c * std::conj(phase) / denom);
    diag[ed.lo] += c;
    diag[ed.hi] += c;
  }
  for (int i = 0; i < n; ++i) trip.emplace_back(i, i, diag[i] / (omega[i] * omega[i]));
  Eigen::SparseMatrix<Complex, Eigen::RowMajor> s(n, n);
  s.setFromTriplets(trip.begin(), trip.end());
  return MagneticOperator(std::move(s), std::move(omega));
}

}  // namespace

MagneticOperator assemble_operator(const WeightedGraph& g, std::span<const double> alpha) {
  return assemble(g, alpha, false);
}

MagneticOperator assemble_unit_operator(const WeightedGraph& g, std::span<const double> alpha) {
  return assemble(g, alpha, true);
}

double quadratic_form(const WeightedGraph& g, std::span<const double> alpha, const ComplexVector& f) {
  if (f.size() != g.num_vertices()) throw Error(Errc::InvalidArgument, "function size does not match the graph");
  double q = 0.0;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    q += ed.c * std::norm(f[ed.lo] - std::polar(1.0, alpha[e]) * f[ed.hi]);
  }
  return q;
}

bool AgmonCheck::holds(double rel_tol) const {
  return std::abs(lhs - rhs) <= rel_tol * std::max(1.0, std::abs(lhs));
}

AgmonCheck agmon_identity_check(const WeightedGraph& g, std::span<const double> alpha, double lambda,
                                const ComplexVector& v, const RealVector& f, double residual_tol) {
  const int n = g.num_vertices();
  if (v.size() != n || f.size() != n) throw Error(Errc::InvalidArgument, "vector size does not match the graph");
  const MagneticOperator h = assemble_operator(g, alpha);

  AgmonCheck out;
  out.residual = h.norm(h.apply(v) - lambda * v);
  const double bound = residual_tol * std::max(1.0, h.scale()) * std::max(1.0, h.norm(v));
  if (!(out.residual <= bound))
    throw Error(Errc::NotASolution, "residual " + std::to_string(out.residual) + " exceeds " + std::to_string(bound));

  const ComplexVector fv = f.cast<Complex>().cwiseProduct(v);
  const ComplexVector hfv = h.apply(fv) - lambda * fv;
  out.lhs = std::real(h.inner(fv, hfv));

  // The (x,y) and (y,x) terms of the double sum are complex conjugates with
  // equal real part, so each unordered edge contributes one full term.
  double rhs = 0.0;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    const double df = f[ed.lo] - f[ed.hi];
    // C_yx = c e^{i alpha_yx} with x = lo, y = hi.
    const Complex c_yx = ed.c * std::polar(1.0, -alpha[e]);
    rhs += std::real(v[ed.lo] * std::conj(v[ed.hi]) * c_yx) * df * df;
  }
  out.rhs = rhs;
  return out;
}

}  // namespace magspec
