#pragma once

#include <cmath>
#include <numbers>

namespace magspec {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tolerance for angle comparisons modulo 2*pi.
inline constexpr double kAngleTol = 1e-12;

// Canonical representative in (-pi, pi].
inline double normalize_angle(double theta) {
  double r = std::remainder(theta, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

// min_k |a - b - 2 pi k|
inline double angular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

inline bool same_angle(double a, double b, double tol = kAngleTol) {
  return angular_distance(a, b) <= tol;
}

}  // namespace magspec
