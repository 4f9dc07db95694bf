#pragma once

#include <string_view>
#include <vector>

#include "magspec/angle.hpp"
#include "magspec/covering.hpp"
#include "magspec/cycles.hpp"
#include "magspec/family.hpp"

namespace magspec {

// Ladder N x {-1, 1}. Rung j >= 0 carries weights with index l = j + 1:
// C_l = l^a on the rung's vertical edge and on the horizontal edges to rung
// j + 1, omega = w_l = l^{-b} on both of its vertices.
struct LadderParams {
  double a = 1.5;
  double b = 0.5;
  double holonomy = kPi;  // per square cycle
};

VertexId ladder_vertex(int rung, int rail);  // rail is -1 or +1
int ladder_rung(VertexId id);
int ladder_rail(VertexId id);

double ladder_c(const LadderParams& p, int l);      // C_l
double ladder_omega(const LadderParams& p, int l);  // w_l

// Truncation R: rungs 0..R, frontier = rung R. Each square cycle carries the
// requested holonomy through a potential built from basis targets.
GraphFamily ladder_family(const LadderParams& p);

// gamma_j = [(j,+1),(j+1,+1)] + [(j+1,+1),(j+1,-1)] + [(j+1,-1),(j,-1)] + [(j,-1),(j,+1)]
Cycle ladder_square(int rung);
std::vector<Cycle> ladder_squares(int radius);

// The squares as a good covering of degree 2.
GoodCovering ladder_square_covering(int radius);

enum class LadderRegime {
  Complete,        // d_p complete: criterion holds by completeness
  EsaByCriterion,  // incomplete, 0 < b < 1
  Undecided,       // incomplete, b outside (0, 1)
};

std::string_view regime_name(LadderRegime r);

// Incomplete iff b + a/2 > 1: rail lengths decay like l^{-(b + a/2)}.
LadderRegime ladder_regime(const LadderParams& p);

struct LadderClosedForms {
  int l = 1;
  double rail_length = 0.0;        // w_{l+1} / sqrt(C_l)
  double tail_sum = 0.0;           // sum_{m=l}^{R} w_{m+1} / sqrt(C_m)
  double square_norm = 0.0;        // |B| of one square
  double w_simplified = 0.0;       // |B|/2 * C_l, i.e. (1 - sqrt(2)/2) C_l at holonomy pi
  double w_square_covering = 0.0;  // literal effective potential of the square covering
  double distance_exponent = 0.0;  // D(l) ~ l^{1 - b - a/2}
  LadderRegime regime = LadderRegime::Undecided;
  bool known_not_esa_without_field = false;  // a > 2, reported from the literature
};

// 1 <= l <= R.
LadderClosedForms ladder_closed_forms(const LadderParams& p, int l, int radius);

}  // namespace magspec
