#include "magspec/ladder.hpp"

#include <cmath>
#include <string>

#include "magspec/error.hpp"
#include "magspec/spectrum.hpp"

namespace magspec {

VertexId ladder_vertex(int rung, int rail) { return 2 * static_cast<VertexId>(rung) + (rail > 0 ? 1 : 0); }
int ladder_rung(VertexId id) { return static_cast<int>(id / 2); }
int ladder_rail(VertexId id) { return id % 2 == 1 ? 1 : -1; }

double ladder_c(const LadderParams& p, int l) { return std::pow(static_cast<double>(l), p.a); }
double ladder_omega(const LadderParams& p, int l) { return std::pow(static_cast<double>(l), -p.b); }

Cycle ladder_square(int rung) {
  return Cycle{{ladder_vertex(rung, 1), ladder_vertex(rung + 1, 1), ladder_vertex(rung + 1, -1),
                ladder_vertex(rung, -1)}};
}

std::vector<Cycle> ladder_squares(int radius) {
  std::vector<Cycle> out;
  for (int j = 0; j < radius; ++j) out.push_back(ladder_square(j));
  return out;
}

namespace {

void check_params(const LadderParams& p) {
  if (!(p.a >= 0.0) || !(p.b >= 0.0) || !std::isfinite(p.a) || !std::isfinite(p.b))
    throw Error(Errc::InvalidArgument, "ladder exponents must be finite and >= 0");
  if (!std::isfinite(p.holonomy)) throw Error(Errc::InvalidArgument, "ladder holonomy must be finite");
}

Truncation build_ladder(const LadderParams& p, int radius) {
  RawGraph raw;
  for (int j = 0; j <= radius; ++j) {
    const double w = ladder_omega(p, j + 1);
    raw.vertices.push_back({ladder_vertex(j, -1), w});
    raw.vertices.push_back({ladder_vertex(j, 1), w});
  }
  for (int j = 0; j <= radius; ++j) {
    const double c = ladder_c(p, j + 1);
    raw.edges.push_back({ladder_vertex(j, -1), ladder_vertex(j, 1), c, 0.0});
    if (j < radius) {
      raw.edges.push_back({ladder_vertex(j, -1), ladder_vertex(j + 1, -1), c, 0.0});
      // Reference potential: the whole flux on the upper rail.
      raw.edges.push_back({ladder_vertex(j, 1), ladder_vertex(j + 1, 1), c, p.holonomy});
    }
  }
  const WeightedGraph reference = build_graph(raw);
  // Realize the same field from basis targets, zero on the BFS tree.
  const CycleBasis basis = cycle_basis(reference);
  const std::vector<double> targets = basis_holonomies(reference, basis, reference.potential());
  const Potential alpha = potential_from_holonomy(reference, basis, targets);
  return Truncation{reference.with_potential(alpha), {ladder_vertex(radius, -1), ladder_vertex(radius, 1)}};
}

}  // namespace

GraphFamily ladder_family(const LadderParams& p) {
  check_params(p);
  GraphFamily family;
  family.name = "ladder(a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b) + ")";
  family.base_vertex = ladder_vertex(0, -1);
  family.metric_complete = ladder_regime(p) == LadderRegime::Complete;
  family.generator = [p](int radius) { return build_ladder(p, radius); };
  return family;
}

GoodCovering ladder_square_covering(int radius) {
  GoodCovering cover;
  cover.declared_degree = 2;
  cover.provenance = "user";
  for (int j = 0; j < radius; ++j) {
    const Cycle sq = ladder_square(j);
    CoveringSubgraph sub;
    sub.vertices = sq.vertices;
    for (std::size_t i = 0; i < 4; ++i) sub.edges.emplace_back(sq.vertices[i], sq.vertices[(i + 1) % 4]);
    cover.subgraphs.push_back(std::move(sub));
  }
  return cover;
}

std::string_view regime_name(LadderRegime r) {
  switch (r) {
    case LadderRegime::Complete: return "COMPLETE";
    case LadderRegime::EsaByCriterion: return "ESA_BY_CRITERION";
    case LadderRegime::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

LadderRegime ladder_regime(const LadderParams& p) {
  check_params(p);
  if (p.b + 0.5 * p.a <= 1.0) return LadderRegime::Complete;
  if (p.b > 0.0 && p.b < 1.0) return LadderRegime::EsaByCriterion;
  return LadderRegime::Undecided;
}

LadderClosedForms ladder_closed_forms(const LadderParams& p, int l, int radius) {
  check_params(p);
  if (l < 1 || l > radius) throw Error(Errc::InvalidArgument, "need 1 <= l <= R");
  LadderClosedForms out;
  out.l = l;
  out.rail_length = ladder_omega(p, l + 1) / std::sqrt(ladder_c(p, l));
  for (int m = radius; m >= l; --m) out.tail_sum += ladder_omega(p, m + 1) / std::sqrt(ladder_c(p, m));
  out.square_norm = cyclic_field_norm_closed_form(4, p.holonomy);
  out.w_simplified = 0.5 * out.square_norm * ladder_c(p, l);
  // Rung l lies in squares l-1 and l (only in square l when l = 1); with C
  // nondecreasing the smallest weight of square m is C_m.
  const double left = l > 1 ? ladder_c(p, l - 1) : 0.0;
  out.w_square_covering = 0.5 * out.square_norm * (left + ladder_c(p, l));
  out.distance_exponent = 1.0 - p.b - 0.5 * p.a;
  out.regime = ladder_regime(p);
  out.known_not_esa_without_field = p.a > 2.0;
  return out;
}

}  // namespace magspec
