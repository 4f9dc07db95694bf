#include "magspec/esa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magspec/error.hpp"
#include "magspec/ladder.hpp"
#include "magspec/metric.hpp"

namespace magspec {

CoveringRule ball_rule(int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "ball radius must be >= 1");
  return {"k-ball(" + std::to_string(k) + ")", k, [k](const WeightedGraph& g) { return ball_covering(g, k); }};
}

CoveringRule ladder_square_rule() {
  return {"ladder-squares", 1, [](const WeightedGraph& g) {
            int rungs = 0;
            for (VertexId id : g.ids()) rungs = std::max(rungs, ladder_rung(id));
            return ladder_square_covering(rungs);
          }};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SatisfiedAtR: return "SATISFIED_AT_R";
    case Verdict::NotSatisfiedAtR: return "NOT_SATISFIED_AT_R";
    case Verdict::CompleteMetric: return "COMPLETE_METRIC";
  }
  return "SATISFIED_AT_R";
}

EsaReport criterion_check(const GraphFamily& family, int radius, const CoveringRule& rule,
                          const SolverOptions& opts, int threads) {
  if (radius < 4 * rule.reach)
    throw Error(Errc::InvalidArgument, "criterion check needs R >= 4k (R=" + std::to_string(radius) + ")");
  const Truncation t = truncate(family, radius);
  const WeightedGraph& g = t.graph;

  EsaReport report;
  report.family = family.name;
  report.covering = rule.name;
  report.radius = radius;
  report.core_radius = std::max(1, radius - std::max((radius + 1) / 2, 2 * rule.reach));
  report.max_degree = degree_bound(g);
  report.frontier_empty = t.frontier.empty();

  const GoodCovering cover = rule.build(g);
  report.covering_degree = cover.declared_degree;
  const EffectivePotential w = effective_potential(g, cover, g.potential(), opts, threads);
  const std::vector<double> dist = distances_to_frontier(g, t.frontier);

  const Truncation core = truncate(family, report.core_radius);
  const Truncation inner = truncate(family, std::max(1, report.core_radius / 2));
  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  report.sup_deficit = report.inner_sup_deficit = report.outer_sup_deficit = neg_inf;
  const double n = report.max_degree;
  for (VertexId id : core.graph.ids()) {
    const int x = g.index(id);
    EsaRow row;
    row.vertex = id;
    row.w = w.w[x];
    row.distance = dist[x];
    const double pressure = std::isinf(row.distance)    ? 0.0
                            : row.distance == 0.0       ? std::numeric_limits<double>::infinity()
                                                        : n / (2.0 * row.distance * row.distance);
    row.deficit = pressure - row.w;
    report.sup_deficit = std::max(report.sup_deficit, row.deficit);
    if (inner.graph.contains(id))
      report.inner_sup_deficit = std::max(report.inner_sup_deficit, row.deficit);
    else
      report.outer_sup_deficit = std::max(report.outer_sup_deficit, row.deficit);
    report.rows.push_back(row);
  }
  report.margin = std::max(0.0, report.sup_deficit);

  if (report.frontier_empty) {
    report.verdict = Verdict::SatisfiedAtR;
  } else if (family.metric_complete.value_or(false)) {
    report.verdict = Verdict::CompleteMetric;
  } else {
    const double slack = 1e-12 * std::max(1.0, std::abs(report.inner_sup_deficit));
    const bool climbing = report.outer_sup_deficit > 0.0 &&
                          report.outer_sup_deficit > report.inner_sup_deficit + slack;
    report.verdict = climbing ? Verdict::NotSatisfiedAtR : Verdict::SatisfiedAtR;
  }
  return report;
}

namespace {

nlohmann::json number_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

nlohmann::json esa_report_to_json(const EsaReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"vertex", r.vertex},
                    {"W", r.w},
                    {"D_R", number_or_string(r.distance)},
                    {"deficit", number_or_string(r.deficit)}});
  }
  return {{"family", report.family},
          {"covering", report.covering},
          {"covering_degree", report.covering_degree},
          {"radius", report.radius},
          {"core_radius", report.core_radius},
          {"max_degree", report.max_degree},
          {"frontier_empty", report.frontier_empty},
          {"sup_deficit", number_or_string(report.sup_deficit)},
          {"inner_sup_deficit", number_or_string(report.inner_sup_deficit)},
          {"outer_sup_deficit", number_or_string(report.outer_sup_deficit)},
          {"margin", number_or_string(report.margin)},
          {"verdict", std::string(verdict_name(report.verdict))},
          {"note", "evidence at truncation radius R; not a proof about the infinite operator"},
          {"rows", std::move(rows)}};
}

}  // namespace magspec
