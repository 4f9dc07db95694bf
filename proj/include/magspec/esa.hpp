#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "magspec/covering.hpp"
#include "magspec/family.hpp"
#include "magspec/spectrum.hpp"

namespace magspec {

struct CoveringRule {
  std::string name;
  int reach = 1;  // combinatorial radius of the covering pieces
  std::function<GoodCovering(const WeightedGraph&)> build;
};

CoveringRule ball_rule(int k);
// Square covering of a ladder truncation (degree 2).
CoveringRule ladder_square_rule();

enum class Verdict {
  SatisfiedAtR,     // W >= N/(2 D_R^2) - M on the examined core
  NotSatisfiedAtR,  // deficit still climbing toward the frontier
  CompleteMetric,   // d_p complete: criterion holds by completeness
};

std::string_view verdict_name(Verdict v);

struct EsaRow {
  VertexId vertex = 0;
  double w = 0.0;
  double distance = 0.0;  // D_R(x), +infinity without frontier
  double deficit = 0.0;   // N/(2 D_R^2) - W
};

// Evidence at truncation radius R, not a statement about the infinite operator.
struct EsaReport {
  std::string family;
  std::string covering;
  int radius = 0;
  int core_radius = 0;
  int max_degree = 0;
  int covering_degree = 0;
  bool frontier_empty = false;
  std::vector<EsaRow> rows;  // core vertices, ascending id
  double sup_deficit = 0.0;
  double inner_sup_deficit = 0.0;
  double outer_sup_deficit = 0.0;
  double margin = 0.0;  // M = max(0, sup_deficit)
  Verdict verdict = Verdict::SatisfiedAtR;
};

// Requires R >= 4 * rule.reach. The core is G_{R - max(ceil(R/2), 2 reach)}.
EsaReport criterion_check(const GraphFamily& family, int radius, const CoveringRule& rule,
                          const SolverOptions& opts = {}, int threads = 0);

nlohmann::json esa_report_to_json(const EsaReport& report);

}  // namespace magspec
