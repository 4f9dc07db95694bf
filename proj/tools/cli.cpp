#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>
#include <openssl/evp.h>

#include "magspec/angle.hpp"
#include "magspec/covering.hpp"
#include "magspec/cycles.hpp"
#include "magspec/error.hpp"
#include "magspec/esa.hpp"
#include "magspec/graph_io.hpp"
#include "magspec/ladder.hpp"
#include "magspec/metric.hpp"
#include "magspec/spectrum.hpp"

namespace magspec::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string out;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  bool record_time = false;
};

std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

class RunContext {
 public:
  RunContext(const std::vector<std::string>& args, const CommonOptions& common, std::ostream& out)
      : args_(args), common_(common), out_(out), start_(std::chrono::steady_clock::now()) {}

  SolverOptions solver() const {
    SolverOptions opts;
    opts.tol = common_.tol;
    opts.seed = 0x5EED ^ common_.seed;
    return opts;
  }

  WeightedGraph graph_input(const std::string& path) {
    WeightedGraph g = load_graph(path);
    inputs_.push_back({{"path", path}, {"kind", "graph"}, {"sha256", sha256_hex(canonical_graph_text(g))}});
    return g;
  }

  GoodCovering covering_input(const std::string& path) {
    GoodCovering cover = load_covering(path);
    inputs_.push_back({{"path", path}, {"kind", "covering"}, {"sha256", sha256_hex(covering_to_json(cover).dump())}});
    return cover;
  }

  json manifest() const {
    json m = {{"tool", "magspec"},
              {"version", kVersion},
              {"command_line", args_},
              {"inputs", inputs_.empty() ? json::array() : json(inputs_)},
              {"solver", {{"tol", common_.tol}, {"dense_limit", SolverOptions{}.dense_limit}}},
              {"seeds", {{"seed", common_.seed}, {"solver_seed", solver().seed}}}};
    if (common_.record_time) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      m["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    return m;
  }

  // CSV reports carry the manifest as a leading comment line.
  std::string csv_header() const { return "# manifest: " + manifest().dump() + "\n"; }

  void emit_json(json report) {
    report["manifest"] = manifest();
    emit(report.dump(2) + "\n");
  }

  void emit(const std::string& text) {
    if (common_.out.empty()) {
      out_ << text;
      out_.flush();
      return;
    }
    std::ofstream file(common_.out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + common_.out);
    file << text;
    if (!file) throw std::runtime_error("write failed for " + common_.out);
  }

 private:
  std::vector<std::string> args_;
  CommonOptions common_;
  std::ostream& out_;
  std::vector<json> inputs_;
  std::chrono::steady_clock::time_point start_;
};

void add_common(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--out", common.out, "Write the report to this file");
  sub->add_option("--seed", common.seed, "Seed for randomized internals");
  sub->add_option("--tol", common.tol, "Eigensolver residual tolerance")->check(CLI::PositiveNumber);
  sub->add_flag("--record-time", common.record_time, "Embed wall time in the manifest");
}

std::vector<VertexId> parse_cycle(const std::string& text) {
  std::vector<VertexId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex id in --cycle: '" + item + "'");
    }
  }
  if (ids.size() < 2) throw UsageError("--cycle needs at least two vertices");
  return ids;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range must look like FIRST:LAST");
  try {
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "'");
  }
}

json validation_to_json(const CoveringValidation& v) {
  json uncovered = json::array();
  for (const auto& [a, b] : v.uncovered_edges) uncovered.push_back({a, b});
  return {{"is_good", v.is_good},
          {"empirical_max_multiplicity", v.empirical_max_multiplicity},
          {"uncovered_edges", uncovered},
          {"uncovered_vertices", v.uncovered_vertices},
          {"disconnected_subgraphs", v.disconnected_subgraphs},
          {"malformed_subgraphs", v.malformed_subgraphs}};
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NoConvergence:
    case Errc::GeneratorFailure:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

}  // namespace

double parse_angle(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  auto parse_number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad angle '" + raw + "'");
    }
    if (used != s.size()) throw UsageError("bad angle '" + raw + "'");
    return v;
  };
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return parse_number(text);
  std::string coef = text.substr(0, pos);
  std::string rest = text.substr(pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double factor = 1.0;
  if (coef == "-") factor = -1.0;
  else if (coef == "+" || coef.empty()) factor = 1.0;
  else factor = parse_number(coef);
  double den = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw UsageError("bad angle '" + raw + "'");
    den = parse_number(rest.substr(1));
    if (den == 0.0) throw UsageError("bad angle '" + raw + "'");
  }
  return factor * kPi / den;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral toolkit for magnetic Schroedinger operators on weighted graphs", "magspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  CommonOptions common;

  std::string graph_path;
  std::string cycle_text;
  std::string cover_path;
  int k = 1;
  std::string family = "ladder";
  double a = 1.5;
  double b = 0.5;
  std::string omega_text = "pi";
  int radius = 100;
  std::string covering_name;
  std::string sweep;
  VertexId base = 0;
  bool dense = false;

  auto* bnorm = app.add_subcommand("bnorm", "Field norm |B|: lowest eigenvalue of H_{1,1,A}");
  bnorm->add_option("graph", graph_path, "Graph JSON")->required();
  add_common(bnorm, common);

  auto* spectrum = app.add_subcommand("spectrum", "Full spectrum of H_{omega,c,A} as CSV");
  spectrum->add_option("graph", graph_path, "Graph JSON")->required();
  spectrum->add_flag("--dense", dense, "Dense eigendecomposition (the only mode)");
  add_common(spectrum, common);

  auto* hol = app.add_subcommand("holonomy", "Holonomy of a closed walk");
  hol->add_option("graph", graph_path, "Graph JSON")->required();
  hol->add_option("--cycle", cycle_text, "Comma separated vertex ids, closing edge implied")->required();
  add_common(hol, common);

  auto* gauge = app.add_subcommand("gauge-reduce", "Gauge reducing the potential to the cycle basis");
  gauge->add_option("graph", graph_path, "Graph JSON")->required();
  add_common(gauge, common);

  auto* cover = app.add_subcommand("cover", "k-ball good covering");
  cover->add_option("graph", graph_path, "Graph JSON")->required();
  cover->add_option("--k", k, "Ball radius")->check(CLI::PositiveNumber);
  add_common(cover, common);

  auto* effpot = app.add_subcommand("effective-potential", "Effective potential W per vertex as CSV");
  effpot->add_option("graph", graph_path, "Graph JSON")->required();
  effpot->add_option("--cover", cover_path, "Covering JSON")->required();
  add_common(effpot, common);

  auto* esa = app.add_subcommand("esa-check", "Self-adjointness criterion at a truncation radius");
  esa->add_option("--family", family, "ladder or graph")->check(CLI::IsMember({"ladder", "graph"}));
  esa->add_option("--graph", graph_path, "Graph JSON for --family graph");
  esa->add_option("--base", base, "Base vertex for --family graph");
  esa->add_option("--a", a, "Ladder exponent of C_l = l^a");
  esa->add_option("--b", b, "Ladder exponent of w_l = l^-b");
  esa->add_option("--omega", omega_text, "Holonomy per square (number or pi expression)");
  esa->add_option("--radius", radius, "Truncation radius")->check(CLI::PositiveNumber);
  esa->add_option("--covering", covering_name, "squares or k-ball (default: squares for ladders)")
      ->check(CLI::IsMember({"squares", "k-ball"}));
  esa->add_option("--k", k, "Ball radius for k-ball coverings")->check(CLI::PositiveNumber);
  add_common(esa, common);

  auto* ladder = app.add_subcommand("ladder", "Ladder sweep table as CSV");
  ladder->add_option("--a", a, "Exponent of C_l = l^a");
  ladder->add_option("--b", b, "Exponent of w_l = l^-b");
  ladder->add_option("--omega", omega_text, "Holonomy per square");
  ladder->add_option("--radius", radius, "Truncation radius")->check(CLI::PositiveNumber);
  ladder->add_option("--sweep-l", sweep, "FIRST:LAST (default 1:R/2)");
  add_common(ladder, common);

  auto* validate = app.add_subcommand("validate", "Validate a graph file");
  validate->add_option("graph", graph_path, "Graph JSON")->required();
  add_common(validate, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    RunContext ctx(args, common, out);
    if (*bnorm) {
      const WeightedGraph g = ctx.graph_input(graph_path);
      const SpectrumResult r = field_norm_result(g, g.potential(), ctx.solver());
      ctx.emit_json({{"lambda_min", r.lambda_min},
                     {"residual", r.residual},
                     {"iterations", r.iterations},
                     {"method", r.method}});
    } else if (*spectrum) {
      const WeightedGraph g = ctx.graph_input(graph_path);
      const std::vector<double> ev = dense_spectrum(assemble_operator(g));
      std::string csv = ctx.csv_header() + "index,eigenvalue\n";
      for (std::size_t i = 0; i < ev.size(); ++i) csv += fmt::format("{},{}\n", i, num(ev[i]));
      ctx.emit(csv);
    } else if (*hol) {
      const WeightedGraph g = ctx.graph_input(graph_path);
      const Cycle cycle{parse_cycle(cycle_text)};
      ctx.emit(num(holonomy(g, cycle)) + "\n");
    } else if (*gauge) {
      const WeightedGraph g = ctx.graph_input(graph_path);
      const GaugeReduction r = gauge_reduce(g, g.potential());
      const CycleBasis basis = cycle_basis(g);
      json sigma = json::array();
      for (int i = 0; i < g.num_vertices(); ++i) sigma.push_back({{"id", g.id(i)}, {"sigma", r.gauge.sigma[i]}});
      json alpha = json::array();
      for (int e = 0; e < g.num_edges(); ++e) {
        alpha.push_back({{"u", g.id(g.edge(e).lo)},
                         {"v", g.id(g.edge(e).hi)},
                         {"alpha", r.reduced[e]},
                         {"tree", basis.tree.in_tree[e] != 0}});
      }
      ctx.emit_json({{"root", basis.tree.root}, {"sigma", sigma}, {"alpha_reduced", alpha}});
    } else if (*cover) {
      const WeightedGraph g = ctx.graph_input(graph_path);
      const GoodCovering c = ball_covering(g, k);
      json report = covering_to_json(c);
      report["validation"] = validation_to_json(validate_covering(g, c));
      ctx.emit_json(std::move(report));
    } else if (*effpot) {
      const WeightedGraph g = ctx.graph_input(graph_path);
      const GoodCovering c = ctx.covering_input(cover_path);
      const CoveringValidation v = validate_covering(g, c);
      if (!v.is_good) {
        err << "covering is not a good covering of degree " << c.declared_degree << ": "
            << validation_to_json(v).dump() << "\n";
        return kExitValidation;
      }
      const EffectivePotential w = effective_potential(g, c, g.potential(), ctx.solver());
      std::string csv = ctx.csv_header() + "vertex,W,ball_count\n";
      for (int x = 0; x < g.num_vertices(); ++x)
        csv += fmt::format("{},{},{}\n", g.id(x), num(w.w[x]), w.member_count[x]);
      ctx.emit(csv);
    } else if (*esa) {
      GraphFamily fam;
      CoveringRule rule;
      json params;
      if (family == "ladder") {
        const LadderParams p{a, b, parse_angle(omega_text)};
        fam = ladder_family(p);
        rule = covering_name == "k-ball" ? ball_rule(k) : ladder_square_rule();
        params = {{"a", p.a}, {"b", p.b}, {"omega", p.holonomy}};
      } else {
        if (graph_path.empty()) throw UsageError("--family graph needs --graph");
        if (covering_name == "squares") throw UsageError("square covering is only defined for ladders");
        fam = finite_family(ctx.graph_input(graph_path), base);
        rule = ball_rule(k);
        params = {{"base", base}};
      }
      const EsaReport report = criterion_check(fam, radius, rule, ctx.solver());
      json j = esa_report_to_json(report);
      j["parameters"] = params;
      ctx.emit_json(std::move(j));
    } else if (*ladder) {
      const LadderParams p{a, b, parse_angle(omega_text)};
      int first = 1;
      int last = std::max(1, radius / 2);
      if (!sweep.empty()) std::tie(first, last) = parse_range(sweep);
      if (first < 1 || last > radius || first > last) throw UsageError("--sweep-l must satisfy 1 <= FIRST <= LAST <= R");
      const GraphFamily fam = ladder_family(p);
      const Truncation t = truncate(fam, radius);
      const GoodCovering c = ladder_square_covering(radius);
      const EffectivePotential w = effective_potential(t.graph, c, t.graph.potential(), ctx.solver());
      const std::vector<double> dist = distances_to_frontier(t.graph, t.frontier);
      const double n = degree_bound(t.graph);
      std::string csv = ctx.csv_header() + "l,W_literal,W_simplified,D_R,deficit\n";
      for (int l = first; l <= last; ++l) {
        const int x = t.graph.index(ladder_vertex(l - 1, -1));
        const LadderClosedForms cf = ladder_closed_forms(p, l, radius);
        const double d = dist[x];
        const double deficit = n / (2.0 * d * d) - w.w[x];
        csv += fmt::format("{},{},{},{},{}\n", l, num(w.w[x]), num(cf.w_simplified), num(d), num(deficit));
      }
      ctx.emit(csv);
    } else if (*validate) {
      const WeightedGraph g = ctx.graph_input(graph_path);
      ctx.emit_json({{"valid", true},
                     {"vertices", g.num_vertices()},
                     {"edges", g.num_edges()},
                     {"max_degree", degree_bound(g)},
                     {"cycle_rank", g.num_edges() - g.num_vertices() + 1}});
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace magspec::cli
