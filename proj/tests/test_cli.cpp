#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "magspec/angle.hpp"
#include "magspec/graph_io.hpp"
#include "support/test_graphs.hpp"

using namespace magspec;
using namespace magspec::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "magspec");
  std::ostringstream out, err;
  Run r;
  r.code = cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "magspec_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_json(const std::string& name, const nlohmann::json& j) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << j.dump(2);
  return p.string();
}

}  // namespace

TEST_CASE("parse_angle") {
  CHECK(cli::parse_angle("pi") == kPi);
  CHECK(cli::parse_angle("-pi/2") == doctest::Approx(-kPi / 2));
  CHECK(cli::parse_angle("0.5*pi") == doctest::Approx(kPi / 2));
  CHECK(cli::parse_angle("3pi/4") == doctest::Approx(3 * kPi / 4));
  CHECK(cli::parse_angle("1.25") == 1.25);
  CHECK_THROWS_AS(cli::parse_angle("pie"), std::runtime_error);
  CHECK_THROWS_AS(cli::parse_angle("pi/0"), std::runtime_error);
  CHECK_THROWS_AS(cli::parse_angle("abc"), std::runtime_error);
}

TEST_CASE("bnorm reports the field norm of a square with flux pi") {
  const std::string g = write_json("square.json", graph_to_json(cycle_graph(4, kPi, false)));
  const Run r = run({"bnorm", g});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lambda_min"].get<double>() == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
  CHECK(j["manifest"]["tool"] == "magspec");
  CHECK(j["manifest"]["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK_FALSE(j["manifest"].contains("wall_time_ms"));
  const auto timed = nlohmann::json::parse(run({"bnorm", g, "--record-time"}).out);
  CHECK(timed["manifest"].contains("wall_time_ms"));
}

TEST_CASE("holonomy and gauge-reduce") {
  const std::string g = write_json("square_spread.json", graph_to_json(cycle_graph(4, kPi)));
  const Run h = run({"holonomy", g, "--cycle", "0,1,2,3"});
  REQUIRE(h.code == 0);
  CHECK(std::stod(h.out) == doctest::Approx(kPi));
  CHECK(run({"holonomy", g, "--cycle", "0,2"}).code == cli::kExitValidation);
  CHECK(run({"holonomy", g, "--cycle", "0,x"}).code == cli::kExitUsage);

  const Run red = run({"gauge-reduce", g});
  REQUIRE(red.code == 0);
  int nontree = 0;
  const auto report = nlohmann::json::parse(red.out);
  for (const auto& e : report["alpha_reduced"]) {
    if (e["tree"].get<bool>()) {
      CHECK(e["alpha"].get<double>() == 0.0);
    } else {
      ++nontree;
      CHECK(std::abs(e["alpha"].get<double>()) == doctest::Approx(kPi));
    }
  }
  CHECK(nontree == 1);
}

TEST_CASE("validate reports bad weights with exit code 2") {
  nlohmann::json bad = {{"vertices", {{{"id", 0}}, {{"id", 1}}}},
                        {"edges", {{{"u", 0}, {"v", 1}, {"c", 0.0}}}}};
  const Run r = run({"validate", write_json("bad.json", bad)});
  CHECK(r.code == cli::kExitValidation);
  CHECK(r.err.find("NonPositiveWeight") != std::string::npos);
  CHECK(r.err.find("{0,1}") != std::string::npos);

  const Run missing = run({"validate", (scratch() / "does_not_exist.json").string()});
  CHECK(missing.code == cli::kExitValidation);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"bnorm"}).code == cli::kExitUsage);
  CHECK(run({"ladder", "--sweep-l", "5:1"}).code == cli::kExitUsage);
  CHECK(run({"esa-check", "--family", "graph"}).code == cli::kExitUsage);
  CHECK(run({"--version"}).code == cli::kExitOk);
}

TEST_CASE("cover and effective-potential") {
  const std::string g = write_json("grid.json", graph_to_json(triangulated_grid(3, 4)));
  const Run c = run({"cover", g, "--k", "1"});
  REQUIRE(c.code == 0);
  const auto cover = nlohmann::json::parse(c.out);
  CHECK(cover["validation"]["is_good"].get<bool>());
  const std::string cover_path = write_json("grid_cover.json", cover);
  const Run w = run({"effective-potential", g, "--cover", cover_path});
  REQUIRE(w.code == 0);
  CHECK(w.out.rfind("# manifest: ", 0) == 0);
  CHECK(w.out.find("vertex,W,ball_count\n") != std::string::npos);

  nlohmann::json broken = cover;
  broken["declared_degree"] = 1;
  const Run bad = run({"effective-potential", g, "--cover", write_json("broken_cover.json", broken)});
  CHECK(bad.code == cli::kExitValidation);
}

TEST_CASE("ladder and esa-check") {
  const Run l = run({"ladder", "--radius", "40", "--sweep-l", "1:5"});
  REQUIRE(l.code == 0);
  std::istringstream lines(l.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line[0] != 'l') ++rows;
  CHECK(rows == 5);

  const Run e = run({"esa-check", "--radius", "40"});
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["verdict"] == "SATISFIED_AT_R");
  const Run off = run({"esa-check", "--radius", "40", "--omega", "0"});
  CHECK(nlohmann::json::parse(off.out)["verdict"] == "NOT_SATISFIED_AT_R");
}

TEST_CASE("reports are byte-identical across runs and written to --out") {
  const std::string g = write_json("rand.json", [] {
    std::mt19937_64 rng(99);
    return graph_to_json(random_graph(rng, {.max_vertices = 20}));
  }());
  const std::vector<std::vector<std::string>> commands = {
      {"bnorm", g, "--seed", "7"}, {"spectrum", g}, {"gauge-reduce", g}, {"cover", g, "--k", "2"},
      {"validate", g},            {"ladder", "--radius", "30"},         {"esa-check", "--radius", "30"}};
  for (const auto& cmd : commands) {
    const Run a = run(cmd);
    const Run b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const std::string out_path = (scratch() / "report.json").string();
  REQUIRE(run({"bnorm", g, "--out", out_path}).code == 0);
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(nlohmann::json::parse(buf.str())["lambda_min"].get<double>() >= 0.0);
}
