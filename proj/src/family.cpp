#include "magspec/family.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "magspec/error.hpp"

namespace magspec {

Truncation truncate(const GraphFamily& family, int radius) {
  if (radius < 1) throw Error(Errc::InvalidArgument, "truncation radius must be >= 1");
  if (!family.generator) throw Error(Errc::GeneratorFailure, family.name + ": no generator");
  Truncation t;
  try {
    t = family.generator(radius);
  } catch (const std::exception& ex) {
    throw Error(Errc::GeneratorFailure, family.name + " at R=" + std::to_string(radius) + ": " + ex.what());
  }
  if (!t.graph.contains(family.base_vertex))
    throw Error(Errc::GeneratorFailure, family.name + " at R=" + std::to_string(radius) +
                                            " lost the base vertex");
  for (VertexId f : t.frontier) {
    if (!t.graph.contains(f))
      throw Error(Errc::GeneratorFailure, family.name + ": frontier vertex " + std::to_string(f) +
                                              " is not in the truncation");
  }
  std::sort(t.frontier.begin(), t.frontier.end());
  return t;
}

GraphFamily finite_family(WeightedGraph g, VertexId base) {
  auto shared = std::make_shared<const WeightedGraph>(std::move(g));
  const int center = shared->index(base);
  GraphFamily family;
  family.name = "finite";
  family.base_vertex = base;
  family.generator = [shared, center](int radius) {
    const auto& full = *shared;
    std::vector<int> ball = combinatorial_ball(full, center, radius);
    std::vector<char> inside(full.num_vertices(), 0);
    for (int v : ball) inside[v] = 1;
    std::vector<VertexId> frontier;
    for (int v : ball) {
      for (const auto& nb : full.neighbors(v)) {
        if (!inside[nb.vertex]) {
          frontier.push_back(full.id(v));
          break;
        }
      }
    }
    std::sort(ball.begin(), ball.end());
    return Truncation{induced_subgraph(full, ball), std::move(frontier)};
  };
  return family;
}

}  // namespace magspec
