#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cozero/error.hpp"
#include "cozero/graph.hpp"

namespace cozero {

bool is_planar(const SimpleGraph& g, const MetricLimits& limits) {
  const auto n = g.vertex_count();
  if (n > limits.exact_vertex_cap)
    throw Error(ErrorKind::cap_exceeded,
                "is_planar: " + std::to_string(n) + " vertices exceed exact-computation cap " +
                    std::to_string(limits.exact_vertex_cap));
  if (n <= 4) return true;
  if (g.edge_count() > 3 * n - 6) return false;

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (auto [a, b] : g.edges()) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace cozero
