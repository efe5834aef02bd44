#include "circuitpack/planarity.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "circuitpack/transforms.hpp"

namespace circuitpack {

bool planar_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> simple;
  simple.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) continue;
    simple.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
  // Euler bound short-circuit: a simple planar graph has at most 3n - 6 edges.
  if (n >= 3 && static_cast<int>(simple.size()) > 3 * n - 6) return false;
  if (n <= 4) return true;

  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(n);
  for (auto [u, v] : simple) boost::add_edge(u, v, g);
  return boost::boyer_myrvold_planarity_test(g);
}

bool planar(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    edges.emplace_back(g.edge_end_a(e), g.edge_end_b(e));
  }
  return planar_graph(g.num_vertices(), edges);
}

bool planar(const Digraph& d) {
  std::vector<std::pair<int, int>> edges;
  for (const Arc& a : d.arcs()) edges.emplace_back(a.tail, a.head);
  return planar_graph(d.num_vertices(), edges);
}

bool strongly_planar(const Digraph& d) {
  return planar(bipartite_double(d).graph);
}

}  // namespace circuitpack
