#pragma once

#include <utility>
#include <vector>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/digraph.hpp"

namespace circuitpack {

// Exact planarity of a simple undirected graph on `n` vertices; loops and
// repeated pairs in `edges` are ignored.
bool planar_graph(int n, const std::vector<std::pair<int, int>>& edges);

bool planar(const BipartiteGraph& g);
// Planarity of the underlying undirected graph.
bool planar(const Digraph& d);

// A digraph is strongly planar iff its bipartite double is planar.
bool strongly_planar(const Digraph& d);

}  // namespace circuitpack
