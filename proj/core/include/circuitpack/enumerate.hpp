#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/digraph.hpp"

namespace circuitpack {

struct DigraphEnumOptions {
  bool loops = false;  // allow at most one loop per vertex
  int max_arcs = -1;   // -1: no limit
};

// One representative per isomorphism class of digraphs on exactly n vertices
// without parallel arcs. Built by adding one arc at a time and keeping the
// first digraph seen in each class, so the order is by arc count and then
// discovery.
std::vector<Digraph> enumerate_digraphs(int n,
                                        const DigraphEnumOptions& opts = {});

// Representatives of simple bipartite graphs with sides of size `half` and a
// perfect matching, up to isomorphism (sides may swap). Obtained as bipartite
// doubles of the simple loopless digraphs on `half` vertices.
std::vector<BipartiteGraph> enumerate_bipartite_with_pm(int half);

// Representatives of simple bipartite graphs with sides of size `half` and
// every degree at least `min_degree`, up to isomorphism. Generated as
// biadjacency matrices whose rows and columns are both lexicographically
// non-increasing; every matrix can be permuted into that shape.
std::vector<BipartiteGraph> enumerate_bipartite_min_degree(int half,
                                                           int min_degree);

// Braces with sides of size `half` (half >= 2), up to isomorphism. Braces on
// six or more vertices are 3-connected, so min degree 3 is used from there.
std::vector<BipartiteGraph> enumerate_braces(int half);

using Rng = std::mt19937_64;

// Each ordered pair (and each loop, when enabled) present independently with
// probability p.
Digraph random_digraph(int n, double p, Rng& rng, bool loops = false);

// Random planar digraph: a random maximal-ish planar graph on n vertices
// (edges tried in random order, kept while planar, stopping at a random
// size), each edge oriented one way, the other way, or both.
Digraph random_planar_digraph(int n, Rng& rng);

}  // namespace circuitpack
