#pragma once

#include "circuitpack/bipartite.hpp"
#include "circuitpack/digraph.hpp"

namespace circuitpack {

// D(G, M): orient every edge from side A to side B and contract the edges of
// the perfect matching M. One vertex per matching edge (named after it), one
// arc per non-matching edge (named after it).
Digraph dgm(const BipartiteGraph& g, const Matching& m);

// Inverse of dgm: side A = {a_v}, side B = {b_v}, matching edges a_v b_v and
// one edge a_u b_v per arc u->v (named after the arc).
MarkedBipartite bipartite_double(const Digraph& d);

// Source/sink split of every vertex: vertex v gets a twin v', arc u->v becomes
// u'->v and each v gains the arc v->v'. Split arcs weigh 1, the others weigh
// |E(H)|.
struct VertexSplit {
  Digraph graph;
  ArcWeights weights;
};
VertexSplit vertex_split(const Digraph& d);

}  // namespace circuitpack
