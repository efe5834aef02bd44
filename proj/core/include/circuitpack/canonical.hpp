#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/digraph.hpp"

namespace circuitpack {

// Byte string that is equal for two digraphs iff they are isomorphic as
// directed multigraphs with loops. Names are ignored.
using CanonicalKey = std::string;

inline constexpr int kCanonicalVertexLimit = 40;

// Position of every vertex in the canonical order. Throws PreconditionError
// above kCanonicalVertexLimit vertices.
std::vector<int> canonical_labeling(const Digraph& d);
CanonicalKey canonical_form(const Digraph& d);
// Same, for the digraph on vertices 0..n-1 with the given (tail, head) arcs.
std::vector<int> canonical_labeling(int n,
                                    std::span<const std::pair<int, int>> arcs);
CanonicalKey canonical_form(int n, std::span<const std::pair<int, int>> arcs);
bool isomorphic(const Digraph& a, const Digraph& b);

// Undirected isomorphism of the underlying multigraphs (sides may swap).
CanonicalKey canonical_form(const BipartiteGraph& g);
bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

// The bipartite graph as a symmetric digraph: each edge becomes a digon.
Digraph symmetric_digraph(const BipartiteGraph& g);

}  // namespace circuitpack
