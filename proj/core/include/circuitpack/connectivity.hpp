#pragma once

#include <vector>

#include "circuitpack/digraph.hpp"

namespace circuitpack {

// Strongly connected components. Component ids follow a topological order of
// the condensation: no arc goes from a component to one with a smaller id.
struct Condensation {
  std::vector<int> component;  // per vertex
  int count = 0;
};

// `removed` (optional, per vertex) hides vertices from the computation; hidden
// vertices get component -1.
Condensation strong_components(const Digraph& d,
                               const std::vector<bool>* removed = nullptr);

// Empty and one-vertex digraphs are strongly connected.
bool strongly_connected(const Digraph& d);
bool strongly_connected_without(const Digraph& d,
                                const std::vector<bool>& removed);

// D \ T strongly connected for every vertex set T with |T| <= k-1.
bool strongly_k_connected(const Digraph& d, int k);

// Arcs that lie on at least one circuit (loops, and arcs inside a strong
// component).
std::vector<bool> arcs_on_circuits(const Digraph& d);

bool is_acyclic(const Digraph& d);
bool is_acyclic_without(const Digraph& d, const std::vector<bool>& removed);

}  // namespace circuitpack
