#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "circuitpack/digraph.hpp"

namespace circuitpack {

struct CircuitList {
  std::vector<Circuit> circuits;
  bool truncated = false;  // cap reached before the enumeration finished
};

// All directed circuits (loops and digons included; parallel arcs give
// distinct circuits). Circuits are grouped by their smallest vertex in
// increasing order and, within a group, discovered by a depth-first walk that
// follows out-arcs in arc order.
CircuitList enumerate_circuits(
    const Digraph& d,
    std::size_t cap = std::numeric_limits<std::size_t>::max());

}  // namespace circuitpack
