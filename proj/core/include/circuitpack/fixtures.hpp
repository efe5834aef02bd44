#pragma once

#include "circuitpack/bipartite.hpp"

namespace circuitpack {

// Heawood graph: the 14-cycle 0..13 plus the chords i -- i+5 for even i.
// Even vertices form side A. Cycle edges are "c<i>" (i -- i+1), chords
// "d<i/2>".
BipartiteGraph heawood();

// K_{3,3} with sides a1..a3 and b1..b3; edge "a<i>b<j>".
BipartiteGraph k33();

// The 3-cube on bit strings 000..111, even weight on side A; edge
// "<a>-<b>".
BipartiteGraph cube();

}  // namespace circuitpack
