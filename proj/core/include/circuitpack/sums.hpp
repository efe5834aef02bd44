#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/digraph.hpp"

namespace circuitpack {

// ---- 0-sums and 1-sums of digraphs ----

// An arc of a 0-sum from the second part back into the first.
struct CrossArc {
  std::string name;
  std::string tail;  // vertex of the second part
  std::string head;  // vertex of the first part
};

// Disjoint union of d1 and d2 plus arcs from d2 to d1. No arc goes from d1 to
// d2, so every circuit stays inside one part.
Digraph zero_sum(const Digraph& d1, const Digraph& d2,
                 const std::vector<CrossArc>& cross = {});

struct ZeroSplit {
  Digraph first;   // D \ X2
  Digraph second;  // D \ X1, a source strong component of D
  std::vector<CrossArc> cross;
};
// Absent when D is strongly connected (or has fewer than two vertices). X2 is
// the source strong component with the smallest vertex.
std::optional<ZeroSplit> split_zero_sum(const Digraph& d);

// Parts share exactly the vertex v (by name) and the arcs of F (by name). An
// arc of F has head v in d1 and tail v in d2; in the sum it runs from its tail
// in d1 to its head in d2. Other arcs are copied as they are.
Digraph one_sum(const Digraph& d1, const Digraph& d2, const std::string& v);

struct OneSplit {
  Digraph first;
  Digraph second;
  std::string cut_vertex;
};
// For strongly connected D: the least cut vertex v whose removal leaves D not
// strongly connected, X1 the source strong component of D - v holding the
// smallest vertex. Loops at v are kept in the first part so that one_sum
// undoes the split exactly.
std::optional<OneSplit> split_one_sum(const Digraph& d);

// ---- 4-sums and trisums of bipartite graphs ----

// The 4-circuit a b a' b' (a, a' on side A) with its edges ab, ba', a'b', b'a.
struct Seam {
  std::array<std::string, 4> vertices;
  std::array<std::string, 4> edges;
};

// Union of 2 or 3 parts along the seam with the seam edges deleted. Parts must
// contain the seam, intersect pairwise in exactly the seam (vertex and edge
// names), each have a private vertex, and the seam must be central in the
// union. Throws PreconditionError naming the first violated clause.
BipartiteGraph seam_sum(const std::vector<BipartiteGraph>& parts,
                        const Seam& c);
BipartiteGraph four_sum(const BipartiteGraph& g1, const BipartiteGraph& g2,
                        const Seam& c);
BipartiteGraph trisum(const BipartiteGraph& g1, const BipartiteGraph& g2,
                      const BipartiteGraph& g3, const Seam& c);

// Per part: edges of M in the part with an end off the seam, plus the seam
// edges parallel to an edge of M.
struct Imprint {
  std::vector<Matching> matchings;  // edge ids of each part
  std::vector<bool> perfect;
};
Imprint imprint(const BipartiteGraph& g, const Matching& m,
                const std::vector<BipartiteGraph>& parts, const Seam& c);

// ---- fixtures ----

// Cube on the seam u1 u2 u3 u4 (side A: u1, u3) with private vertices
// "<tag>v1".."<tag>v4" (v_i adjacent to u_i and to v_{i±1}).
BipartiteGraph seam_cube(const std::string& tag);
Seam cube_seam();

// Trisum of three cubes along a common face, with a perfect matching that
// uses the four spokes of the first cube and two opposite-face edges of each
// other cube. `twist` picks which pair of face edges the third cube uses.
struct ThreeCubeTrisum {
  std::vector<BipartiteGraph> parts;
  Seam seam;
  BipartiteGraph graph;
  Matching matching;
};
ThreeCubeTrisum three_cube_trisum(bool twist = false);

nlohmann::json seam_to_json(const Seam& c);

}  // namespace circuitpack
