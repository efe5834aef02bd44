#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/solvers.hpp"

namespace circuitpack {

struct MatchingList {
  std::vector<Matching> matchings;  // lexicographic by sorted edge ids
  bool truncated = false;
};

// All perfect matchings (up to `cap`). The empty graph has exactly one, the
// empty matching.
MatchingList perfect_matchings(
    const BipartiteGraph& g,
    std::size_t cap = std::numeric_limits<std::size_t>::max());

// `removed` (global vertex ids) hides vertices.
std::optional<Matching> find_perfect_matching(
    const BipartiteGraph& g, const std::vector<bool>* removed = nullptr);
bool has_perfect_matching(const BipartiteGraph& g,
                          const std::vector<bool>* removed = nullptr);

// Every matching with at most k edges extends to a perfect matching.
bool k_extendable(const BipartiteGraph& g, int k);
// Connected, at least two vertices per side, and 2-extendable.
bool is_brace(const BipartiteGraph& g);

// A circuit of a bipartite graph: edges in traversal order and the vertex
// each edge leaves from.
struct EdgeCircuit {
  std::vector<EdgeId> edges;
  std::vector<int> vertices;  // global ids, vertices[i] is the start of edges[i]
  friend auto operator<=>(const EdgeCircuit&, const EdgeCircuit&) = default;
};

// All circuits of the underlying multigraph (parallel edges give 2-circuits).
// Each circuit starts at its smallest vertex and is traversed in the direction
// whose first edge id is smaller than its last.
std::vector<EdgeCircuit> bipartite_circuits(const BipartiteGraph& g,
                                            int max_length = -1);

// Circuits of the given length whose deletion leaves a graph with a perfect
// matching.
std::vector<EdgeCircuit> central_circuits(const BipartiteGraph& g, int length);

// Circuits alternating between M and the other edges, each traversed A->B on
// non-matching edges and B->A on matching edges, starting at its smallest
// A-vertex.
std::vector<EdgeCircuit> alternating_circuits(const BipartiteGraph& g,
                                              const Matching& m);

struct AlternatingResult {
  std::int64_t value = 0;
  std::vector<EdgeCircuit> circuits;  // packing certificate
  std::vector<EdgeId> edges;          // deletion-set certificate
  SolveStats stats;
};

// Maximum number of vertex-disjoint M-alternating circuits, and minimum
// number of edges whose deletion leaves none. M must be perfect.
AlternatingResult alternating_nu(const BipartiteGraph& g, const Matching& m,
                                 const SolverOptions& opts = {});
AlternatingResult alternating_tau(const BipartiteGraph& g, const Matching& m,
                                  const SolverOptions& opts = {});

nlohmann::json edge_circuit_to_json(const BipartiteGraph& g,
                                    const EdgeCircuit& c);

}  // namespace circuitpack
