#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/errors.hpp"

namespace circuitpack {

// An even subdivision L of H inside G whose complement G - V(L) has a perfect
// matching.
struct ContainmentWitness {
  bool sides_swapped = false;             // side A of H sits on side B of G
  std::vector<int> branch;                // H vertex -> G vertex (global ids)
  std::vector<std::vector<EdgeId>> paths;  // H edge -> G edges, from its A end
  Matching complement;                    // perfect matching of G - V(L)
};

struct ContainmentOptions {
  std::uint64_t budget = Budget::default_limit();
};

// Exact search: branch vertices of H are placed one at a time (twins of H in
// increasing order), each H edge is routed as a path through unused vertices
// as soon as both ends are placed, and the complement is tested last. Both
// side assignments are tried unless H has a side-swapping automorphism.
std::optional<ContainmentWitness> contains(const BipartiteGraph& g,
                                           const BipartiteGraph& h,
                                           const ContainmentOptions& opts = {});

bool contains_k33(const BipartiteGraph& g, const ContainmentOptions& opts = {});
bool contains_heawood(const BipartiteGraph& g,
                      const ContainmentOptions& opts = {});

// Checks every clause of the witness definition.
bool valid_containment(const BipartiteGraph& g, const BipartiteGraph& h,
                       const ContainmentWitness& w);

// {"sides_swapped", "branch": {H vertex: G vertex}, "paths": {H edge: [G
// edges]}, "complement": [G edges]}.
nlohmann::json containment_to_json(const BipartiteGraph& g,
                                   const BipartiteGraph& h,
                                   const ContainmentWitness& w);

}  // namespace circuitpack
