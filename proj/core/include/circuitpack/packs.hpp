#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuitpack/digraph.hpp"
#include "circuitpack/minor.hpp"
#include "circuitpack/solvers.hpp"

namespace circuitpack {

// A subdigraph with tau > nu, both values certified.
struct NonPackWitness {
  Digraph subdigraph;
  SolveResult nu;
  SolveResult tau;
};

struct PacksResult {
  bool packs = true;
  std::optional<NonPackWitness> witness;
};

struct PacksOptions {
  SolverOptions solver;
  int max_arcs = 40;  // guard on the reduced digraph
};

// Checks tau = nu on every subdigraph. Loops, repeated parallel arcs and arcs
// on no circuit are stripped first (none of them changes the answer), and
// results are memoized per isomorphism class of the stripped digraph.
PacksResult packs_bruteforce(const Digraph& d, const PacksOptions& opts = {});

struct ObstructionVerdict {
  bool packs = true;
  std::optional<Obstruction> obstruction;
};
// Decides packing by looking for an odd-double-circuit or F7 minor.
ObstructionVerdict packs_via_obstructions(const Digraph& d,
                                          const MinorOptions& opts = {});

// Every minimum transversal / every maximum packing (as vertex sets of
// circuits), each list sorted.
std::vector<std::vector<VertexId>> all_min_transversals(
    const Digraph& d, const SolverOptions& opts = {});
std::vector<std::vector<std::vector<VertexId>>> all_max_packings(
    const Digraph& d, const SolverOptions& opts = {});

// For a digraph that packs: some minimum transversal contains v exactly when
// every maximum packing uses v. Throws PreconditionError if d does not pack.
bool check_remark_easy(const Digraph& d, VertexId v,
                       const SolverOptions& opts = {});

struct WeightedSearchBounds {
  int max_vertices = 4;
  int max_weight = 2;
  int max_findings = 50;
};

struct WeightedFinding {
  Digraph digraph;
  VertexWeights weights;
  std::int64_t nu = 0;
  std::int64_t tau = 0;
};

// Obstruction-free digraphs (simple, loopless, strongly connected, up to
// isomorphism) with a vertex weighting in [1, max_weight] where the weighted
// tau exceeds the weighted nu.
std::vector<WeightedFinding> weighted_obstruction_search(
    const WeightedSearchBounds& bounds, const SolverOptions& opts = {});

nlohmann::json packs_result_to_json(const PacksResult& r);
nlohmann::json weighted_finding_to_json(const WeightedFinding& f);

std::size_t packs_cache_size();
void clear_packs_cache();

}  // namespace circuitpack
