#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/containment.hpp"
#include "circuitpack/digraph.hpp"
#include "circuitpack/enumerate.hpp"
#include "circuitpack/matching.hpp"
#include "circuitpack/sums.hpp"

namespace circuitpack {

struct SumSplit {
  std::vector<BipartiteGraph> parts;  // two (4-sum) or three (trisum)
  Seam seam;
};

struct SplitOptions {
  bool allow_four_sum = true;
  // Parts must not contain K33. Without this, seams whose edges are already
  // present in G give splits into K33-like parts (the cube is a 4-sum of two
  // of them); such splits never lead to planar leaves.
  bool k33_free_parts = true;
  int max_vertices = 40;
  std::uint64_t budget = Budget::default_limit();
};

// Seams are tried as a < a' on side A and b < b' on side B (vertex order);
// the components of G minus the seam are grouped into parts, each of which
// must be a brace carrying the seam, with the seam central in the union.
// Trisums over all seams come before 4-sums. Edges of G between seam vertices
// go to the first part. New seam edges get names unused in G.
std::optional<SumSplit> find_trisum_split(const BipartiteGraph& g,
                                          const SplitOptions& opts = {});

enum class NodeKind {
  kLeaf,         // planar brace
  kHeawoodLeaf,
  kTrisum,
  kFourSum,
  kObstructed,   // brace with no split that is neither planar nor Heawood
  kZeroSum,
  kOneSum,
  kPiece,        // digraph with no 0-sum or 1-sum split
};

struct DecompositionNode {
  NodeKind kind = NodeKind::kLeaf;
  std::optional<BipartiteGraph> graph;  // bipartite nodes
  std::optional<Digraph> digraph;       // digraph nodes
  std::optional<Seam> seam;             // kTrisum, kFourSum
  std::vector<CrossArc> cross;          // kZeroSum
  std::string cut_vertex;               // kOneSum
  std::string obstruction;              // kObstructed: "K33" or "Heawood"
  std::optional<ContainmentWitness> witness;
  std::vector<DecompositionNode> children;
};

struct DecomposeOptions {
  SplitOptions split;
  ContainmentOptions containment;
};

// Throws PreconditionError unless g is a brace. Leaves come first (planar,
// then Heawood); otherwise the first split is taken and the parts are
// decomposed in turn. A brace without a split is Obstructed with a K33 or
// Heawood containment witness; if neither exists a logic_error is raised.
DecompositionNode trisum_decompose(const BipartiteGraph& g,
                                   const DecomposeOptions& opts = {});

// 0-sum splits first, then 1-sum splits; what remains is a Piece whose
// bipartite double, when it is a brace, is decomposed as a child.
DecompositionNode decompose_digraph(const Digraph& d,
                                    const DecomposeOptions& opts = {});

// Rebuilds the graph of a node from its leaves.
BipartiteGraph compose_tree(const DecompositionNode& node);
Digraph compose_digraph_tree(const DecompositionNode& node);

// Parts of every Trisum/FourSum node, depth first.
std::vector<BipartiteGraph> sum_parts(const DecompositionNode& node);

// At least 12 edges, and exactly 12 only for the cube.
struct LemmaXReport {
  bool ok = true;
  int edges = 0;
  bool is_cube = false;
};
LemmaXReport lemma_x_check(const BipartiteGraph& part);

// ---- sum corpora ----

// Copy of g in which the 4-circuit c becomes cube_seam() (u1 u2 u3 u4 with
// edges c12 c23 c34 c41); every other vertex and edge name gets `prefix`.
BipartiteGraph place_on_seam(const BipartiteGraph& g, const EdgeCircuit& c,
                             const std::string& prefix);

struct RandomSum {
  std::vector<BipartiteGraph> parts;
  Seam seam;
  BipartiteGraph graph;
};
// Glues `parts` graphs drawn from pool along random central 4-circuits, after
// adding `extra_parallel` edges parallel to random seam edges of random parts.
// Absent when a drawn graph has no central 4-circuit or the sum is not a
// brace.
std::optional<RandomSum> random_brace_sum(const std::vector<BipartiteGraph>& pool,
                                          int parts, Rng& rng,
                                          int extra_parallel = 0);

// Planar braces with 2..max_half vertices per side, up to isomorphism.
std::vector<BipartiteGraph> planar_braces(int max_half);

std::string node_kind_name(NodeKind k);
nlohmann::json decomposition_to_json(const DecompositionNode& node);

}  // namespace circuitpack
