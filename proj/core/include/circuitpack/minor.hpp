#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuitpack/digraph.hpp"
#include "circuitpack/errors.hpp"

namespace circuitpack {

// Non-loop arcs e = uv that are the only arc with head v or the only arc with
// tail u (parallel arcs and loops count towards the degrees).
std::vector<ArcId> special_arcs(const Digraph& d);
bool is_special(const Digraph& d, ArcId e);

// Identifies the ends of the special arc e and removes it. The merged vertex
// keeps the tail's name and position; every other arc keeps its name.
// Throws PreconditionError for loops and non-special arcs.
Digraph contract_special(const Digraph& d, ArcId e);

// A minor derivation in normal form: take the subdigraph on the kept host
// vertices/arcs, then contract `contractions` in order.
struct MinorWitness {
  std::vector<VertexId> kept_vertices;  // host ids, sorted
  std::vector<ArcId> kept_arcs;         // host ids, sorted
  std::vector<ArcId> contractions;      // host ids, in contraction order
  Digraph image;
};

// Replays a witness on its host; throws PreconditionError when a listed arc is
// not special at its turn.
Digraph replay(const Digraph& host, const MinorWitness& w);

struct MinorOptions {
  std::uint64_t budget = Budget::default_limit();
};

// Exact minor test. Returns a replay-validated witness, or nullopt when the
// target is not a minor of the host. Throws BudgetExceeded when the search
// runs out of nodes.
std::optional<MinorWitness> is_minor(const Digraph& target,
                                     const Digraph& host,
                                     const MinorOptions& opts = {});

// Digon ring on k vertices "0".."k-1": arcs "f<i>" i->i+1 and "b<i>" i+1->i.
Digraph odd_double_circuit(int k);

// D(Heawood, M) for the lexicographically first perfect matching M.
Digraph f7();

enum class ObstructionKind { kOddDoubleCircuit, kF7 };

struct Obstruction {
  ObstructionKind kind = ObstructionKind::kOddDoubleCircuit;
  int k = 0;  // circuit length for odd double circuits, 7 for F7
  MinorWitness witness;
};

// Odd double circuits in increasing k, then F7.
std::optional<Obstruction> find_obstruction(const Digraph& d,
                                            const MinorOptions& opts = {});

// {kept_vertices, kept_arcs, contractions, image}, by name.
nlohmann::json witness_to_json(const Digraph& host, const MinorWitness& w);
nlohmann::json obstruction_to_json(const Digraph& host, const Obstruction& o);

// Number of failed (target, state) pairs held by the minor-search cache.
std::size_t minor_cache_size();
void clear_minor_cache();

}  // namespace circuitpack
