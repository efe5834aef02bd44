#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circuitpack/errors.hpp"

namespace circuitpack {

// A finite family of subsets of {0, ..., num_elements-1}. The circuit solvers
// reduce to it: elements are vertices (or arcs), sets are circuits.
struct SetSystem {
  int num_elements = 0;
  std::vector<std::vector<int>> sets;  // each sorted, non-empty
};

// Drops duplicate sets and every set that strictly contains another one, then
// sorts the survivors lexicographically. Neither optimum changes.
SetSystem minimal_sets(SetSystem system);

struct HittingSet {
  std::int64_t weight = 0;
  std::vector<int> elements;  // sorted
};

// Minimum-weight set of elements meeting every set. Zero-weight elements that
// occur in some set are always taken; among the remaining optimal choices the
// lexicographically least sorted element list is returned.
HittingSet min_hitting_set(const SetSystem& system,
                           std::span<const std::int64_t> weights,
                           Budget& budget);

struct Packing {
  std::int64_t size = 0;
  std::vector<std::int64_t> multiplicity;  // per set
};

// Largest family of sets (repetition allowed) in which element e is used at
// most capacity[e] times. Returns the lexicographically least optimal family
// (sets compared by index). `stop_at`, when given, is a proven upper bound on
// the optimum; the search ends as soon as it is reached.
Packing max_packing(const SetSystem& system,
                    std::span<const std::int64_t> capacity, Budget& budget,
                    std::optional<std::int64_t> stop_at = std::nullopt);

}  // namespace circuitpack
