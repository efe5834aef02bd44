#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuitpack/digraph.hpp"
#include "circuitpack/errors.hpp"

namespace circuitpack {

// Circuits of a packing. In the weighted variants a circuit may appear more
// than once (up to the capacities).
struct CircuitPacking {
  std::vector<Circuit> circuits;
  friend bool operator==(const CircuitPacking&, const CircuitPacking&) = default;
};

struct Transversal {
  std::vector<VertexId> vertices;  // sorted
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

// Arc set meeting every circuit (the covering side of the arc programs).
struct ArcCover {
  std::vector<ArcId> arcs;  // sorted
  friend bool operator==(const ArcCover&, const ArcCover&) = default;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double time_ms = 0;
};

struct SolveResult {
  std::int64_t value = 0;
  std::variant<CircuitPacking, Transversal, ArcCover> certificate;
  bool optimal = true;
  SolveStats stats;
};

struct SolverOptions {
  std::uint64_t budget = Budget::default_limit();
  std::size_t circuit_cap = 5'000'000;
};

SolveResult nu(const Digraph& d, const SolverOptions& opts = {});
SolveResult tau(const Digraph& d, const SolverOptions& opts = {});

// Vertex v may be used by at most w[v] circuits / costs w[v].
SolveResult nu_weighted(const Digraph& d, const VertexWeights& w,
                        const SolverOptions& opts = {});
SolveResult tau_weighted(const Digraph& d, const VertexWeights& w,
                         const SolverOptions& opts = {});

// Arc versions: circuit family with arc capacities w, and min-weight arc set
// meeting every circuit.
SolveResult nu_edge(const Digraph& d, const ArcWeights& w,
                    const SolverOptions& opts = {});
SolveResult tau_edge(const Digraph& d, const ArcWeights& w,
                     const SolverOptions& opts = {});

struct LyReport {
  SolveResult cover;    // min weight of an arc set meeting all circuits
  SolveResult packing;  // max circuit family under arc capacities
  bool equal() const { return cover.value == packing.value; }
};
// Both sides of the planar min-max relation. Throws PreconditionError when
// the underlying graph of `d` is not planar.
LyReport ly_check(const Digraph& d, const ArcWeights& w,
                  const SolverOptions& opts = {});

// Certificate checks against the host.
bool valid_packing(const Digraph& d, const CircuitPacking& p,
                   const VertexWeights* capacity = nullptr);
bool valid_arc_packing(const Digraph& d, const CircuitPacking& p,
                       const ArcWeights& capacity);
bool valid_transversal(const Digraph& d, const Transversal& t);
bool valid_arc_cover(const Digraph& d, const ArcCover& c);

// {value, certificate, optimal, stats{nodes, time_ms}} with names, not ids.
nlohmann::json solve_result_to_json(const Digraph& d, const SolveResult& r);

}  // namespace circuitpack
