#include "circuitpack/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "circuitpack/circuits.hpp"
#include "circuitpack/connectivity.hpp"
#include "circuitpack/io.hpp"
#include "circuitpack/planarity.hpp"
#include "circuitpack/set_system.hpp"

namespace circuitpack {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<Circuit> all_circuits(const Digraph& d, const SolverOptions& opts) {
  CircuitList list = enumerate_circuits(d, opts.circuit_cap);
  if (list.truncated) throw BudgetExceeded("circuit enumeration cap");
  return std::move(list.circuits);
}

// Circuits keyed by vertex set; the representative of a set is the first
// circuit found on it.
struct VertexSystem {
  SetSystem sets;
  std::map<std::vector<int>, std::size_t> representative;
  std::vector<Circuit> circuits;
};

VertexSystem vertex_system(const Digraph& d, const SolverOptions& opts) {
  VertexSystem out;
  out.circuits = all_circuits(d, opts);
  SetSystem raw{d.num_vertices(), {}};
  for (std::size_t i = 0; i < out.circuits.size(); ++i) {
    std::vector<int> vs = circuit_vertices(d, out.circuits[i]);
    std::sort(vs.begin(), vs.end());
    if (out.representative.emplace(vs, i).second) raw.sets.push_back(vs);
  }
  // A packing can always swap a circuit for one on fewer vertices, and a
  // transversal meeting the minimal sets meets all of them.
  out.sets = minimal_sets(std::move(raw));
  return out;
}

SetSystem arc_system(const std::vector<Circuit>& circuits, int num_arcs) {
  SetSystem sys{num_arcs, {}};
  for (const Circuit& c : circuits) {
    std::vector<int> arcs(c.arcs.begin(), c.arcs.end());
    std::sort(arcs.begin(), arcs.end());
    sys.sets.push_back(std::move(arcs));
  }
  return sys;
}

void check_weights(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw PreconditionError(std::string(what) + " weights have wrong length");
  }
}

void finish(SolveResult& r, const Budget& budget, Clock::time_point start) {
  r.stats.nodes = budget.used();
  r.stats.time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

[[noreturn]] void broken_certificate(const char* solver) {
  throw std::logic_error(std::string(solver) + ": certificate failed to validate");
}

SolveResult vertex_packing(const Digraph& d, const VertexWeights& cap,
                           const SolverOptions& opts, const char* name) {
  auto start = Clock::now();
  Budget budget(opts.budget);
  VertexSystem vs = vertex_system(d, opts);
  Packing p = max_packing(vs.sets, cap, budget);
  CircuitPacking cert;
  for (std::size_t i = 0; i < vs.sets.sets.size(); ++i) {
    const Circuit& c = vs.circuits[vs.representative.at(vs.sets.sets[i])];
    for (std::int64_t t = 0; t < p.multiplicity[i]; ++t) {
      cert.circuits.push_back(c);
    }
  }
  if (!valid_packing(d, cert, &cap)) broken_certificate(name);
  SolveResult r;
  r.value = p.size;
  r.certificate = std::move(cert);
  finish(r, budget, start);
  return r;
}

SolveResult vertex_transversal(const Digraph& d, const VertexWeights& w,
                               const SolverOptions& opts, const char* name) {
  auto start = Clock::now();
  Budget budget(opts.budget);
  VertexSystem vs = vertex_system(d, opts);
  HittingSet h = min_hitting_set(vs.sets, w, budget);
  Transversal cert{h.elements};
  if (!valid_transversal(d, cert)) broken_certificate(name);
  SolveResult r;
  r.value = h.weight;
  r.certificate = std::move(cert);
  finish(r, budget, start);
  return r;
}

}  // namespace

SolveResult nu(const Digraph& d, const SolverOptions& opts) {
  return vertex_packing(d, VertexWeights(d.num_vertices(), 1), opts, "nu");
}

SolveResult tau(const Digraph& d, const SolverOptions& opts) {
  return vertex_transversal(d, VertexWeights(d.num_vertices(), 1), opts,
                            "tau");
}

SolveResult nu_weighted(const Digraph& d, const VertexWeights& w,
                        const SolverOptions& opts) {
  check_weights(d.num_vertices(), w.size(), "vertex");
  return vertex_packing(d, w, opts, "nu_weighted");
}

SolveResult tau_weighted(const Digraph& d, const VertexWeights& w,
                         const SolverOptions& opts) {
  check_weights(d.num_vertices(), w.size(), "vertex");
  return vertex_transversal(d, w, opts, "tau_weighted");
}

SolveResult nu_edge(const Digraph& d, const ArcWeights& w,
                    const SolverOptions& opts) {
  check_weights(d.num_arcs(), w.size(), "arc");
  auto start = Clock::now();
  Budget budget(opts.budget);
  std::vector<Circuit> circuits = all_circuits(d, opts);
  SetSystem sys = arc_system(circuits, d.num_arcs());
  Packing p = max_packing(sys, w, budget);
  CircuitPacking cert;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::int64_t t = 0; t < p.multiplicity[i]; ++t) {
      cert.circuits.push_back(circuits[i]);
    }
  }
  if (!valid_arc_packing(d, cert, w)) broken_certificate("nu_edge");
  SolveResult r;
  r.value = p.size;
  r.certificate = std::move(cert);
  finish(r, budget, start);
  return r;
}

SolveResult tau_edge(const Digraph& d, const ArcWeights& w,
                     const SolverOptions& opts) {
  check_weights(d.num_arcs(), w.size(), "arc");
  auto start = Clock::now();
  Budget budget(opts.budget);
  SetSystem sys = arc_system(all_circuits(d, opts), d.num_arcs());
  HittingSet h = min_hitting_set(sys, w, budget);
  ArcCover cert{h.elements};
  if (!valid_arc_cover(d, cert)) broken_certificate("tau_edge");
  SolveResult r;
  r.value = h.weight;
  r.certificate = std::move(cert);
  finish(r, budget, start);
  return r;
}

LyReport ly_check(const Digraph& d, const ArcWeights& w,
                  const SolverOptions& opts) {
  if (!planar(d)) throw PreconditionError("ly_check needs a planar digraph");
  check_weights(d.num_arcs(), w.size(), "arc");
  LyReport report;
  report.cover = tau_edge(d, w, opts);
  // Packing value never exceeds the cover value, so reaching it ends the
  // search early.
  auto start = Clock::now();
  Budget budget(opts.budget);
  std::vector<Circuit> circuits = all_circuits(d, opts);
  Packing p = max_packing(arc_system(circuits, d.num_arcs()), w, budget,
                          report.cover.value);
  CircuitPacking cert;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::int64_t t = 0; t < p.multiplicity[i]; ++t) {
      cert.circuits.push_back(circuits[i]);
    }
  }
  if (!valid_arc_packing(d, cert, w)) broken_certificate("ly_check");
  report.packing.value = p.size;
  report.packing.certificate = std::move(cert);
  finish(report.packing, budget, start);
  return report;
}

bool valid_packing(const Digraph& d, const CircuitPacking& p,
                   const VertexWeights* capacity) {
  std::vector<std::int64_t> used(d.num_vertices(), 0);
  for (const Circuit& c : p.circuits) {
    if (!is_valid_circuit(d, c)) return false;
    for (VertexId v : circuit_vertices(d, c)) ++used[v];
  }
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    std::int64_t cap = capacity ? (*capacity)[v] : 1;
    if (used[v] > cap) return false;
  }
  return true;
}

bool valid_arc_packing(const Digraph& d, const CircuitPacking& p,
                       const ArcWeights& capacity) {
  std::vector<std::int64_t> used(d.num_arcs(), 0);
  for (const Circuit& c : p.circuits) {
    if (!is_valid_circuit(d, c)) return false;
    for (ArcId a : c.arcs) ++used[a];
  }
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    if (used[a] > capacity[a]) return false;
  }
  return true;
}

bool valid_transversal(const Digraph& d, const Transversal& t) {
  std::vector<bool> removed(d.num_vertices(), false);
  for (VertexId v : t.vertices) {
    if (v < 0 || v >= d.num_vertices()) return false;
    removed[v] = true;
  }
  return is_acyclic_without(d, removed);
}

bool valid_arc_cover(const Digraph& d, const ArcCover& c) {
  std::vector<bool> drop(d.num_arcs(), false);
  for (ArcId a : c.arcs) {
    if (a < 0 || a >= d.num_arcs()) return false;
    drop[a] = true;
  }
  return is_acyclic(d.without_arcs(drop));
}

nlohmann::json solve_result_to_json(const Digraph& d, const SolveResult& r) {
  nlohmann::json cert;
  if (const auto* p = std::get_if<CircuitPacking>(&r.certificate)) {
    cert["kind"] = "packing";
    cert["circuits"] = nlohmann::json::array();
    for (const Circuit& c : p->circuits) {
      cert["circuits"].push_back(circuit_to_json(d, c));
    }
  } else if (const auto* t = std::get_if<Transversal>(&r.certificate)) {
    cert["kind"] = "transversal";
    cert["vertices"] = nlohmann::json::array();
    for (VertexId v : t->vertices) cert["vertices"].push_back(d.vertex_name(v));
  } else {
    const auto& c = std::get<ArcCover>(r.certificate);
    cert["kind"] = "arc_cover";
    cert["arcs"] = nlohmann::json::array();
    for (ArcId a : c.arcs) cert["arcs"].push_back(d.arc(a).name);
  }
  return {{"value", r.value},
          {"certificate", cert},
          {"optimal", r.optimal},
          {"stats", {{"nodes", r.stats.nodes}, {"time_ms", r.stats.time_ms}}}};
}

}  // namespace circuitpack
