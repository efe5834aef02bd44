// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "circuitpack/canonical.hpp"
#include "circuitpack/decomposition.hpp"
#include "circuitpack/enumerate.hpp"
#include "circuitpack/fixtures.hpp"
#include "circuitpack/matching.hpp"
#include "circuitpack/minor.hpp"
#include "circuitpack/solvers.hpp"
#include "circuitpack/sums.hpp"
#include "circuitpack/transforms.hpp"
#include "circuitpack/verify.hpp"

namespace cp = circuitpack;

namespace {

// Wall-clock limits, seconds.
constexpr double kValuesLimit = 5;
constexpr double kEquivalenceLimit = 600;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Zero failures, nothing skipped, nothing cut short.
Outcome clean_report(const std::string& id, const cp::VerifyBounds& b = {}) {
  cp::VerificationReport r = cp::verify_theorem(id, b);
  std::ostringstream out;
  out << id << ": " << r.instances << " instances, " << r.failures.size()
      << " failures, " << r.skipped << " skipped";
  if (!r.failures.empty()) out << "; first " << r.failures.front().dump();
  return {r.failures.empty() && r.skipped == 0 && !r.incomplete, out.str()};
}

Outcome obstruction_values() {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out;
  bool ok = true;
  cp::Digraph f = cp::f7();
  std::int64_t nf = cp::nu(f).value, tf = cp::tau(f).value;
  ok = ok && nf == 2 && tf == 3;
  out << "F7 nu=" << nf << " tau=" << tf;
  for (int k : {3, 5, 7, 9}) {
    cp::Digraph d = cp::odd_double_circuit(k);
    std::int64_t n = cp::nu(d).value, t = cp::tau(d).value;
    ok = ok && n == k / 2 && t == (k + 1) / 2;
    out << "; k=" << k << " nu=" << n << " tau=" << t;
  }
  double s = seconds_since(t0);
  out << "; " << s << " s";
  return {ok && s < kValuesLimit, out.str()};
}

Outcome packs_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  cp::VerifyBounds b;
  b.max_vertices = 4;
  b.max_arcs = 12;
  b.samples = 10000;
  b.sample_vertices = 5;
  Outcome o = clean_report("T1.1", b);
  double s = seconds_since(t0);
  o.detail += "; " + std::to_string(s) + " s";
  o.pass = o.pass && s < kEquivalenceLimit;
  return o;
}

Outcome planar_min_max() {
  cp::VerifyBounds b;
  b.random_instances = 200;
  b.max_planar_vertices = 8;
  b.max_weight = 5;
  return clean_report("T2.1", b);
}

Outcome strongly_planar_pack() {
  cp::VerifyBounds b;
  b.max_bipartite_vertices = 10;
  return clean_report("C4.1", b);
}

Outcome extendability() {
  cp::VerifyBounds b;
  b.max_bipartite_vertices = 10;
  return clean_report("P5.2", b);
}

Outcome k33_iff_odd_double_circuit() {
  cp::VerifyBounds b;
  b.max_brace_vertices = 12;
  return clean_report("T5.5-i-iv", b);
}

Outcome three_cube_fixture() {
  std::ostringstream out;
  bool ok = true;
  for (bool twist : {false, true}) {
    cp::ThreeCubeTrisum t = cp::three_cube_trisum(twist);
    cp::Digraph d = cp::dgm(t.graph, t.matching);
    cp::SolveResult n = cp::nu(d), x = cp::tau(d);
    const auto& packing = std::get<cp::CircuitPacking>(n.certificate);
    const auto& transversal = std::get<cp::Transversal>(x.certificate);
    bool good = n.value == 3 && x.value == 3 && packing.circuits.size() == 3 &&
                transversal.vertices.size() == 3 && cp::valid_packing(d, packing) &&
                cp::valid_transversal(d, transversal);
    ok = ok && good;
    out << (twist ? "; twisted" : "plain") << " nu=" << n.value << " tau=" << x.value
        << " packing=" << packing.circuits.size() << " transversal=" << transversal.vertices.size();
  }
  return {ok, out.str()};
}

Outcome sum_preservation() {
  cp::VerifyBounds b;
  b.random_instances = 200;
  return clean_report("sums", b);
}

Outcome round_trips() {
  std::ostringstream out;
  // dgm of the bipartite double on every digraph with at most 5 vertices
  // (no loops), plus loops allowed up to 4 vertices.
  int digraphs = 0, bad_double = 0;
  auto check = [&](const cp::Digraph& d) {
    ++digraphs;
    cp::MarkedBipartite g = cp::bipartite_double(d);
    if (cp::canonical_form(cp::dgm(g.graph, g.matching)) != cp::canonical_form(d)) ++bad_double;
  };
  for (int n = 1; n <= 5; ++n) {
    for (const cp::Digraph& d : cp::enumerate_digraphs(n)) check(d);
  }
  cp::DigraphEnumOptions loops;
  loops.loops = true;
  for (int n = 1; n <= 4; ++n) {
    for (const cp::Digraph& d : cp::enumerate_digraphs(n, loops)) {
      if (d.has_loops()) check(d);
    }
  }
  out << "double: " << digraphs << " digraphs, " << bad_double << " mismatches";
  // Decompose and recompose the sum corpus.
  Outcome corpus = clean_report("decompose");
  out << "; " << corpus.detail;
  // Every perfect matching of the Heawood graph gives the same digraph.
  cp::BipartiteGraph h = cp::heawood();
  const cp::CanonicalKey key = cp::canonical_form(cp::f7());
  int matchings = 0, bad_f7 = 0;
  for (const cp::Matching& m : cp::perfect_matchings(h).matchings) {
    ++matchings;
    bad_f7 += cp::canonical_form(cp::dgm(h, m)) != key;
  }
  out << "; heawood: " << matchings << " matchings, " << bad_f7 << " mismatches";
  return {bad_double == 0 && corpus.pass && bad_f7 == 0 && matchings == 24, out.str()};
}

// Decomposes the three-cube fixture and random sums of planar braces, and
// checks every part with exactly twelve edges against the cube twice: with
// the part checker and by isomorphism.
Outcome twelve_edge_parts() {
  std::vector<cp::BipartiteGraph> inputs{cp::three_cube_trisum().graph,
                                         cp::three_cube_trisum(true).graph};
  std::vector<cp::BipartiteGraph> pool = cp::planar_braces(6);
  cp::Rng rng(0);
  for (int attempt = 0; attempt < 2000 && inputs.size() < 100; ++attempt) {
    auto r = cp::random_brace_sum(pool, 2 + attempt % 2, rng, attempt % 3);
    if (r && r->graph.num_vertices() <= 36) inputs.push_back(r->graph);
  }
  const cp::CanonicalKey cube = cp::canonical_form(cp::cube());
  int parts = 0, twelve = 0, violations = 0, disagreements = 0;
  for (const cp::BipartiteGraph& g : inputs) {
    for (const cp::BipartiteGraph& part : cp::sum_parts(cp::trisum_decompose(g))) {
      ++parts;
      cp::LemmaXReport r = cp::lemma_x_check(part);
      bool is_cube = cp::canonical_form(part) == cube;
      bool ok_by_iso = part.num_edges() > 12 || (part.num_edges() == 12 && is_cube);
      twelve += part.num_edges() == 12;
      violations += !r.ok;
      disagreements += r.ok != ok_by_iso;
    }
  }
  std::ostringstream out;
  out << inputs.size() << " graphs, " << parts << " parts, " << twelve
      << " with 12 edges, " << violations << " violations, " << disagreements
      << " checker/isomorphism disagreements";
  return {violations == 0 && disagreements == 0 && twelve > 0, out.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"obstruction values", obstruction_values},
      {"packs iff no obstruction minor", packs_equivalence},
      {"nu <= 1 implies tau <= 3", [] { return clean_report("T2.2"); }},
      {"planar arc min-max equality", planar_min_max},
      {"strongly planar digraphs pack", strongly_planar_pack},
      {"k-extendable iff strongly k-connected", extendability},
      {"K33 iff odd double circuit minor", k33_iff_odd_double_circuit},
      {"three-cube trisum nu = tau = 3", three_cube_fixture},
      {"sums preserve packing", sum_preservation},
      {"structural round trips", round_trips},
      {"twelve-edge parts are cubes", twelve_edge_parts},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first
              << " [" << o.detail << "] (" << seconds_since(t0) << " s)" << std::endl;
  }
  return failed;
}
