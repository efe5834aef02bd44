#include "circuitpack/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "circuitpack/canonical.hpp"
#include "circuitpack/circuits.hpp"
#include "circuitpack/connectivity.hpp"
#include "circuitpack/containment.hpp"
#include "circuitpack/decomposition.hpp"
#include "circuitpack/enumerate.hpp"
#include "circuitpack/io.hpp"
#include "circuitpack/matching.hpp"
#include "circuitpack/minor.hpp"
#include "circuitpack/packs.hpp"
#include "circuitpack/planarity.hpp"
#include "circuitpack/solvers.hpp"
#include "circuitpack/sums.hpp"
#include "circuitpack/transforms.hpp"

namespace circuitpack {
namespace {

struct Instance {
  std::optional<Digraph> digraph;
  std::optional<MarkedBipartite> bipartite;
  ArcWeights weights;             // T2.1
  std::vector<Digraph> parts;     // sums
  std::vector<CrossArc> cross;    // sums, 0-sum
  std::string cut_vertex;         // sums, 1-sum (empty for a 0-sum)
};

nlohmann::json instance_to_json(const Instance& x) {
  nlohmann::json j = nlohmann::json::object();
  if (x.digraph) j["digraph"] = digraph_to_json(*x.digraph);
  if (x.bipartite) {
    j["bipartite"] = bipartite_to_json(x.bipartite->graph, x.bipartite->matching);
  }
  if (!x.weights.empty()) {
    nlohmann::json w = nlohmann::json::object();
    for (ArcId a = 0; a < x.digraph->num_arcs(); ++a) {
      w[x.digraph->arc(a).name] = x.weights[a];
    }
    j["weights"] = w;
  }
  if (!x.parts.empty()) {
    nlohmann::json parts = nlohmann::json::array();
    for (const Digraph& d : x.parts) parts.push_back(digraph_to_json(d));
    j["parts"] = parts;
    if (x.cut_vertex.empty()) {
      nlohmann::json cross = nlohmann::json::array();
      for (const CrossArc& c : x.cross) {
        cross.push_back({{"id", c.name}, {"tail", c.tail}, {"head", c.head}});
      }
      j["cross"] = cross;
    } else {
      j["cut_vertex"] = x.cut_vertex;
    }
  }
  return j;
}

Instance instance_from_json(const nlohmann::json& j) {
  Instance x;
  if (j.contains("digraph")) x.digraph = digraph_from_json(j.at("digraph"));
  if (j.contains("bipartite")) x.bipartite = bipartite_from_json(j.at("bipartite"));
  if (j.contains("weights")) {
    std::map<std::string, std::int64_t> by_name =
        j.at("weights").get<std::map<std::string, std::int64_t>>();
    x.weights = arc_weights_from_map(*x.digraph, by_name);
  }
  if (j.contains("parts")) {
    for (const auto& p : j.at("parts")) x.parts.push_back(digraph_from_json(p));
    if (j.contains("cut_vertex")) x.cut_vertex = j.at("cut_vertex").get<std::string>();
    if (j.contains("cross")) {
      for (const auto& c : j.at("cross")) {
        x.cross.push_back({c.at("id").get<std::string>(),
                           c.at("tail").get<std::string>(),
                           c.at("head").get<std::string>()});
      }
    }
  }
  return x;
}

using Detail = std::optional<nlohmann::json>;

struct Theorem {
  std::string id;
  std::function<std::vector<Instance>(const VerifyBounds&)> generate;
  std::function<Detail(const Instance&)> check;
};

std::size_t pm_cap(const VerifyBounds& b) {
  return b.pm_cap > 0 ? static_cast<std::size_t>(b.pm_cap)
                      : std::numeric_limits<std::size_t>::max();
}

Instance of_digraph(Digraph d) {
  Instance x;
  x.digraph = std::move(d);
  return x;
}

Instance of_bipartite(const BipartiteGraph& g, const Matching& m) {
  Instance x;
  x.bipartite = MarkedBipartite{g, m};
  return x;
}

std::vector<Instance> small_digraphs(const VerifyBounds& b) {
  std::vector<Instance> out;
  DigraphEnumOptions opts;
  opts.loops = true;
  opts.max_arcs = b.max_arcs;
  for (int n = 1; n <= b.max_vertices; ++n) {
    for (Digraph& d : enumerate_digraphs(n, opts)) out.push_back(of_digraph(std::move(d)));
  }
  return out;
}

// Random multidigraphs: a random number of arcs, each with uniform ends, so
// loops and parallel arcs both occur.
std::vector<Instance> sampled_digraphs(const VerifyBounds& b) {
  std::vector<Instance> out;
  Rng rng(b.seed);
  const int n = b.sample_vertices;
  std::uniform_int_distribution<int> count(0, b.sample_max_arcs), end(0, n - 1);
  for (int i = 0; i < b.samples; ++i) {
    std::vector<std::pair<int, int>> arcs(count(rng));
    for (auto& a : arcs) a = {end(rng), end(rng)};
    out.push_back(of_digraph(Digraph::from_arcs(n, arcs)));
  }
  return out;
}

// (G, M) pairs over the given graphs, one per isomorphism class of D(G, M)
// within each G (or across all G when `global`).
std::vector<Instance> with_matchings(const std::vector<BipartiteGraph>& graphs,
                                     const VerifyBounds& b, bool global) {
  std::vector<Instance> out;
  std::unordered_set<CanonicalKey> seen;
  for (const BipartiteGraph& g : graphs) {
    if (!global) seen.clear();
    for (const Matching& m : perfect_matchings(g, pm_cap(b)).matchings) {
      if (seen.insert(canonical_form(dgm(g, m))).second) {
        out.push_back(of_bipartite(g, m));
      }
    }
  }
  return out;
}

std::vector<BipartiteGraph> braces_up_to(int max_vertices) {
  std::vector<BipartiteGraph> out;
  for (int half = 2; 2 * half <= max_vertices; ++half) {
    for (BipartiteGraph& g : enumerate_braces(half)) out.push_back(std::move(g));
  }
  return out;
}

Digraph prefixed(const Digraph& d, const std::string& prefix) {
  Digraph out;
  for (const std::string& name : d.vertex_names()) out.add_vertex(prefix + name);
  for (const Arc& a : d.arcs()) out.add_arc(prefix + a.name, a.tail, a.head);
  return out;
}

// 0-sums and 1-sums of random small digraphs, alternating.
std::vector<Instance> random_compositions(const VerifyBounds& b) {
  std::vector<Instance> out;
  Rng rng(b.seed);
  std::uniform_int_distribution<int> size(1, 3), few(0, 3);
  while (static_cast<int>(out.size()) < b.random_instances) {
    Instance x;
    if (out.size() % 2 == 0) {
      Digraph d1 = prefixed(random_digraph(size(rng), 0.5, rng, true), "x");
      Digraph d2 = prefixed(random_digraph(size(rng), 0.5, rng, true), "y");
      int k = few(rng);
      for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> t(0, d2.num_vertices() - 1),
            h(0, d1.num_vertices() - 1);
        x.cross.push_back({"z" + std::to_string(i), d2.vertex_name(t(rng)),
                           d1.vertex_name(h(rng))});
      }
      x.parts = {d1, d2};
    } else {
      // v is the last vertex of d1 and the first of d2.
      Digraph r1 = random_digraph(size(rng) + 1, 0.5, rng, true);
      Digraph r2 = random_digraph(size(rng) + 1, 0.5, rng, true);
      Digraph d1, d2;
      for (int i = 0; i + 1 < r1.num_vertices(); ++i) d1.add_vertex("x" + std::to_string(i));
      d1.add_vertex("v");
      d2.add_vertex("v");
      for (int i = 1; i < r2.num_vertices(); ++i) d2.add_vertex("y" + std::to_string(i));
      for (const Arc& a : r1.arcs()) d1.add_arc("x" + a.name, a.tail, a.head);
      for (const Arc& a : r2.arcs()) d2.add_arc("y" + a.name, a.tail, a.head);
      const VertexId v1 = d1.num_vertices() - 1;
      std::uniform_int_distribution<int> t(0, v1 - 1), h(1, d2.num_vertices() - 1);
      int k = few(rng);
      for (int i = 0; i < k; ++i) {
        std::string name = "f" + std::to_string(i);
        d1.add_arc(name, t(rng), v1);
        d2.add_arc(name, 0, h(rng));
      }
      if (!strongly_connected(one_sum(d1, d2, "v"))) continue;
      x.parts = {d1, d2};
      x.cut_vertex = "v";
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Instance> decomposition_corpus(const VerifyBounds& b) {
  std::vector<Instance> out;
  std::vector<BipartiteGraph> pool = planar_braces(6);
  ThreeCubeTrisum fixture = three_cube_trisum();
  out.push_back(of_bipartite(fixture.graph, {}));
  Rng rng(b.seed);
  std::vector<BipartiteGraph> nested = pool;
  int attempts = 0;
  while (static_cast<int>(out.size()) < b.random_instances &&
         attempts++ < 50 * b.random_instances) {
    // Plain trisums, 4-sums with parallel seam edges, and sums whose parts
    // are themselves sums.
    const int kind = attempts % 3;
    std::optional<RandomSum> r;
    if (kind == 0) r = random_brace_sum(pool, 3, rng);
    if (kind == 1) r = random_brace_sum(nested, 2, rng, 4);
    if (kind == 2) r = random_brace_sum(nested, 3, rng, 2);
    if (!r || r->graph.num_vertices() > 36) continue;
    if (kind == 0 && nested.size() < pool.size() + 8) nested.push_back(r->graph);
    out.push_back(of_bipartite(r->graph, {}));
  }
  return out;
}

bool fully_decomposed(const DecompositionNode& node) {
  if (node.kind == NodeKind::kObstructed || node.kind == NodeKind::kHeawoodLeaf) {
    return false;
  }
  return std::all_of(node.children.begin(), node.children.end(), fully_decomposed);
}

std::string obstruction_name(const std::optional<Obstruction>& o) {
  if (!o) return "none";
  return o->kind == ObstructionKind::kF7 ? "F7"
                                         : "ODC" + std::to_string(o->k);
}

const std::vector<Theorem>& theorems() {
  static const std::vector<Theorem> table = {
      {"T1.1",
       [](const VerifyBounds& b) {
         auto out = small_digraphs(b);
         auto more = sampled_digraphs(b);
         out.insert(out.end(), more.begin(), more.end());
         return out;
       },
       [](const Instance& x) -> Detail {
         bool brute = packs_bruteforce(*x.digraph).packs;
         auto o = find_obstruction(*x.digraph);
         if (brute != o.has_value()) return std::nullopt;
         return nlohmann::json{{"packs", brute},
                               {"obstruction", obstruction_name(o)}};
       }},
      {"T2.1",
       [](const VerifyBounds& b) {
         std::vector<Instance> out;
         Rng rng(b.seed);
         std::uniform_int_distribution<int> n(2, b.max_planar_vertices),
             w(1, b.max_weight);
         for (int i = 0; i < b.random_instances; ++i) {
           Instance x = of_digraph(random_planar_digraph(n(rng), rng));
           for (ArcId a = 0; a < x.digraph->num_arcs(); ++a) x.weights.push_back(w(rng));
           out.push_back(std::move(x));
         }
         return out;
       },
       [](const Instance& x) -> Detail {
         LyReport r = ly_check(*x.digraph, x.weights);
         if (r.equal()) return std::nullopt;
         return nlohmann::json{{"cover", r.cover.value},
                               {"packing", r.packing.value}};
       }},
      {"T2.2", small_digraphs,
       [](const Instance& x) -> Detail {
         std::int64_t n = nu(*x.digraph).value;
         if (n > 1) return std::nullopt;
         std::int64_t t = tau(*x.digraph).value;
         if (t <= 3) return std::nullopt;
         return nlohmann::json{{"nu", n}, {"tau", t}};
       }},
      {"P5.2",
       [](const VerifyBounds& b) {
         std::vector<BipartiteGraph> graphs;
         for (int half = 1; 2 * half <= b.max_bipartite_vertices; ++half) {
           for (BipartiteGraph& g : enumerate_bipartite_with_pm(half)) {
             if (g.is_connected()) graphs.push_back(std::move(g));
           }
         }
         return with_matchings(graphs, b, false);
       },
       [](const Instance& x) -> Detail {
         const auto& [g, m] = *x.bipartite;
         Digraph d = dgm(g, m);
         for (int k = 1; k <= 3; ++k) {
           bool ext = k_extendable(g, k), conn = strongly_k_connected(d, k);
           if (ext != conn) {
             return nlohmann::json{{"k", k}, {"extendable", ext},
                                   {"strongly_connected", conn}};
           }
         }
         return std::nullopt;
       }},
      {"T5.5-i-iv",
       [](const VerifyBounds& b) {
         return with_matchings(braces_up_to(b.max_brace_vertices), b, false);
       },
       [](const Instance& x) -> Detail {
         const auto& [g, m] = *x.bipartite;
         bool k33_in = contains_k33(g);
         auto o = find_obstruction(dgm(g, m));
         bool odc = o && o->kind == ObstructionKind::kOddDoubleCircuit;
         if (k33_in == odc) return std::nullopt;
         return nlohmann::json{{"contains_k33", k33_in},
                               {"obstruction", obstruction_name(o)}};
       }},
      {"C4.1",
       [](const VerifyBounds& b) {
         std::vector<BipartiteGraph> graphs;
         for (int half = 1; 2 * half <= b.max_bipartite_vertices; ++half) {
           for (BipartiteGraph& g : enumerate_bipartite_with_pm(half)) {
             if (planar(g)) graphs.push_back(std::move(g));
           }
         }
         return with_matchings(graphs, b, true);
       },
       [](const Instance& x) -> Detail {
         PacksResult r = packs_bruteforce(dgm(x.bipartite->graph, x.bipartite->matching));
         if (r.packs) return std::nullopt;
         return packs_result_to_json(r);
       }},
      {"C5.11",
       [](const VerifyBounds& b) {
         return with_matchings(braces_up_to(b.max_bipartite_vertices), b, false);
       },
       [](const Instance& x) -> Detail {
         const auto& [g, m] = *x.bipartite;
         bool clean = !contains_k33(g) && !contains_heawood(g);
         bool packs = packs_bruteforce(dgm(g, m)).packs;
         bool decomposes = fully_decomposed(trisum_decompose(g));
         if (clean == packs && packs == decomposes) return std::nullopt;
         return nlohmann::json{{"no_k33_or_heawood", clean},
                               {"packs", packs},
                               {"decomposes", decomposes}};
       }},
      {"sums", random_compositions,
       [](const Instance& x) -> Detail {
         const bool zero = x.cut_vertex.empty();
         Digraph whole = zero ? zero_sum(x.parts[0], x.parts[1], x.cross)
                              : one_sum(x.parts[0], x.parts[1], x.cut_vertex);
         bool p0 = packs_bruteforce(x.parts[0]).packs;
         bool p1 = packs_bruteforce(x.parts[1]).packs;
         bool pw = packs_bruteforce(whole).packs;
         nlohmann::json detail{{"whole", pw}, {"first", p0}, {"second", p1}};
         if (pw != (p0 && p1)) return detail;
         if (zero) {
           // Every circuit of a 0-sum lies in one part.
           for (const Circuit& c : enumerate_circuits(whole).circuits) {
             std::set<bool> sides;
             for (VertexId v : circuit_vertices(whole, c)) {
               sides.insert(x.parts[0].find_vertex(whole.vertex_name(v)).has_value());
             }
             if (sides.size() > 1) {
               detail["split_circuit"] = circuit_to_json(whole, c);
               return detail;
             }
           }
         }
         return std::nullopt;
       }},
      {"decompose", decomposition_corpus,
       [](const Instance& x) -> Detail {
         const BipartiteGraph& g = x.bipartite->graph;
         DecompositionNode node = trisum_decompose(g);
         nlohmann::json detail{{"kind", node_kind_name(node.kind)}};
         if (!fully_decomposed(node)) return detail;
         if (canonical_form(compose_tree(node)) != canonical_form(g)) {
           detail["round_trip"] = false;
           return detail;
         }
         for (const BipartiteGraph& part : sum_parts(node)) {
           LemmaXReport r = lemma_x_check(part);
           if (!r.ok) {
             detail["lemma_x"] = {{"edges", r.edges},
                                  {"part", bipartite_to_json(part)}};
             return detail;
           }
         }
         // No obstruction minor. Every dgm class of the fixture is searched;
         // other sums get one class, and only up to 14 vertices, since the
         // minor search is slow beyond that.
         const bool fixture = canonical_form(g) == canonical_form(three_cube_trisum().graph);
         if (fixture || g.num_vertices() <= 14) {
           std::unordered_set<CanonicalKey> seen;
           for (const Matching& m : perfect_matchings(g, fixture ? SIZE_MAX : 1).matchings) {
             Digraph d = dgm(g, m);
             if (!seen.insert(canonical_form(d)).second) continue;
             if (auto o = find_obstruction(d)) {
               detail["matching"] = bipartite_to_json(g, m);
               detail["obstruction"] = obstruction_name(o);
               return detail;
             }
           }
         }
         return std::nullopt;
       }},
  };
  return table;
}

const Theorem& find_theorem(const std::string& id) {
  for (const Theorem& t : theorems()) {
    if (t.id == id) return t;
  }
  throw PreconditionError("unknown theorem id '" + id + "'");
}

}  // namespace

nlohmann::json bounds_to_json(const VerifyBounds& b) {
  return {{"max_vertices", b.max_vertices},
          {"max_arcs", b.max_arcs},
          {"samples", b.samples},
          {"sample_vertices", b.sample_vertices},
          {"sample_max_arcs", b.sample_max_arcs},
          {"max_bipartite_vertices", b.max_bipartite_vertices},
          {"max_brace_vertices", b.max_brace_vertices},
          {"random_instances", b.random_instances},
          {"max_planar_vertices", b.max_planar_vertices},
          {"max_weight", b.max_weight},
          {"pm_cap", b.pm_cap},
          {"seed", b.seed},
          {"threads", b.threads}};
}

VerifyBounds bounds_from_json(const nlohmann::json& j, const VerifyBounds& base) {
  if (!j.is_object()) throw PreconditionError("bounds must be a JSON object");
  nlohmann::json merged = bounds_to_json(base);
  for (const auto& [key, value] : j.items()) {
    if (!merged.contains(key)) throw PreconditionError("unknown bound '" + key + "'");
    if (!value.is_number_integer()) {
      throw PreconditionError("bound '" + key + "' must be an integer");
    }
    merged[key] = value;
  }
  VerifyBounds b;
  b.max_vertices = merged["max_vertices"];
  b.max_arcs = merged["max_arcs"];
  b.samples = merged["samples"];
  b.sample_vertices = merged["sample_vertices"];
  b.sample_max_arcs = merged["sample_max_arcs"];
  b.max_bipartite_vertices = merged["max_bipartite_vertices"];
  b.max_brace_vertices = merged["max_brace_vertices"];
  b.random_instances = merged["random_instances"];
  b.max_planar_vertices = merged["max_planar_vertices"];
  b.max_weight = merged["max_weight"];
  b.pm_cap = merged["pm_cap"];
  b.seed = merged["seed"];
  b.threads = merged["threads"];
  if (b.threads < 1) throw PreconditionError("threads must be positive");
  if (b.max_brace_vertices > 16 || b.max_bipartite_vertices > 16) {
    throw PreconditionError("bipartite enumeration limited to 16 vertices");
  }
  if (b.sample_vertices < 1 || b.max_planar_vertices < 2 || b.max_weight < 1) {
    throw PreconditionError("bounds out of range");
  }
  return b;
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const Theorem& t : theorems()) out.push_back(t.id);
  return out;
}

VerificationReport verify_theorem(const std::string& id,
                                  const VerifyBounds& bounds) {
  const Theorem& t = find_theorem(id);
  const auto start = std::chrono::steady_clock::now();
  std::vector<Instance> instances = t.generate(bounds);
  std::vector<Detail> details(instances.size());
  std::vector<bool> skipped(instances.size(), false);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        details[i] = t.check(instances[i]);
      } catch (const BudgetExceeded&) {
        skipped[i] = true;
      } catch (const PreconditionError&) {
        skipped[i] = true;  // a size guard
      } catch (const std::logic_error& e) {
        // A certificate that failed validation is a failure, not a skip.
        details[i] = nlohmann::json{{"error", e.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < bounds.threads; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  VerificationReport r;
  r.theorem = id;
  r.bounds = bounds_to_json(bounds);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (skipped[i]) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    if (details[i]) {
      r.failures.push_back({{"instance", instance_to_json(instances[i])},
                            {"detail", *details[i]}});
    }
  }
  r.incomplete = r.skipped > 0;
  std::sort(r.failures.begin(), r.failures.end(),
            [](const nlohmann::json& x, const nlohmann::json& y) {
              return x.dump() < y.dump();
            });
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

bool replay_failure(const std::string& id, const nlohmann::json& failure) {
  const Theorem& t = find_theorem(id);
  Instance x = instance_from_json(failure.at("instance"));
  try {
    return t.check(x).has_value();
  } catch (const std::logic_error&) {
    return true;
  }
}

nlohmann::json report_to_json(const VerificationReport& r) {
  return {{"theorem", r.theorem},
          {"bounds", r.bounds},
          {"instances", r.instances},
          {"skipped", r.skipped},
          {"incomplete", r.incomplete},
          {"failures", r.failures},
          {"wall_ms", r.wall_ms}};
}

}  // namespace circuitpack
