#include "circuitpack/packs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "circuitpack/canonical.hpp"
#include "circuitpack/circuits.hpp"
#include "circuitpack/connectivity.hpp"
#include "circuitpack/enumerate.hpp"
#include "circuitpack/io.hpp"

namespace circuitpack {
namespace {

// Drops loops, all but the first of each parallel class, arcs on no circuit
// and then isolated vertices. Circuit vertex sets of every subdigraph are
// unaffected except for loops, and a loop at v only adds v to every
// optimal transversal and the loop itself to every optimal packing.
Digraph strip(const Digraph& d) {
  std::vector<bool> drop(d.num_arcs(), false);
  std::set<std::pair<VertexId, VertexId>> present;
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    const Arc& arc = d.arc(a);
    drop[a] = arc.is_loop() || !present.emplace(arc.tail, arc.head).second;
  }
  Digraph simple = d.without_arcs(drop);
  std::vector<bool> on = arcs_on_circuits(simple);
  std::vector<bool> off(on.size());
  for (std::size_t i = 0; i < on.size(); ++i) off[i] = !on[i];
  return simple.without_arcs(off).without_isolated_vertices();
}

class PacksCache {
 public:
  static constexpr std::size_t kMaxEntries = 4'000'000;

  std::optional<bool> find(const CanonicalKey& key) {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const CanonicalKey& key, bool packs) {
    std::unique_lock lock(mutex_);
    if (map_.size() >= kMaxEntries) map_.clear();
    map_.emplace(key, packs);
  }
  std::size_t size() {
    std::shared_lock lock(mutex_);
    return map_.size();
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, bool> map_;
};

PacksCache& packs_cache() {
  static PacksCache cache;
  return cache;
}

bool balanced(const Digraph& core, const SolverOptions& opts) {
  return nu(core, opts).value == tau(core, opts).value;
}

// `core` is already stripped.
bool packs_core(const Digraph& core, const PacksOptions& opts) {
  if (core.num_arcs() == 0) return true;
  if (core.num_arcs() > opts.max_arcs) {
    throw PreconditionError("packs_bruteforce limited to " +
                            std::to_string(opts.max_arcs) +
                            " arcs after reduction");
  }
  CanonicalKey key = canonical_form(core);
  if (auto known = packs_cache().find(key)) return *known;
  bool ok = balanced(core, opts.solver);
  for (ArcId a = 0; ok && a < core.num_arcs(); ++a) {
    ok = packs_core(strip(core.without_arc(a)), opts);
  }
  packs_cache().insert(key, ok);
  return ok;
}

NonPackWitness witness_in(const Digraph& core, const PacksOptions& opts) {
  SolveResult n = nu(core, opts.solver);
  SolveResult t = tau(core, opts.solver);
  if (n.value != t.value) return {core, std::move(n), std::move(t)};
  for (ArcId a = 0; a < core.num_arcs(); ++a) {
    Digraph sub = strip(core.without_arc(a));
    if (!packs_core(sub, opts)) return witness_in(sub, opts);
  }
  throw std::logic_error("packs cache disagrees with recomputation");
}

void choose(int n, int k, int from, std::vector<VertexId>& cur,
            const auto& visit) {
  if (static_cast<int>(cur.size()) == k) {
    visit(cur);
    return;
  }
  for (int v = from; v < n; ++v) {
    cur.push_back(v);
    choose(n, k, v + 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

PacksResult packs_bruteforce(const Digraph& d, const PacksOptions& opts) {
  Digraph core = strip(d);
  PacksResult r;
  r.packs = packs_core(core, opts);
  if (!r.packs) r.witness = witness_in(core, opts);
  return r;
}

ObstructionVerdict packs_via_obstructions(const Digraph& d,
                                          const MinorOptions& opts) {
  ObstructionVerdict v;
  v.obstruction = find_obstruction(d, opts);
  v.packs = !v.obstruction.has_value();
  return v;
}

std::vector<std::vector<VertexId>> all_min_transversals(
    const Digraph& d, const SolverOptions& opts) {
  const int k = static_cast<int>(tau(d, opts).value);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur;
  choose(d.num_vertices(), k, 0, cur, [&](const std::vector<VertexId>& t) {
    std::vector<bool> removed(d.num_vertices(), false);
    for (VertexId v : t) removed[v] = true;
    if (is_acyclic_without(d, removed)) out.push_back(t);
  });
  return out;
}

std::vector<std::vector<std::vector<VertexId>>> all_max_packings(
    const Digraph& d, const SolverOptions& opts) {
  const std::int64_t best = nu(d, opts).value;
  CircuitList list = enumerate_circuits(d, opts.circuit_cap);
  if (list.truncated) throw BudgetExceeded("circuit enumeration cap");
  std::set<std::vector<VertexId>> distinct;
  for (const Circuit& c : list.circuits) {
    auto vs = circuit_vertices(d, c);
    std::sort(vs.begin(), vs.end());
    distinct.insert(vs);
  }
  std::vector<std::vector<VertexId>> sets(distinct.begin(), distinct.end());
  std::vector<std::vector<std::vector<VertexId>>> out;
  std::vector<std::vector<VertexId>> family;
  std::vector<bool> used(d.num_vertices(), false);
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<std::int64_t>(family.size()) == best) {
      out.push_back(family);
      return;
    }
    for (std::size_t i = from; i < sets.size(); ++i) {
      const auto& s = sets[i];
      if (std::any_of(s.begin(), s.end(), [&](VertexId v) { return used[v]; })) {
        continue;
      }
      for (VertexId v : s) used[v] = true;
      family.push_back(s);
      self(self, i + 1);
      family.pop_back();
      for (VertexId v : s) used[v] = false;
    }
  };
  rec(rec, 0);
  return out;
}

bool check_remark_easy(const Digraph& d, VertexId v,
                       const SolverOptions& opts) {
  if (v < 0 || v >= d.num_vertices()) throw PreconditionError("no such vertex");
  PacksOptions popts;
  popts.solver = opts;
  if (!packs_bruteforce(d, popts).packs) {
    throw PreconditionError("check_remark_easy needs a digraph that packs");
  }
  auto transversals = all_min_transversals(d, opts);
  bool in_some_transversal =
      std::any_of(transversals.begin(), transversals.end(), [&](const auto& t) {
        return std::binary_search(t.begin(), t.end(), v);
      });
  auto packings = all_max_packings(d, opts);
  bool every_packing_uses =
      std::all_of(packings.begin(), packings.end(), [&](const auto& p) {
        return std::any_of(p.begin(), p.end(), [&](const auto& s) {
          return std::binary_search(s.begin(), s.end(), v);
        });
      });
  return in_some_transversal == every_packing_uses;
}

std::vector<WeightedFinding> weighted_obstruction_search(
    const WeightedSearchBounds& bounds, const SolverOptions& opts) {
  std::vector<WeightedFinding> out;
  for (int n = 1; n <= bounds.max_vertices; ++n) {
    for (const Digraph& d : enumerate_digraphs(n)) {
      // Both weighted optima add up over strong components, and weight 0
      // acts like deleting the vertex, so strongly connected digraphs with
      // positive weights cover every minimal example.
      if (d.num_arcs() == 0 || !strongly_connected(d)) continue;
      if (find_obstruction(d)) continue;
      std::unordered_set<CanonicalKey> seen;
      VertexWeights w(n, 1);
      while (true) {
        // Weighted digraph up to isomorphism: weight as a loop count.
        std::vector<std::pair<int, int>> arcs;
        for (const Arc& a : d.arcs()) arcs.emplace_back(a.tail, a.head);
        for (int v = 0; v < n; ++v) {
          for (std::int64_t i = 0; i < w[v]; ++i) arcs.emplace_back(v, v);
        }
        if (seen.insert(canonical_form(n, arcs)).second) {
          std::int64_t t = tau_weighted(d, w, opts).value;
          std::int64_t p = nu_weighted(d, w, opts).value;
          if (t > p) {
            out.push_back({d, w, p, t});
            if (static_cast<int>(out.size()) >= bounds.max_findings) return out;
          }
        }
        int i = 0;
        while (i < n && w[i] == bounds.max_weight) w[i++] = 1;
        if (i == n) break;
        ++w[i];
      }
    }
  }
  return out;
}

nlohmann::json packs_result_to_json(const PacksResult& r) {
  nlohmann::json j{{"packs", r.packs}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"subdigraph", digraph_to_json(w.subdigraph)},
                    {"nu", solve_result_to_json(w.subdigraph, w.nu)},
                    {"tau", solve_result_to_json(w.subdigraph, w.tau)}};
  }
  return j;
}

nlohmann::json weighted_finding_to_json(const WeightedFinding& f) {
  nlohmann::json weights;
  for (VertexId v = 0; v < f.digraph.num_vertices(); ++v) {
    weights[f.digraph.vertex_name(v)] = f.weights[v];
  }
  return {{"digraph", digraph_to_json(f.digraph)},
          {"weights", weights},
          {"nu", f.nu},
          {"tau", f.tau}};
}

std::size_t packs_cache_size() { return packs_cache().size(); }
void clear_packs_cache() { packs_cache().clear(); }

}  // namespace circuitpack
