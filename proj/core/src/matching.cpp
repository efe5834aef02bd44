#include "circuitpack/matching.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "circuitpack/set_system.hpp"

namespace circuitpack {
namespace {

class MatchingEnumerator {
 public:
  MatchingEnumerator(const BipartiteGraph& g, std::size_t cap)
      : g_(g), cap_(cap), used_b_(g.size_b(), false) {}

  MatchingList run() {
    if (g_.size_a() == g_.size_b()) rec(0);
    for (auto& m : out_.matchings) std::sort(m.edges.begin(), m.edges.end());
    std::sort(out_.matchings.begin(), out_.matchings.end());
    return std::move(out_);
  }

 private:
  const BipartiteGraph& g_;
  std::size_t cap_;
  std::vector<bool> used_b_;
  std::vector<EdgeId> chosen_;
  MatchingList out_;

  void rec(int a) {
    if (out_.truncated) return;
    if (a == g_.size_a()) {
      if (out_.matchings.size() >= cap_) {
        out_.truncated = true;
        return;
      }
      out_.matchings.push_back(Matching{chosen_});
      return;
    }
    for (EdgeId e : g_.incident(a)) {
      int b = g_.edge(e).b;
      if (used_b_[b]) continue;
      used_b_[b] = true;
      chosen_.push_back(e);
      rec(a + 1);
      chosen_.pop_back();
      used_b_[b] = false;
    }
  }
};

// Kuhn's augmenting paths from every A vertex.
class Kuhn {
 public:
  Kuhn(const BipartiteGraph& g, const std::vector<bool>* removed)
      : g_(g), removed_(removed), mate_b_(g.size_b(), -1) {}

  std::optional<Matching> run() {
    int live_a = 0, live_b = 0;
    for (int v = 0; v < g_.num_vertices(); ++v) {
      if (gone(v)) continue;
      (g_.is_a(v) ? live_a : live_b)++;
    }
    if (live_a != live_b) return std::nullopt;
    for (int a = 0; a < g_.size_a(); ++a) {
      if (gone(a)) continue;
      seen_.assign(g_.size_b(), false);
      if (!augment(a)) return std::nullopt;
    }
    Matching m;
    for (int b = 0; b < g_.size_b(); ++b) {
      if (mate_b_[b] >= 0) m.edges.push_back(mate_b_[b]);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }

 private:
  const BipartiteGraph& g_;
  const std::vector<bool>* removed_;
  std::vector<EdgeId> mate_b_;  // matched edge per B vertex
  std::vector<bool> seen_;

  bool gone(int v) const { return removed_ && (*removed_)[v]; }

  bool augment(int a) {
    for (EdgeId e : g_.incident(a)) {
      int b = g_.edge(e).b;
      if (gone(g_.global_b(b)) || seen_[b]) continue;
      seen_[b] = true;
      if (mate_b_[b] < 0 || augment(g_.edge(mate_b_[b]).a)) {
        mate_b_[b] = e;
        return true;
      }
    }
    return false;
  }
};

// All matchings with at most k edges, reported by their vertex sets.
void small_matchings(const BipartiteGraph& g, int k, EdgeId from,
                     std::vector<bool>& covered, const auto& visit) {
  if (!visit(covered)) return;
  if (k == 0) return;
  for (EdgeId e = from; e < g.num_edges(); ++e) {
    int a = g.edge_end_a(e), b = g.edge_end_b(e);
    if (covered[a] || covered[b]) continue;
    covered[a] = covered[b] = true;
    small_matchings(g, k - 1, e + 1, covered, visit);
    covered[a] = covered[b] = false;
  }
}

std::vector<int> sorted_vertices(const EdgeCircuit& c) {
  std::vector<int> vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<int> sorted_edges(const EdgeCircuit& c) {
  std::vector<int> es(c.edges.begin(), c.edges.end());
  std::sort(es.begin(), es.end());
  return es;
}

void require_perfect(const BipartiteGraph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) {
    throw PreconditionError("alternating circuits need a perfect matching");
  }
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

MatchingList perfect_matchings(const BipartiteGraph& g, std::size_t cap) {
  return MatchingEnumerator(g, cap).run();
}

std::optional<Matching> find_perfect_matching(const BipartiteGraph& g,
                                              const std::vector<bool>* removed) {
  return Kuhn(g, removed).run();
}

bool has_perfect_matching(const BipartiteGraph& g,
                          const std::vector<bool>* removed) {
  return find_perfect_matching(g, removed).has_value();
}

bool k_extendable(const BipartiteGraph& g, int k) {
  if (k < 0) throw PreconditionError("k_extendable needs k >= 0");
  std::vector<bool> covered(g.num_vertices(), false);
  bool ok = true;
  // Matchings with the same vertex set extend (or not) together.
  std::map<std::vector<bool>, bool> seen;
  small_matchings(g, k, 0, covered, [&](const std::vector<bool>& c) {
    if (!ok) return false;
    auto [it, fresh] = seen.emplace(c, true);
    if (fresh) {
      it->second = has_perfect_matching(g, &c);
      ok = it->second;
    }
    return ok;
  });
  return ok;
}

bool is_brace(const BipartiteGraph& g) {
  return g.size_a() >= 2 && g.size_b() >= 2 && g.size_a() == g.size_b() &&
         g.is_connected() && k_extendable(g, 2);
}

std::vector<EdgeCircuit> bipartite_circuits(const BipartiteGraph& g,
                                            int max_length) {
  const int n = g.num_vertices();
  if (max_length < 0) max_length = n;
  std::vector<EdgeCircuit> out;
  std::vector<bool> on_path(n, false);
  EdgeCircuit path;
  for (int s = 0; s < n; ++s) {
    auto walk = [&](auto&& self, int x) -> void {
      for (EdgeId e : g.incident(x)) {
        int y = g.other_end(e, x);
        if (y == s) {
          if (path.edges.empty() || path.edges.front() >= e) continue;
          path.edges.push_back(e);
          path.vertices.push_back(x);
          out.push_back(path);
          path.edges.pop_back();
          path.vertices.pop_back();
          continue;
        }
        if (y < s || on_path[y]) continue;
        if (static_cast<int>(path.edges.size()) + 2 > max_length) continue;
        on_path[y] = true;
        path.edges.push_back(e);
        path.vertices.push_back(x);
        self(self, y);
        path.edges.pop_back();
        path.vertices.pop_back();
        on_path[y] = false;
      }
    };
    on_path[s] = true;
    walk(walk, s);
    on_path[s] = false;
  }
  return out;
}

std::vector<EdgeCircuit> central_circuits(const BipartiteGraph& g, int length) {
  std::vector<EdgeCircuit> out;
  for (EdgeCircuit& c : bipartite_circuits(g, length)) {
    if (static_cast<int>(c.edges.size()) != length) continue;
    std::vector<bool> removed(g.num_vertices(), false);
    for (int v : c.vertices) removed[v] = true;
    if (has_perfect_matching(g, &removed)) out.push_back(std::move(c));
  }
  return out;
}

std::vector<EdgeCircuit> alternating_circuits(const BipartiteGraph& g,
                                              const Matching& m) {
  require_perfect(g, m);
  std::vector<EdgeId> mate(g.num_vertices(), -1);
  std::vector<bool> matched(g.num_edges(), false);
  for (EdgeId e : m.edges) {
    mate[g.edge_end_a(e)] = mate[g.edge_end_b(e)] = e;
    matched[e] = true;
  }
  std::vector<EdgeCircuit> out;
  std::vector<bool> on_path(g.size_a(), false);
  EdgeCircuit path;
  for (int s = 0; s < g.size_a(); ++s) {
    auto walk = [&](auto&& self, int x) -> void {
      for (EdgeId e : g.incident(x)) {
        if (matched[e]) continue;
        int y = g.edge_end_b(e);
        EdgeId back = mate[y];
        int next = g.edge_end_a(back);
        if (next != s && (next < s || on_path[next])) continue;
        path.edges.push_back(e);
        path.vertices.push_back(x);
        path.edges.push_back(back);
        path.vertices.push_back(y);
        if (next == s) {
          out.push_back(path);
        } else {
          on_path[next] = true;
          self(self, next);
          on_path[next] = false;
        }
        path.edges.resize(path.edges.size() - 2);
        path.vertices.resize(path.vertices.size() - 2);
      }
    };
    on_path[s] = true;
    walk(walk, s);
    on_path[s] = false;
  }
  return out;
}

AlternatingResult alternating_nu(const BipartiteGraph& g, const Matching& m,
                                 const SolverOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Budget budget(opts.budget);
  std::vector<EdgeCircuit> circuits = alternating_circuits(g, m);
  std::map<std::vector<int>, std::size_t> representative;
  SetSystem sys{g.num_vertices(), {}};
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    auto vs = sorted_vertices(circuits[i]);
    if (representative.emplace(vs, i).second) sys.sets.push_back(vs);
  }
  sys = minimal_sets(std::move(sys));
  std::vector<std::int64_t> cap(g.num_vertices(), 1);
  Packing p = max_packing(sys, cap, budget);
  AlternatingResult r;
  r.value = p.size;
  std::vector<bool> used(g.num_vertices(), false);
  for (std::size_t i = 0; i < sys.sets.size(); ++i) {
    if (p.multiplicity[i] == 0) continue;
    for (int v : sys.sets[i]) {
      if (used[v]) throw std::logic_error("alternating_nu: overlapping circuits");
      used[v] = true;
    }
    r.circuits.push_back(circuits[representative.at(sys.sets[i])]);
  }
  r.stats = {budget.used(), ms_since(start)};
  return r;
}

AlternatingResult alternating_tau(const BipartiteGraph& g, const Matching& m,
                                  const SolverOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Budget budget(opts.budget);
  std::vector<EdgeCircuit> circuits = alternating_circuits(g, m);
  SetSystem sys{g.num_edges(), {}};
  for (const auto& c : circuits) sys.sets.push_back(sorted_edges(c));
  sys = minimal_sets(std::move(sys));
  std::vector<std::int64_t> w(g.num_edges(), 1);
  HittingSet h = min_hitting_set(sys, w, budget);
  for (const auto& c : circuits) {
    auto es = sorted_edges(c);
    bool hit = std::any_of(h.elements.begin(), h.elements.end(), [&](int e) {
      return std::binary_search(es.begin(), es.end(), e);
    });
    if (!hit) throw std::logic_error("alternating_tau: circuit left intact");
  }
  AlternatingResult r;
  r.value = h.weight;
  r.edges.assign(h.elements.begin(), h.elements.end());
  r.stats = {budget.used(), ms_since(start)};
  return r;
}

nlohmann::json edge_circuit_to_json(const BipartiteGraph& g,
                                    const EdgeCircuit& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (EdgeId e : c.edges) edges.push_back(g.edge(e).name);
  return edges;
}

}  // namespace circuitpack
