#pragma once

// Brute-force references for the tests. Nothing here calls the library's
// algorithms; graphs are read through their accessors only.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/digraph.hpp"

namespace oracle {

using circuitpack::BipartiteGraph;
using circuitpack::Digraph;

// Plain arc list form: n vertices, (tail, head) pairs.
struct Small {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
};

inline Small small_of(const Digraph& d) {
  Small s{d.num_vertices(), {}};
  for (const auto& a : d.arcs()) s.arcs.emplace_back(a.tail, a.head);
  return s;
}

// Sorted arc multiset after relabelling by perm.
inline std::vector<std::pair<int, int>> relabel(const Small& s,
                                                const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> out;
  for (auto [t, h] : s.arcs) out.emplace_back(perm[t], perm[h]);
  std::sort(out.begin(), out.end());
  return out;
}

// Least relabelled arc list over all permutations. Fine up to ~8 vertices.
inline std::vector<std::pair<int, int>> brute_canonical(const Small& s) {
  std::vector<int> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best = relabel(s, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, relabel(s, perm));
  }
  return best;
}

inline bool brute_isomorphic(const Small& x, const Small& y) {
  if (x.n != y.n || x.arcs.size() != y.arcs.size()) return false;
  return brute_canonical(x) == brute_canonical(y);
}

inline bool brute_isomorphic(const Digraph& x, const Digraph& y) {
  return brute_isomorphic(small_of(x), small_of(y));
}

// Bipartite graphs compared as symmetric digraphs with a side marker: every
// side-A vertex gets a loop, which isomorphisms must preserve. Sides may swap,
// so the B-marked version is tried too.
inline Small marked_symmetric(const BipartiteGraph& g, bool mark_a) {
  Small s{g.num_vertices(), {}};
  for (circuitpack::EdgeId e = 0; e < g.num_edges(); ++e) {
    int a = g.edge_end_a(e), b = g.edge_end_b(e);
    s.arcs.emplace_back(a, b);
    s.arcs.emplace_back(b, a);
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_a(v) == mark_a) s.arcs.emplace_back(v, v);
  }
  return s;
}

inline bool brute_isomorphic(const BipartiteGraph& x, const BipartiteGraph& y) {
  Small sx = marked_symmetric(x, true);
  return brute_isomorphic(sx, marked_symmetric(y, true)) ||
         brute_isomorphic(sx, marked_symmetric(y, false));
}

inline bool acyclic_without(const Small& s, const std::vector<bool>& gone) {
  std::vector<int> indeg(s.n, 0);
  for (auto [t, h] : s.arcs) {
    if (!gone[t] && !gone[h]) ++indeg[h];
  }
  std::vector<int> queue;
  for (int v = 0; v < s.n; ++v) {
    if (!gone[v] && indeg[v] == 0) queue.push_back(v);
  }
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (auto [t, h] : s.arcs) {
      if (t == v && !gone[h] && --indeg[h] == 0) queue.push_back(h);
    }
  }
  int alive = 0;
  for (int v = 0; v < s.n; ++v) alive += !gone[v];
  return seen == alive;
}

// Vertex sequences of all circuits: every cyclic vertex order starting at its
// least vertex (both directions), counted with the product of arc
// multiplicities.
struct VertexCircuit {
  std::vector<int> vertices;
  std::int64_t multiplicity = 0;
};

inline std::vector<VertexCircuit> brute_directed_circuits(const Small& s) {
  std::map<std::pair<int, int>, int> mult;
  for (auto a : s.arcs) ++mult[a];
  std::vector<VertexCircuit> out;
  for (std::uint32_t mask = 1; mask < (1u << s.n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < s.n; ++v) {
      if (mask >> v & 1) vs.push_back(v);
    }
    do {
      std::int64_t m = 1;
      for (std::size_t i = 0; i < vs.size() && m; ++i) {
        auto it = mult.find({vs[i], vs[(i + 1) % vs.size()]});
        m *= it == mult.end() ? 0 : it->second;
      }
      if (m) out.push_back({vs, m});
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return out;
}

inline std::int64_t brute_circuit_count(const Small& s) {
  std::int64_t total = 0;
  for (const auto& c : brute_directed_circuits(s)) total += c.multiplicity;
  return total;
}

// Vertex masks of circuits, deduplicated.
inline std::vector<std::uint32_t> circuit_masks(const Small& s) {
  std::set<std::uint32_t> masks;
  for (const auto& c : brute_directed_circuits(s)) {
    std::uint32_t m = 0;
    for (int v : c.vertices) m |= 1u << v;
    masks.insert(m);
  }
  return {masks.begin(), masks.end()};
}

inline std::int64_t brute_tau(const Small& s,
                              const std::vector<std::int64_t>& w = {}) {
  std::int64_t best = -1;
  for (std::uint32_t t = 0; t < (1u << s.n); ++t) {
    std::vector<bool> gone(s.n);
    std::int64_t cost = 0;
    for (int v = 0; v < s.n; ++v) {
      gone[v] = t >> v & 1;
      if (gone[v]) cost += w.empty() ? 1 : w[v];
    }
    if ((best < 0 || cost < best) && acyclic_without(s, gone)) best = cost;
  }
  return best;
}

// Largest circuit family using vertex v at most cap[v] times.
inline std::int64_t brute_nu(const Small& s,
                             const std::vector<std::int64_t>& cap = {}) {
  std::vector<std::uint32_t> masks = circuit_masks(s);
  std::vector<std::int64_t> left(s.n, 1);
  if (!cap.empty()) left = cap;
  std::function<std::int64_t(std::size_t)> rec = [&](std::size_t i) -> std::int64_t {
    if (i == masks.size()) return 0;
    std::int64_t best = rec(i + 1);
    int used = 0;
    while (true) {
      bool fits = true;
      for (int v = 0; v < s.n; ++v) {
        if ((masks[i] >> v & 1) && left[v] == 0) fits = false;
      }
      if (!fits) break;
      for (int v = 0; v < s.n; ++v) {
        if (masks[i] >> v & 1) --left[v];
      }
      ++used;
      best = std::max(best, used + rec(i + 1));
    }
    for (int v = 0; v < s.n; ++v) {
      if (masks[i] >> v & 1) left[v] += used;
    }
    return best;
  };
  return rec(0);
}

// Arc versions: min-weight arc set meeting every circuit, max circuit family
// with arc capacities. Arcs are indexed as in s.arcs.
inline std::int64_t brute_tau_edge(const Small& s, const std::vector<std::int64_t>& w) {
  const int m = static_cast<int>(s.arcs.size());
  std::int64_t best = -1;
  for (std::uint32_t t = 0; t < (1u << m); ++t) {
    std::int64_t cost = 0;
    Small rest{s.n, {}};
    for (int a = 0; a < m; ++a) {
      if (t >> a & 1) cost += w[a];
      else rest.arcs.push_back(s.arcs[a]);
    }
    if (best >= 0 && cost >= best) continue;
    if (acyclic_without(rest, std::vector<bool>(s.n, false))) best = cost;
  }
  return best;
}

// Arc sets of circuits, as arc-index masks (each parallel choice separately).
inline std::vector<std::uint32_t> circuit_arc_masks(const Small& s) {
  std::set<std::uint32_t> out;
  const int m = static_cast<int>(s.arcs.size());
  for (const auto& c : brute_directed_circuits(s)) {
    std::vector<std::vector<int>> choices;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      std::pair<int, int> want{c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]};
      std::vector<int> ids;
      for (int a = 0; a < m; ++a) {
        if (s.arcs[a] == want) ids.push_back(a);
      }
      choices.push_back(ids);
    }
    std::function<void(std::size_t, std::uint32_t)> pick = [&](std::size_t i, std::uint32_t mask) {
      if (i == choices.size()) {
        out.insert(mask);
        return;
      }
      for (int a : choices[i]) pick(i + 1, mask | 1u << a);
    };
    pick(0, 0);
  }
  return {out.begin(), out.end()};
}

inline std::int64_t brute_nu_edge(const Small& s, const std::vector<std::int64_t>& cap) {
  std::vector<std::uint32_t> masks = circuit_arc_masks(s);
  std::vector<std::int64_t> left = cap;
  const int m = static_cast<int>(s.arcs.size());
  std::function<std::int64_t(std::size_t)> rec = [&](std::size_t i) -> std::int64_t {
    if (i == masks.size()) return 0;
    std::int64_t best = rec(i + 1);
    int used = 0;
    while (true) {
      bool fits = true;
      for (int a = 0; a < m; ++a) {
        if ((masks[i] >> a & 1) && left[a] == 0) fits = false;
      }
      if (!fits) break;
      for (int a = 0; a < m; ++a) {
        if (masks[i] >> a & 1) --left[a];
      }
      ++used;
      best = std::max(best, used + rec(i + 1));
    }
    for (int a = 0; a < m; ++a) {
      if (masks[i] >> a & 1) left[a] += used;
    }
    return best;
  };
  return rec(0);
}

// Vertex-induced and arc subdigraphs: does tau = nu hold on all of them.
inline bool brute_packs(const Small& s) {
  const int m = static_cast<int>(s.arcs.size());
  for (std::uint32_t keep = 0; keep < (1u << m); ++keep) {
    Small sub{s.n, {}};
    for (int a = 0; a < m; ++a) {
      if (keep >> a & 1) sub.arcs.push_back(s.arcs[a]);
    }
    if (brute_tau(sub) != brute_nu(sub)) return false;
  }
  return true;
}

// Ryser's formula on the multiplicity matrix: the number of perfect matchings
// of a bipartite multigraph with equal sides.
inline std::int64_t ryser_permanent(const BipartiteGraph& g) {
  const int n = g.size_a();
  if (n != g.size_b()) return 0;
  if (n == 0) return 1;
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : g.edges()) ++m[e.a][e.b];
  std::int64_t total = 0;
  for (std::uint32_t cols = 1; cols < (1u << n); ++cols) {
    std::int64_t prod = 1;
    for (int r = 0; r < n && prod; ++r) {
      std::int64_t sum = 0;
      for (int c = 0; c < n; ++c) {
        if (cols >> c & 1) sum += m[r][c];
      }
      prod *= sum;
    }
    int bits = __builtin_popcount(cols);
    total += ((n - bits) % 2 ? -1 : 1) * prod;
  }
  return total;
}

// Perfect matching of g minus the given vertices (global ids), by Ryser on the
// remainder.
inline bool brute_has_pm_without(const BipartiteGraph& g, const std::vector<bool>& gone) {
  BipartiteGraph rest;
  std::vector<int> index(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (gone[v]) continue;
    index[v] = g.is_a(v) ? rest.add_a(g.vertex_name(v)) : rest.add_b(g.vertex_name(v));
  }
  for (circuitpack::EdgeId e = 0; e < g.num_edges(); ++e) {
    int a = g.edge_end_a(e), b = g.edge_end_b(e);
    if (gone[a] || gone[b]) continue;
    rest.add_edge(index[a], index[b]);  // side indices
  }
  return ryser_permanent(rest) > 0;
}

// Every matching of at most k edges extends to a perfect matching.
inline bool brute_k_extendable(const BipartiteGraph& g, int k) {
  if (ryser_permanent(g) == 0) return false;
  const int m = g.num_edges();
  std::vector<int> chosen;
  std::function<bool(int)> rec = [&](int from) -> bool {
    if (!chosen.empty()) {
      std::vector<bool> gone(g.num_vertices(), false);
      for (int e : chosen) {
        gone[g.edge_end_a(e)] = true;
        gone[g.edge_end_b(e)] = true;
      }
      if (!brute_has_pm_without(g, gone)) return false;
    }
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int e = from; e < m; ++e) {
      bool clash = false;
      for (int f : chosen) {
        clash = clash || g.edge_end_a(e) == g.edge_end_a(f) ||
                g.edge_end_b(e) == g.edge_end_b(f);
      }
      if (clash) continue;
      chosen.push_back(e);
      bool ok = rec(e + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0);
}

inline bool brute_connected(const BipartiteGraph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (circuitpack::EdgeId e = 0; e < g.num_edges(); ++e) {
      int a = g.edge_end_a(e), b = g.edge_end_b(e);
      int w = a == v ? b : b == v ? a : -1;
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

inline bool brute_brace(const BipartiteGraph& g) {
  return g.size_a() >= 2 && g.size_b() >= 2 && brute_connected(g) &&
         brute_k_extendable(g, 2);
}

inline bool reaches_all(const Small& s, const std::vector<bool>& gone, bool forward) {
  int start = -1, alive = 0;
  for (int v = 0; v < s.n; ++v) {
    if (!gone[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(s.n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [t, h] : s.arcs) {
      int from = forward ? t : h, to = forward ? h : t;
      if (from == v && !gone[to] && !seen[to]) {
        seen[to] = true;
        ++count;
        stack.push_back(to);
      }
    }
  }
  return count == alive;
}

inline bool brute_strongly_connected(const Small& s, const std::vector<bool>& gone) {
  return reaches_all(s, gone, true) && reaches_all(s, gone, false);
}

inline bool brute_strongly_k_connected(const Small& s, int k) {
  for (std::uint32_t t = 0; t < (1u << s.n); ++t) {
    if (__builtin_popcount(t) > k - 1) continue;
    std::vector<bool> gone(s.n);
    for (int v = 0; v < s.n; ++v) gone[v] = t >> v & 1;
    if (!brute_strongly_connected(s, gone)) return false;
  }
  return true;
}

// Minor closure by plain recursion over single deletions and contractions,
// memoized on the brute canonical form. Only for tiny hosts.
class BruteMinor {
 public:
  explicit BruteMinor(const Small& target) : target_(brute_canonical(target)), n_(target.n) {}

  bool operator()(const Small& host) {
    if (host.n < n_ || host.arcs.size() < target_.size()) return false;
    auto key = std::make_pair(host.n, brute_canonical(host));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = host.n == n_ && key.second == target_;
    for (std::size_t a = 0; a < host.arcs.size() && !found; ++a) {
      Small h = host;
      h.arcs.erase(h.arcs.begin() + a);
      found = (*this)(h);
    }
    for (int v = 0; v < host.n && !found; ++v) found = (*this)(drop_vertex(host, v));
    for (std::size_t a = 0; a < host.arcs.size() && !found; ++a) {
      if (special(host, a)) found = (*this)(contract(host, a));
    }
    memo_[key] = found;
    return found;
  }

  static bool special(const Small& s, std::size_t a) {
    auto [u, v] = s.arcs[a];
    if (u == v) return false;
    int in_v = 0, out_u = 0;
    for (auto [t, h] : s.arcs) {
      in_v += h == v;
      out_u += t == u;
    }
    return in_v == 1 || out_u == 1;
  }

  static Small drop_vertex(const Small& s, int v) {
    Small out{s.n - 1, {}};
    for (auto [t, h] : s.arcs) {
      if (t == v || h == v) continue;
      out.arcs.emplace_back(t - (t > v), h - (h > v));
    }
    return out;
  }

  // Merge head into tail and remove the arc.
  static Small contract(const Small& s, std::size_t a) {
    auto [u, v] = s.arcs[a];
    Small out{s.n - 1, {}};
    auto map = [&](int x) {
      if (x == v) x = u;
      return x - (x > v);
    };
    for (std::size_t i = 0; i < s.arcs.size(); ++i) {
      if (i == a) continue;
      out.arcs.emplace_back(map(s.arcs[i].first), map(s.arcs[i].second));
    }
    return out;
  }

 private:
  std::vector<std::pair<int, int>> target_;
  int n_;
  std::map<std::pair<int, std::vector<std::pair<int, int>>>, bool> memo_;
};

}  // namespace oracle
