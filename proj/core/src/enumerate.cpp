#include "circuitpack/enumerate.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "circuitpack/canonical.hpp"
#include "circuitpack/errors.hpp"
#include "circuitpack/matching.hpp"
#include "circuitpack/planarity.hpp"
#include "circuitpack/transforms.hpp"

namespace circuitpack {
namespace {

using ArcList = std::vector<std::pair<int, int>>;

class MatrixEnumerator {
 public:
  MatrixEnumerator(int half, int min_degree)
      : half_(half), min_degree_(min_degree), cols_(half, 0) {
    for (int mask = (1 << half) - 1; mask >= 0; --mask) {
      if (__builtin_popcount(mask) >= min_degree) candidates_.push_back(mask);
    }
  }

  std::vector<BipartiteGraph> run() {
    rec(0, (1 << half_) - 1);
    return std::move(out_);
  }

 private:
  int half_, min_degree_;
  std::vector<int> candidates_;  // decreasing
  std::vector<int> rows_;
  std::vector<int> cols_;  // column prefixes, first row most significant
  std::unordered_set<CanonicalKey> seen_;
  std::vector<BipartiteGraph> out_;

  int bit(int row_mask, int col) const { return row_mask >> (half_ - 1 - col) & 1; }

  void rec(int row, int max_mask) {
    if (row == half_) {
      for (int j = 0; j < half_; ++j) {
        if (__builtin_popcount(cols_[j]) < min_degree_) return;
      }
      emit();
      return;
    }
    for (int mask : candidates_) {
      if (mask > max_mask) continue;
      std::vector<int> saved = cols_;
      bool ok = true;
      for (int j = 0; j < half_; ++j) cols_[j] = cols_[j] << 1 | bit(mask, j);
      for (int j = 0; ok && j + 1 < half_; ++j) ok = cols_[j] >= cols_[j + 1];
      if (ok) {
        rows_.push_back(mask);
        rec(row + 1, mask);
        rows_.pop_back();
      }
      cols_ = std::move(saved);
    }
  }

  void emit() {
    BipartiteGraph g;
    for (int i = 0; i < half_; ++i) g.add_a("a" + std::to_string(i));
    for (int i = 0; i < half_; ++i) g.add_b("b" + std::to_string(i));
    for (int i = 0; i < half_; ++i) {
      for (int j = 0; j < half_; ++j) {
        if (bit(rows_[i], j)) {
          g.add_edge("a" + std::to_string(i) + "b" + std::to_string(j), i, j);
        }
      }
    }
    if (seen_.insert(canonical_form(g)).second) out_.push_back(std::move(g));
  }
};

}  // namespace

std::vector<Digraph> enumerate_digraphs(int n, const DigraphEnumOptions& opts) {
  if (n < 0) throw PreconditionError("negative vertex count");
  ArcList slots;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v || opts.loops) slots.emplace_back(u, v);
    }
  }
  std::vector<ArcList> found;
  std::unordered_set<CanonicalKey> seen;
  std::vector<ArcList> level{ArcList{}};
  seen.insert(canonical_form(n, ArcList{}));
  found.push_back({});
  for (int arcs = 1; !level.empty(); ++arcs) {
    if (opts.max_arcs >= 0 && arcs > opts.max_arcs) break;
    std::vector<ArcList> next;
    for (const ArcList& g : level) {
      for (const auto& slot : slots) {
        if (std::find(g.begin(), g.end(), slot) != g.end()) continue;
        ArcList h = g;
        h.push_back(slot);
        std::sort(h.begin(), h.end());
        if (seen.insert(canonical_form(n, h)).second) next.push_back(h);
      }
    }
    found.insert(found.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<Digraph> out;
  out.reserve(found.size());
  for (const ArcList& g : found) out.push_back(Digraph::from_arcs(n, g));
  return out;
}

std::vector<BipartiteGraph> enumerate_bipartite_with_pm(int half) {
  std::vector<BipartiteGraph> out;
  std::unordered_set<CanonicalKey> seen;
  for (const Digraph& d : enumerate_digraphs(half)) {
    BipartiteGraph g = bipartite_double(d).graph;
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<BipartiteGraph> enumerate_bipartite_min_degree(int half,
                                                           int min_degree) {
  if (half < 1 || half > 8) {
    throw PreconditionError("bipartite enumeration supports 1..8 per side");
  }
  return MatrixEnumerator(half, min_degree).run();
}

std::vector<BipartiteGraph> enumerate_braces(int half) {
  if (half < 2) return {};
  std::vector<BipartiteGraph> out;
  for (BipartiteGraph& g :
       enumerate_bipartite_min_degree(half, half == 2 ? 2 : 3)) {
    if (is_brace(g)) out.push_back(std::move(g));
  }
  return out;
}

Digraph random_digraph(int n, double p, Rng& rng, bool loops) {
  std::bernoulli_distribution coin(p);
  ArcList arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if ((u != v || loops) && coin(rng)) arcs.emplace_back(u, v);
    }
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph random_planar_digraph(int n, Rng& rng) {
  ArcList pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int most = n >= 3 ? 3 * n - 6 : static_cast<int>(pairs.size());
  const int least = std::min(most, std::max(0, n - 1));
  const int target = std::uniform_int_distribution<int>(least, most)(rng);
  ArcList edges;
  for (const auto& e : pairs) {
    if (static_cast<int>(edges.size()) >= target) break;
    edges.push_back(e);
    if (!planar_graph(n, edges)) edges.pop_back();
  }
  std::uniform_int_distribution<int> way(0, 2);
  ArcList arcs;
  for (auto [u, v] : edges) {
    int w = way(rng);
    if (w != 1) arcs.emplace_back(u, v);
    if (w != 0) arcs.emplace_back(v, u);
  }
  return Digraph::from_arcs(n, arcs);
}

}  // namespace circuitpack
