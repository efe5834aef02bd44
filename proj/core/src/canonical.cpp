#include "circuitpack/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <tuple>
#include <utility>

#include "circuitpack/errors.hpp"

namespace circuitpack {
namespace {

class Labeler {
 public:
  Labeler(int n, std::span<const std::pair<int, int>> arcs)
      : n_(n), mult_(n * n, 0) {
    for (auto [t, h] : arcs) ++mult_[t * n_ + h];
    compute_twins();
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    std::vector<int> colors(n_);
    for (int v = 0; v < n_; ++v) {
      int outd = 0, ind = 0;
      for (int u = 0; u < n_; ++u) {
        outd += static_cast<int>(at(v, u));
        ind += static_cast<int>(at(u, v));
      }
      init_sig_.push_back({static_cast<int>(at(v, v)), outd, ind});
    }
    rank_by(colors, [&](int v) { return init_sig_[v]; });
    search(colors);
    return best_perm_;
  }

 private:
  int n_;
  std::vector<std::uint32_t> mult_;
  std::vector<int> twin_rep_;
  std::vector<std::array<int, 3>> init_sig_;
  std::vector<std::uint32_t> best_key_;
  std::vector<int> best_perm_;
  std::uint64_t leaves_ = 0;

  std::uint32_t at(int u, int v) const { return mult_[u * n_ + v]; }

  // Swapping u and v is an automorphism iff they have identical relations to
  // every other vertex and to each other in both directions.
  void compute_twins() {
    twin_rep_.assign(n_, -1);
    for (int u = 0; u < n_; ++u) {
      if (twin_rep_[u] >= 0) continue;
      twin_rep_[u] = u;
      for (int v = u + 1; v < n_; ++v) {
        if (twin_rep_[v] >= 0) continue;
        bool twin = at(u, u) == at(v, v) && at(u, v) == at(v, u);
        for (int x = 0; twin && x < n_; ++x) {
          if (x == u || x == v) continue;
          twin = at(u, x) == at(v, x) && at(x, u) == at(x, v);
        }
        if (twin) twin_rep_[v] = u;
      }
    }
  }

  // Replaces colors by the dense rank of key(v); ties keep equal colors.
  template <class KeyFn>
  static void rank_by(std::vector<int>& colors, KeyFn key) {
    const int n = static_cast<int>(colors.size());
    using K = decltype(key(0));
    std::vector<std::pair<K, int>> keyed;
    keyed.reserve(n);
    for (int v = 0; v < n; ++v) keyed.emplace_back(key(v), v);
    std::sort(keyed.begin(), keyed.end());
    int rank = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) ++rank;
      colors[keyed[i].second] = rank;
    }
  }

  static int num_cells(const std::vector<int>& colors) {
    return colors.empty() ? 0
                          : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  void refine(std::vector<int>& colors) const {
    int cells = num_cells(colors);
    while (true) {
      using Sig = std::tuple<int, std::vector<std::pair<int, std::uint32_t>>,
                             std::vector<std::pair<int, std::uint32_t>>>;
      std::vector<Sig> sig(n_);
      for (int v = 0; v < n_; ++v) {
        auto& [c, outs, ins] = sig[v];
        c = colors[v];
        for (int u = 0; u < n_; ++u) {
          if (u == v) continue;
          if (at(v, u)) outs.emplace_back(colors[u], at(v, u));
          if (at(u, v)) ins.emplace_back(colors[u], at(u, v));
        }
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
      }
      rank_by(colors, [&](int v) { return sig[v]; });
      int now = num_cells(colors);
      if (now == cells) return;
      cells = now;
    }
  }

  void search(std::vector<int> colors) {
    refine(colors);
    const int cells = num_cells(colors);
    if (cells == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<bool> tried_rep(n_, false);
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      int rep = twin_rep_[v];
      if (tried_rep[rep]) continue;
      tried_rep[rep] = true;
      std::vector<int> next = colors;
      rank_by(next, [&](int u) {
        return std::pair<int, int>(colors[u], colors[u] == target && u != v);
      });
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& colors) {
    if (++leaves_ > 5'000'000) throw BudgetExceeded("canonical labeling");
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[colors[v]] = v;
    std::vector<std::uint32_t> key;
    key.reserve(n_ * n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) key.push_back(at(inv[i], inv[j]));
    }
    if (best_perm_.empty() || key < best_key_) {
      best_key_ = std::move(key);
      best_perm_ = colors;
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(int n,
                                    std::span<const std::pair<int, int>> arcs) {
  if (n > kCanonicalVertexLimit) {
    throw PreconditionError("canonical form limited to " +
                            std::to_string(kCanonicalVertexLimit) +
                            " vertices");
  }
  return Labeler(n, arcs).run();
}

CanonicalKey canonical_form(int n, std::span<const std::pair<int, int>> arcs) {
  std::vector<int> pos = canonical_labeling(n, arcs);
  std::vector<std::uint32_t> mat(n * n, 0);
  for (auto [t, h] : arcs) ++mat[pos[t] * n + pos[h]];
  CanonicalKey key;
  key.reserve(2 + 2 * mat.size());
  key.push_back(static_cast<char>(n & 0xff));
  key.push_back(static_cast<char>((n >> 8) & 0xff));
  for (std::uint32_t m : mat) {
    key.push_back(static_cast<char>(m & 0xff));
    key.push_back(static_cast<char>((m >> 8) & 0xff));
  }
  return key;
}

namespace {

std::vector<std::pair<int, int>> arc_pairs(const Digraph& d) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(d.num_arcs());
  for (const Arc& a : d.arcs()) arcs.emplace_back(a.tail, a.head);
  return arcs;
}

}  // namespace

std::vector<int> canonical_labeling(const Digraph& d) {
  return canonical_labeling(d.num_vertices(), arc_pairs(d));
}

CanonicalKey canonical_form(const Digraph& d) {
  return canonical_form(d.num_vertices(), arc_pairs(d));
}

bool isomorphic(const Digraph& a, const Digraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arcs() != b.num_arcs()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

Digraph symmetric_digraph(const BipartiteGraph& g) {
  Digraph d;
  for (int v = 0; v < g.num_vertices(); ++v) d.add_vertex(g.vertex_name(v));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int a = g.edge_end_a(e), b = g.edge_end_b(e);
    d.add_arc(g.edge(e).name + "+", a, b);
    d.add_arc(g.edge(e).name + "-", b, a);
  }
  return d;
}

CanonicalKey canonical_form(const BipartiteGraph& g) {
  return canonical_form(symmetric_digraph(g));
}

bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace circuitpack
