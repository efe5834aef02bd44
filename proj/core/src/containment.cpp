#include "circuitpack/containment.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "circuitpack/canonical.hpp"
#include "circuitpack/fixtures.hpp"
#include "circuitpack/matching.hpp"

namespace circuitpack {
namespace {

// H with edges oriented A -> B; a side-swapping automorphism of H is an
// isomorphism between this digraph and its reverse.
bool side_symmetric(const BipartiteGraph& h) {
  std::vector<std::pair<int, int>> forward, backward;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    forward.emplace_back(h.edge_end_a(e), h.edge_end_b(e));
    backward.emplace_back(h.edge_end_b(e), h.edge_end_a(e));
  }
  const int n = h.num_vertices();
  return canonical_form(n, forward) == canonical_form(n, backward);
}

std::vector<int> neighbour_multiset(const BipartiteGraph& h, int v) {
  std::vector<int> out;
  for (EdgeId e : h.incident(v)) out.push_back(h.other_end(e, v));
  std::sort(out.begin(), out.end());
  return out;
}

class Embedder {
 public:
  Embedder(const BipartiteGraph& g, const BipartiteGraph& h, bool swapped,
           Budget& budget)
      : g_(g),
        h_(h),
        swapped_(swapped),
        budget_(budget),
        img_(h.num_vertices(), -1),
        used_v_(g.num_vertices(), false),
        used_e_(g.num_edges(), false),
        paths_(h.num_edges()) {
    plan();
  }

  std::optional<ContainmentWitness> run() {
    if (place(0)) return std::move(found_);
    return std::nullopt;
  }

 private:
  const BipartiteGraph& g_;
  const BipartiteGraph& h_;
  bool swapped_;
  Budget& budget_;
  std::vector<int> order_;     // placement order of H vertices
  std::vector<int> position_;  // index in order_
  std::vector<int> twin_before_;
  std::vector<int> img_;
  std::vector<bool> used_v_;
  std::vector<bool> used_e_;
  std::vector<std::vector<EdgeId>> paths_;
  ContainmentWitness found_;

  // Breadth-first from a vertex of largest degree in each component, so most
  // placements come with edges to route right away.
  void plan() {
    const int n = h_.num_vertices();
    position_.assign(n, -1);
    std::vector<int> by_degree(n);
    for (int v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int x, int y) {
      return h_.degree(x) > h_.degree(y);
    });
    for (int root : by_degree) {
      if (position_[root] >= 0) continue;
      std::queue<int> queue;
      queue.push(root);
      position_[root] = static_cast<int>(order_.size());
      order_.push_back(root);
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        for (EdgeId e : h_.incident(x)) {
          int y = h_.other_end(e, x);
          if (position_[y] >= 0) continue;
          position_[y] = static_cast<int>(order_.size());
          order_.push_back(y);
          queue.push(y);
        }
      }
    }
    // Twins (same side, same neighbours) are interchangeable.
    twin_before_.assign(n, -1);
    std::map<std::pair<bool, std::vector<int>>, int> last;
    for (int x : order_) {
      auto key = std::make_pair(h_.is_a(x), neighbour_multiset(h_, x));
      auto it = last.find(key);
      if (it != last.end()) twin_before_[x] = it->second;
      last[key] = x;
    }
  }

  bool g_side_is_a(int h_vertex) const { return h_.is_a(h_vertex) != swapped_; }

  bool place(std::size_t i) {
    budget_.tick("containment");
    if (i == order_.size()) return finish();
    const int x = order_[i];
    const bool want_a = g_side_is_a(x);
    const int lo = want_a ? 0 : g_.size_a();
    const int hi = want_a ? g_.size_a() : g_.num_vertices();
    int start = lo;
    if (twin_before_[x] >= 0) start = std::max(start, img_[twin_before_[x]] + 1);
    std::vector<EdgeId> pending;
    for (EdgeId e : h_.incident(x)) {
      int y = h_.other_end(e, x);
      if (position_[y] < static_cast<int>(i)) pending.push_back(e);
    }
    for (int c = start; c < hi; ++c) {
      if (used_v_[c] || g_.degree(c) < h_.degree(x)) continue;
      img_[x] = c;
      used_v_[c] = true;
      if (route(pending, 0, i)) return true;
      used_v_[c] = false;
      img_[x] = -1;
    }
    return false;
  }

  bool route(const std::vector<EdgeId>& pending, std::size_t k, std::size_t i) {
    if (k == pending.size()) return place(i + 1);
    const EdgeId he = pending[k];
    const int from = img_[h_.edge_end_a(he)];
    const int to = img_[h_.edge_end_b(he)];
    std::vector<EdgeId>& path = paths_[he];
    auto walk = [&](auto&& self, int u) -> bool {
      budget_.tick("containment");
      for (EdgeId e : g_.incident(u)) {
        if (used_e_[e]) continue;
        int w = g_.other_end(e, u);
        if (w == to) {
          used_e_[e] = true;
          path.push_back(e);
          if (route(pending, k + 1, i)) return true;
          path.pop_back();
          used_e_[e] = false;
          continue;
        }
        if (used_v_[w]) continue;
        used_v_[w] = true;
        used_e_[e] = true;
        path.push_back(e);
        if (self(self, w)) return true;
        path.pop_back();
        used_e_[e] = false;
        used_v_[w] = false;
      }
      return false;
    };
    return walk(walk, from);
  }

  bool finish() {
    auto m = find_perfect_matching(g_, &used_v_);
    if (!m) return false;
    found_.sides_swapped = swapped_;
    found_.branch = img_;
    found_.paths = paths_;
    found_.complement = std::move(*m);
    return true;
  }
};

}  // namespace

std::optional<ContainmentWitness> contains(const BipartiteGraph& g,
                                           const BipartiteGraph& h,
                                           const ContainmentOptions& opts) {
  if (h.num_vertices() > g.num_vertices() || h.num_edges() > g.num_edges()) {
    return std::nullopt;
  }
  Budget budget(opts.budget);
  for (bool swapped : {false, true}) {
    if (swapped && side_symmetric(h)) break;
    int need_a = swapped ? h.size_b() : h.size_a();
    int need_b = swapped ? h.size_a() : h.size_b();
    if (need_a > g.size_a() || need_b > g.size_b()) continue;
    if (auto w = Embedder(g, h, swapped, budget).run()) {
      if (!valid_containment(g, h, *w)) {
        throw std::logic_error("containment witness failed validation");
      }
      return w;
    }
  }
  return std::nullopt;
}

bool contains_k33(const BipartiteGraph& g, const ContainmentOptions& opts) {
  static const BipartiteGraph target = k33();
  return contains(g, target, opts).has_value();
}

bool contains_heawood(const BipartiteGraph& g,
                      const ContainmentOptions& opts) {
  static const BipartiteGraph target = heawood();
  return contains(g, target, opts).has_value();
}

bool valid_containment(const BipartiteGraph& g, const BipartiteGraph& h,
                       const ContainmentWitness& w) {
  if (static_cast<int>(w.branch.size()) != h.num_vertices() ||
      static_cast<int>(w.paths.size()) != h.num_edges()) {
    return false;
  }
  std::vector<bool> in_l(g.num_vertices(), false);
  for (int x = 0; x < h.num_vertices(); ++x) {
    int c = w.branch[x];
    if (c < 0 || c >= g.num_vertices() || in_l[c]) return false;
    if (g.is_a(c) != (h.is_a(x) != w.sides_swapped)) return false;
    in_l[c] = true;
  }
  std::vector<bool> edge_used(g.num_edges(), false);
  for (EdgeId he = 0; he < h.num_edges(); ++he) {
    const auto& path = w.paths[he];
    if (path.empty() || path.size() % 2 == 0) return false;
    int at = w.branch[h.edge_end_a(he)];
    const int end = w.branch[h.edge_end_b(he)];
    for (std::size_t i = 0; i < path.size(); ++i) {
      EdgeId e = path[i];
      if (e < 0 || e >= g.num_edges() || edge_used[e]) return false;
      if (g.edge_end_a(e) != at && g.edge_end_b(e) != at) return false;
      edge_used[e] = true;
      at = g.other_end(e, at);
      if (i + 1 < path.size()) {
        if (in_l[at]) return false;  // internal vertices are fresh
        in_l[at] = true;
      }
    }
    if (at != end) return false;
  }
  std::vector<bool> covered(g.num_vertices(), false);
  for (EdgeId e : w.complement.edges) {
    int a = g.edge_end_a(e), b = g.edge_end_b(e);
    if (in_l[a] || in_l[b] || covered[a] || covered[b]) return false;
    covered[a] = covered[b] = true;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!in_l[v] && !covered[v]) return false;
  }
  return true;
}

nlohmann::json containment_to_json(const BipartiteGraph& g,
                                   const BipartiteGraph& h,
                                   const ContainmentWitness& w) {
  nlohmann::json branch = nlohmann::json::object();
  for (int x = 0; x < h.num_vertices(); ++x) {
    branch[h.vertex_name(x)] = g.vertex_name(w.branch[x]);
  }
  nlohmann::json paths = nlohmann::json::object();
  for (EdgeId he = 0; he < h.num_edges(); ++he) {
    nlohmann::json p = nlohmann::json::array();
    for (EdgeId e : w.paths[he]) p.push_back(g.edge(e).name);
    paths[h.edge(he).name] = p;
  }
  nlohmann::json complement = nlohmann::json::array();
  for (EdgeId e : w.complement.edges) complement.push_back(g.edge(e).name);
  return {{"sides_swapped", w.sides_swapped},
          {"branch", branch},
          {"paths", paths},
          {"complement", complement}};
}

}  // namespace circuitpack
