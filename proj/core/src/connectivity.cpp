#include "circuitpack/connectivity.hpp"

#include <algorithm>

#include "circuitpack/errors.hpp"

namespace circuitpack {

Condensation strong_components(const Digraph& d,
                               const std::vector<bool>* removed) {
  // Iterative Tarjan. Tarjan emits components in reverse topological order,
  // so ids are flipped at the end.
  const int n = d.num_vertices();
  auto hidden = [&](VertexId v) { return removed && (*removed)[v]; };
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;
  int next_index = 0, count = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (hidden(root) || index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto out = d.out_arcs(v);
      if (pos < out.size()) {
        VertexId w = d.arc(out[pos++]).head;
        if (hidden(w)) continue;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      VertexId finished = v;
      call.pop_back();
      if (!call.empty()) {
        VertexId parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (comp[v] >= 0) comp[v] = count - 1 - comp[v];
  }
  return Condensation{std::move(comp), count};
}

bool strongly_connected(const Digraph& d) {
  return strong_components(d).count <= 1;
}

bool strongly_connected_without(const Digraph& d,
                                const std::vector<bool>& removed) {
  return strong_components(d, &removed).count <= 1;
}

bool strongly_k_connected(const Digraph& d, int k) {
  if (k < 1) throw PreconditionError("strong k-connectivity needs k >= 1");
  const int n = d.num_vertices();
  std::vector<bool> removed(n, false);
  // Enumerate removal sets of size 0..k-1 in lexicographic order.
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start) -> bool {
    if (!strongly_connected_without(d, removed)) return false;
    if (static_cast<int>(chosen.size()) == k - 1) return true;
    for (int v = start; v < n; ++v) {
      removed[v] = true;
      chosen.push_back(v);
      bool ok = self(self, v + 1);
      chosen.pop_back();
      removed[v] = false;
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

std::vector<bool> arcs_on_circuits(const Digraph& d) {
  Condensation c = strong_components(d);
  std::vector<bool> on(d.num_arcs());
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    const Arc& arc = d.arc(a);
    on[a] = c.component[arc.tail] == c.component[arc.head];
  }
  return on;
}

bool is_acyclic_without(const Digraph& d, const std::vector<bool>& removed) {
  // Kahn's algorithm on the surviving vertices; loops count as cycles.
  const int n = d.num_vertices();
  std::vector<int> indeg(n, 0);
  int alive = 0;
  for (VertexId v = 0; v < n; ++v) alive += !removed[v];
  for (const Arc& a : d.arcs()) {
    if (removed[a.tail] || removed[a.head]) continue;
    if (a.is_loop()) return false;
    ++indeg[a.head];
  }
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v] && indeg[v] == 0) queue.push_back(v);
  }
  int seen = 0;
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    ++seen;
    for (ArcId a : d.out_arcs(v)) {
      VertexId w = d.arc(a).head;
      if (removed[w]) continue;
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  return seen == alive;
}

bool is_acyclic(const Digraph& d) {
  return is_acyclic_without(d, std::vector<bool>(d.num_vertices(), false));
}

}  // namespace circuitpack
