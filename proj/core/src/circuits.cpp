#include "circuitpack/circuits.hpp"

#include "circuitpack/connectivity.hpp"

namespace circuitpack {

CircuitList enumerate_circuits(const Digraph& d, std::size_t cap) {
  CircuitList result;
  const int n = d.num_vertices();
  std::vector<bool> hidden(n, false);
  std::vector<bool> on_path(n, false);
  std::vector<ArcId> path;

  for (VertexId s = 0; s < n; ++s) {
    // Only vertices > s in the strong component of s can be on a circuit
    // whose smallest vertex is s.
    Condensation cond = strong_components(d, &hidden);
    const int target = cond.component[s];
    std::vector<bool> allowed(n, false);
    for (VertexId v = s; v < n; ++v) {
      allowed[v] = !hidden[v] && cond.component[v] == target;
    }

    // Explicit DFS stack of (vertex, next out-arc position).
    std::vector<std::pair<VertexId, std::size_t>> stack{{s, 0}};
    on_path[s] = true;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      auto out = d.out_arcs(v);
      if (pos == out.size()) {
        on_path[v] = false;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      ArcId a = out[pos++];
      VertexId w = d.arc(a).head;
      if (w == s) {
        if (result.circuits.size() == cap) {
          result.truncated = true;
          return result;
        }
        Circuit c{path};
        c.arcs.push_back(a);
        result.circuits.push_back(std::move(c));
      } else if (allowed[w] && !on_path[w]) {
        on_path[w] = true;
        path.push_back(a);
        stack.emplace_back(w, 0);
      }
    }
    hidden[s] = true;
  }
  return result;
}

}  // namespace circuitpack
