#include "circuitpack/bipartite.hpp"

#include <algorithm>

#include "circuitpack/errors.hpp"

namespace circuitpack {

int BipartiteGraph::add_a(std::string name) {
  if (vertex_index_.contains(name)) {
    throw PreconditionError("duplicate vertex '" + name + "'");
  }
  // Global ids of side B shift by one; rebuild the name index for B.
  int id = size_a();
  a_names_.push_back(name);
  incident_a_.emplace_back();
  vertex_index_.emplace(std::move(name), id);
  for (int b = 0; b < size_b(); ++b) vertex_index_[b_names_[b]] = size_a() + b;
  return id;
}

int BipartiteGraph::add_b(std::string name) {
  if (vertex_index_.contains(name)) {
    throw PreconditionError("duplicate vertex '" + name + "'");
  }
  int id = size_b();
  b_names_.push_back(name);
  incident_b_.emplace_back();
  vertex_index_.emplace(std::move(name), size_a() + id);
  return id;
}

EdgeId BipartiteGraph::add_edge(std::string name, int a, int b) {
  if (a < 0 || a >= size_a() || b < 0 || b >= size_b()) {
    throw PreconditionError("edge '" + name + "' has an undeclared endpoint");
  }
  if (edge_index_.contains(name)) {
    throw PreconditionError("duplicate edge '" + name + "'");
  }
  EdgeId id = num_edges();
  edge_index_.emplace(name, id);
  edges_.push_back(BipartiteEdge{std::move(name), a, b});
  incident_a_[a].push_back(id);
  incident_b_[b].push_back(id);
  return id;
}

EdgeId BipartiteGraph::add_edge(int a, int b) {
  int k = num_edges();
  std::string name = "e" + std::to_string(k);
  while (edge_index_.contains(name)) name = "e" + std::to_string(++k);
  return add_edge(std::move(name), a, b);
}

std::optional<int> BipartiteGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> BipartiteGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int BipartiteGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

EdgeId BipartiteGraph::edge_id(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw PreconditionError("unknown edge '" + std::string(name) + "'");
}

BipartiteGraph BipartiteGraph::subgraph(const std::vector<bool>& keep_vertex,
                                        const std::vector<bool>& keep_edge) const {
  BipartiteGraph out;
  std::vector<int> remap_a(size_a(), -1), remap_b(size_b(), -1);
  for (int a = 0; a < size_a(); ++a) {
    if (keep_vertex[a]) remap_a[a] = out.add_a(a_names_[a]);
  }
  for (int b = 0; b < size_b(); ++b) {
    if (keep_vertex[size_a() + b]) remap_b[b] = out.add_b(b_names_[b]);
  }
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const auto& edge = edges_[e];
    if (!keep_edge[e] || remap_a[edge.a] < 0 || remap_b[edge.b] < 0) continue;
    out.add_edge(edge.name, remap_a[edge.a], remap_b[edge.b]);
  }
  return out;
}

BipartiteGraph BipartiteGraph::without_vertices(
    const std::vector<bool>& drop_vertex) const {
  std::vector<bool> keep(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) keep[v] = !drop_vertex[v];
  return subgraph(keep, std::vector<bool>(num_edges(), true));
}

BipartiteGraph BipartiteGraph::without_edges(
    const std::vector<bool>& drop_edge) const {
  std::vector<bool> keep(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) keep[e] = !drop_edge[e];
  return subgraph(std::vector<bool>(num_vertices(), true), keep);
}

bool BipartiteGraph::is_simple() const {
  std::vector<std::pair<int, int>> ends;
  ends.reserve(edges_.size());
  for (const auto& e : edges_) ends.emplace_back(e.a, e.b);
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool BipartiteGraph::is_connected() const {
  int n = num_vertices();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident(v)) {
      int w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_matching(const BipartiteGraph& g, const Matching& m) {
  std::vector<bool> used(g.num_vertices(), false);
  for (EdgeId e : m.edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    int a = g.edge_end_a(e), b = g.edge_end_b(e);
    if (used[a] || used[b]) return false;
    used[a] = used[b] = true;
  }
  return true;
}

bool is_perfect_matching(const BipartiteGraph& g, const Matching& m) {
  return is_matching(g, m) &&
         static_cast<int>(m.edges.size()) * 2 == g.num_vertices();
}

}  // namespace circuitpack
