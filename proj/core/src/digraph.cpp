#include "circuitpack/digraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "circuitpack/errors.hpp"

namespace circuitpack {

std::uint64_t Budget::default_limit() {
  if (const char* env = std::getenv("CIRCUITPACK_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultNodes;
}

Digraph Digraph::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
  Digraph d;
  for (int i = 0; i < n; ++i) d.add_vertex(std::to_string(i));
  int k = 0;
  for (auto [u, v] : arcs) d.add_arc("e" + std::to_string(k++), u, v);
  return d;
}

VertexId Digraph::add_vertex(std::string name) {
  if (vertex_index_.contains(name)) {
    throw PreconditionError("duplicate vertex '" + name + "'");
  }
  VertexId id = num_vertices();
  vertex_index_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

ArcId Digraph::add_arc(std::string name, VertexId tail, VertexId head) {
  if (tail < 0 || tail >= num_vertices() || head < 0 ||
      head >= num_vertices()) {
    throw PreconditionError("arc '" + name + "' has an undeclared endpoint");
  }
  if (arc_index_.contains(name)) {
    throw PreconditionError("duplicate arc '" + name + "'");
  }
  ArcId id = num_arcs();
  arc_index_.emplace(name, id);
  arcs_.push_back(Arc{std::move(name), tail, head});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

ArcId Digraph::add_arc(VertexId tail, VertexId head) {
  int k = num_arcs();
  std::string name = "e" + std::to_string(k);
  while (arc_index_.contains(name)) name = "e" + std::to_string(++k);
  return add_arc(std::move(name), tail, head);
}

std::optional<VertexId> Digraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArcId> Digraph::find_arc(std::string_view name) const {
  auto it = arc_index_.find(std::string(name));
  if (it == arc_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Digraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

ArcId Digraph::arc_id(std::string_view name) const {
  if (auto a = find_arc(name)) return *a;
  throw PreconditionError("unknown arc '" + std::string(name) + "'");
}

Digraph Digraph::subdigraph(const std::vector<bool>& keep_vertex,
                            const std::vector<bool>& keep_arc) const {
  Digraph out;
  std::vector<VertexId> remap(num_vertices(), -1);
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (keep_vertex[v]) remap[v] = out.add_vertex(vertex_names_[v]);
  }
  for (ArcId a = 0; a < num_arcs(); ++a) {
    const Arc& arc = arcs_[a];
    if (!keep_arc[a] || remap[arc.tail] < 0 || remap[arc.head] < 0) continue;
    out.add_arc(arc.name, remap[arc.tail], remap[arc.head]);
  }
  return out;
}

Digraph Digraph::without_arcs(const std::vector<bool>& drop_arc) const {
  std::vector<bool> keep_arc(num_arcs());
  for (ArcId a = 0; a < num_arcs(); ++a) keep_arc[a] = !drop_arc[a];
  return subdigraph(std::vector<bool>(num_vertices(), true), keep_arc);
}

Digraph Digraph::without_vertices(const std::vector<bool>& drop_vertex) const {
  std::vector<bool> keep(num_vertices());
  for (VertexId v = 0; v < num_vertices(); ++v) keep[v] = !drop_vertex[v];
  return subdigraph(keep, std::vector<bool>(num_arcs(), true));
}

Digraph Digraph::without_vertex(VertexId v) const {
  std::vector<bool> drop(num_vertices(), false);
  drop[v] = true;
  return without_vertices(drop);
}

Digraph Digraph::without_arc(ArcId a) const {
  std::vector<bool> drop(num_arcs(), false);
  drop[a] = true;
  return without_arcs(drop);
}

Digraph Digraph::without_isolated_vertices() const {
  std::vector<bool> drop(num_vertices());
  for (VertexId v = 0; v < num_vertices(); ++v) {
    drop[v] = out_[v].empty() && in_[v].empty();
  }
  return without_vertices(drop);
}

int Digraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (ArcId a : out_[u]) count += arcs_[a].head == v;
  return count;
}

bool Digraph::has_loops() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const Arc& a) { return a.is_loop(); });
}

bool Digraph::is_simple() const {
  for (VertexId u = 0; u < num_vertices(); ++u) {
    std::vector<VertexId> heads;
    for (ArcId a : out_[u]) heads.push_back(arcs_[a].head);
    std::sort(heads.begin(), heads.end());
    if (std::adjacent_find(heads.begin(), heads.end()) != heads.end()) {
      return false;
    }
    if (std::binary_search(heads.begin(), heads.end(), u)) return false;
  }
  return true;
}

std::vector<VertexId> circuit_vertices(const Digraph& d, const Circuit& c) {
  std::vector<VertexId> out;
  out.reserve(c.arcs.size());
  for (ArcId a : c.arcs) out.push_back(d.arc(a).tail);
  return out;
}

bool is_valid_circuit(const Digraph& d, const Circuit& c) {
  if (c.arcs.empty()) return false;
  std::vector<bool> seen(d.num_vertices(), false);
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    ArcId a = c.arcs[i];
    if (a < 0 || a >= d.num_arcs()) return false;
    ArcId next = c.arcs[(i + 1) % c.arcs.size()];
    if (next < 0 || next >= d.num_arcs()) return false;
    if (d.arc(a).head != d.arc(next).tail) return false;
    VertexId t = d.arc(a).tail;
    if (seen[t]) return false;
    seen[t] = true;
  }
  return true;
}

VertexWeights vertex_weights_from_map(
    const Digraph& d, const std::map<std::string, std::int64_t>& by_name,
    std::int64_t default_weight) {
  VertexWeights w(d.num_vertices(), default_weight);
  for (const auto& [name, value] : by_name) {
    if (value < 0) {
      throw PreconditionError("negative weight on vertex '" + name + "'");
    }
    w[d.vertex(name)] = value;
  }
  return w;
}

ArcWeights arc_weights_from_map(
    const Digraph& d, const std::map<std::string, std::int64_t>& by_name,
    std::int64_t default_weight) {
  ArcWeights w(d.num_arcs(), default_weight);
  for (const auto& [name, value] : by_name) {
    if (value < 0) {
      throw PreconditionError("negative weight on arc '" + name + "'");
    }
    w[d.arc_id(name)] = value;
  }
  return w;
}

}  // namespace circuitpack
