#include "circuitpack/transforms.hpp"

#include <unordered_set>

#include "circuitpack/errors.hpp"

namespace circuitpack {
namespace {

// `base`, made unique against `taken` by prefixing underscores.
std::string fresh_name(std::string base,
                       const std::unordered_set<std::string>& taken) {
  while (taken.contains(base)) base = "_" + base;
  return base;
}

}  // namespace

Digraph dgm(const BipartiteGraph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) {
    throw PreconditionError("D(G,M) needs a perfect matching");
  }
  Digraph d;
  std::vector<VertexId> of_vertex(g.num_vertices(), -1);
  std::vector<bool> matched(g.num_edges(), false);
  for (EdgeId e : m.edges) {
    VertexId v = d.add_vertex(g.edge(e).name);
    of_vertex[g.edge_end_a(e)] = v;
    of_vertex[g.edge_end_b(e)] = v;
    matched[e] = true;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (matched[e]) continue;
    d.add_arc(g.edge(e).name, of_vertex[g.edge_end_a(e)],
              of_vertex[g.edge_end_b(e)]);
  }
  return d;
}

MarkedBipartite bipartite_double(const Digraph& d) {
  MarkedBipartite out;
  BipartiteGraph& g = out.graph;
  std::unordered_set<std::string> edge_names;
  for (const Arc& a : d.arcs()) edge_names.insert(a.name);
  for (const auto& v : d.vertex_names()) g.add_a("a_" + v);
  for (const auto& v : d.vertex_names()) g.add_b("b_" + v);
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    std::string name = fresh_name("m_" + d.vertex_name(v), edge_names);
    edge_names.insert(name);
    out.matching.edges.push_back(g.add_edge(std::move(name), v, v));
  }
  for (const Arc& a : d.arcs()) g.add_edge(a.name, a.tail, a.head);
  return out;
}

VertexSplit vertex_split(const Digraph& d) {
  VertexSplit out;
  Digraph& h = out.graph;
  std::unordered_set<std::string> names(d.vertex_names().begin(),
                                        d.vertex_names().end());
  std::unordered_set<std::string> arc_names;
  for (const Arc& a : d.arcs()) arc_names.insert(a.name);
  for (const auto& v : d.vertex_names()) h.add_vertex(v);
  std::vector<VertexId> twin(d.num_vertices());
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    std::string name = d.vertex_name(v) + "'";
    while (names.contains(name)) name += "'";
    names.insert(name);
    twin[v] = h.add_vertex(std::move(name));
  }
  const std::int64_t heavy = d.num_arcs() + d.num_vertices();
  for (const Arc& a : d.arcs()) {
    h.add_arc(a.name, twin[a.tail], a.head);
    out.weights.push_back(heavy);
  }
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    std::string name = fresh_name("split_" + d.vertex_name(v), arc_names);
    arc_names.insert(name);
    h.add_arc(std::move(name), v, twin[v]);
    out.weights.push_back(1);
  }
  return out;
}

}  // namespace circuitpack
