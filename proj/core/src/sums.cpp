#include "circuitpack/sums.hpp"

#include <algorithm>
#include <set>

#include "circuitpack/connectivity.hpp"
#include "circuitpack/errors.hpp"
#include "circuitpack/matching.hpp"

namespace circuitpack {
namespace {

// Source strong component (no arc enters it from another component) holding
// the smallest live vertex.
int least_source_component(const Digraph& d, const Condensation& cond) {
  std::vector<bool> entered(cond.count, false);
  for (const Arc& a : d.arcs()) {
    int ct = cond.component[a.tail], ch = cond.component[a.head];
    if (ct >= 0 && ch >= 0 && ct != ch) entered[ch] = true;
  }
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    int c = cond.component[v];
    if (c >= 0 && !entered[c]) return c;
  }
  return -1;
}

void copy_vertices(Digraph& out, const Digraph& d, const std::string& skip) {
  for (const std::string& name : d.vertex_names()) {
    if (name == skip) continue;
    if (out.find_vertex(name)) {
      throw PreconditionError("parts share vertex '" + name + "'");
    }
    out.add_vertex(name);
  }
}

// Seam vertex names sit at positions 0 (a), 1 (b), 2 (a'), 3 (b'); edge i
// joins positions i and i+1 mod 4.
std::pair<int, int> seam_edge_ends(int i) { return {i, (i + 1) % 4}; }

bool on_seam(const Seam& c, const std::string& name) {
  return std::find(c.vertices.begin(), c.vertices.end(), name) !=
         c.vertices.end();
}

// Empty string when the part carries the seam with the right sides and ends.
std::string seam_problem(const BipartiteGraph& g, const Seam& c) {
  for (int i = 0; i < 4; ++i) {
    auto v = g.find_vertex(c.vertices[i]);
    if (!v) return "seam vertex '" + c.vertices[i] + "' missing";
    if (g.is_a(*v) != (i % 2 == 0)) {
      return "seam vertex '" + c.vertices[i] + "' on the wrong side";
    }
  }
  for (int i = 0; i < 4; ++i) {
    auto e = g.find_edge(c.edges[i]);
    if (!e) return "seam edge '" + c.edges[i] + "' missing";
    auto [x, y] = seam_edge_ends(i);
    std::set<int> want{g.vertex(c.vertices[x]), g.vertex(c.vertices[y])};
    std::set<int> got{g.edge_end_a(*e), g.edge_end_b(*e)};
    if (want != got) return "seam edge '" + c.edges[i] + "' has wrong ends";
  }
  return {};
}

}  // namespace

Digraph zero_sum(const Digraph& d1, const Digraph& d2,
                 const std::vector<CrossArc>& cross) {
  Digraph out;
  copy_vertices(out, d1, {});
  copy_vertices(out, d2, {});
  auto add = [&](const Digraph& d) {
    for (const Arc& a : d.arcs()) {
      out.add_arc(a.name, out.vertex(d.vertex_name(a.tail)),
                  out.vertex(d.vertex_name(a.head)));
    }
  };
  add(d1);
  add(d2);
  for (const CrossArc& x : cross) {
    if (!d2.find_vertex(x.tail) || !d1.find_vertex(x.head)) {
      throw PreconditionError("cross arc '" + x.name +
                              "' must run from the second part to the first");
    }
    out.add_arc(x.name, out.vertex(x.tail), out.vertex(x.head));
  }
  return out;
}

std::optional<ZeroSplit> split_zero_sum(const Digraph& d) {
  if (d.num_vertices() < 2 || strongly_connected(d)) return std::nullopt;
  Condensation cond = strong_components(d);
  const int source = least_source_component(d, cond);
  std::vector<bool> in_second(d.num_vertices());
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    in_second[v] = cond.component[v] == source;
  }
  std::vector<bool> in_first(in_second.size());
  for (std::size_t v = 0; v < in_first.size(); ++v) in_first[v] = !in_second[v];
  ZeroSplit split;
  split.first = d.subdigraph(in_first, std::vector<bool>(d.num_arcs(), true));
  split.second = d.subdigraph(in_second, std::vector<bool>(d.num_arcs(), true));
  for (const Arc& a : d.arcs()) {
    if (in_second[a.tail] && in_first[a.head]) {
      split.cross.push_back(
          {a.name, d.vertex_name(a.tail), d.vertex_name(a.head)});
    }
  }
  return split;
}

Digraph one_sum(const Digraph& d1, const Digraph& d2, const std::string& v) {
  if (!d1.find_vertex(v) || !d2.find_vertex(v)) {
    throw PreconditionError("both parts must contain vertex '" + v + "'");
  }
  const VertexId v1 = d1.vertex(v), v2 = d2.vertex(v);
  std::set<std::string> shared;
  for (const Arc& a : d1.arcs()) {
    auto b = d2.find_arc(a.name);
    if (!b) continue;
    if (a.head != v1 || a.tail == v1 || d2.arc(*b).tail != v2 ||
        d2.arc(*b).head == v2) {
      throw PreconditionError("shared arc '" + a.name +
                              "' must enter v in the first part and leave v "
                              "in the second");
    }
    shared.insert(a.name);
  }
  Digraph out;
  copy_vertices(out, d1, {});
  copy_vertices(out, d2, v);
  for (const Arc& a : d1.arcs()) {
    VertexId tail = out.vertex(d1.vertex_name(a.tail));
    VertexId head = shared.contains(a.name)
                        ? out.vertex(d2.vertex_name(d2.arc(d2.arc_id(a.name)).head))
                        : out.vertex(d1.vertex_name(a.head));
    out.add_arc(a.name, tail, head);
  }
  for (const Arc& a : d2.arcs()) {
    if (shared.contains(a.name)) continue;
    out.add_arc(a.name, out.vertex(d2.vertex_name(a.tail)),
                out.vertex(d2.vertex_name(a.head)));
  }
  return out;
}

std::optional<OneSplit> split_one_sum(const Digraph& d) {
  const int n = d.num_vertices();
  if (n < 3 || !strongly_connected(d)) return std::nullopt;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<bool> removed(n, false);
    removed[v] = true;
    Condensation cond = strong_components(d, &removed);
    if (cond.count < 2) continue;
    const int source = least_source_component(d, cond);
    std::vector<bool> x1(n, false), x2(n, false);
    for (VertexId u = 0; u < n; ++u) {
      if (u == v) continue;
      (cond.component[u] == source ? x1 : x2)[u] = true;
    }
    std::vector<bool> keep1 = x1, keep2 = x2;
    keep1[v] = keep2[v] = true;
    OneSplit split;
    split.cut_vertex = d.vertex_name(v);
    for (VertexId u = 0; u < n; ++u) {
      if (keep1[u]) split.first.add_vertex(d.vertex_name(u));
      if (keep2[u]) split.second.add_vertex(d.vertex_name(u));
    }
    auto id1 = [&](VertexId u) { return split.first.vertex(d.vertex_name(u)); };
    auto id2 = [&](VertexId u) { return split.second.vertex(d.vertex_name(u)); };
    for (const Arc& a : d.arcs()) {
      if (x1[a.tail] && x2[a.head]) {
        split.first.add_arc(a.name, id1(a.tail), id1(v));
        split.second.add_arc(a.name, id2(v), id2(a.head));
      } else if (keep1[a.tail] && keep1[a.head] &&
                 (x1[a.tail] || x1[a.head] || a.is_loop())) {
        split.first.add_arc(a.name, id1(a.tail), id1(a.head));
      } else {
        split.second.add_arc(a.name, id2(a.tail), id2(a.head));
      }
    }
    return split;
  }
  return std::nullopt;
}

BipartiteGraph seam_sum(const std::vector<BipartiteGraph>& parts,
                        const Seam& c) {
  if (parts.size() != 2 && parts.size() != 3) {
    throw PreconditionError("a sum takes two or three parts");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string problem = seam_problem(parts[i], c);
    if (!problem.empty()) {
      throw PreconditionError("part " + std::to_string(i + 1) +
                              " does not contain the seam: " + problem);
    }
    if (parts[i].num_vertices() <= 4) {
      throw PreconditionError("part " + std::to_string(i + 1) +
                              " has no private vertex");
    }
  }
  const std::set<std::string> seam_edges(c.edges.begin(), c.edges.end());
  BipartiteGraph g0;
  g0.add_a(c.vertices[0]);
  g0.add_a(c.vertices[2]);
  g0.add_b(c.vertices[1]);
  g0.add_b(c.vertices[3]);
  for (const BipartiteGraph& p : parts) {
    for (int v = 0; v < p.num_vertices(); ++v) {
      const std::string& name = p.vertex_name(v);
      if (on_seam(c, name)) continue;
      if (g0.find_vertex(name)) {
        throw PreconditionError("parts share vertex '" + name +
                                "' outside the seam");
      }
      if (p.is_a(v)) g0.add_a(name);
      else g0.add_b(name);
    }
  }
  auto side_index = [&](const BipartiteGraph& p, int v) {
    int global = g0.vertex(p.vertex_name(v));
    return g0.is_a(global) ? global : global - g0.size_a();
  };
  for (int i = 0; i < 4; ++i) {
    const BipartiteGraph& p = parts[0];
    EdgeId e = p.edge_id(c.edges[i]);
    g0.add_edge(c.edges[i], side_index(p, p.edge_end_a(e)),
                side_index(p, p.edge_end_b(e)));
  }
  for (const BipartiteGraph& p : parts) {
    for (EdgeId e = 0; e < p.num_edges(); ++e) {
      const std::string& name = p.edge(e).name;
      if (seam_edges.contains(name)) continue;
      if (g0.find_edge(name)) {
        throw PreconditionError("parts share edge '" + name +
                                "' outside the seam");
      }
      g0.add_edge(name, side_index(p, p.edge_end_a(e)),
                  side_index(p, p.edge_end_b(e)));
    }
  }
  std::vector<bool> seam_vertex(g0.num_vertices(), false);
  for (const std::string& name : c.vertices) seam_vertex[g0.vertex(name)] = true;
  if (!has_perfect_matching(g0, &seam_vertex)) {
    throw PreconditionError("seam is not central in the union");
  }
  std::vector<bool> drop(g0.num_edges(), false);
  for (const std::string& name : c.edges) drop[g0.edge_id(name)] = true;
  return g0.without_edges(drop);
}

BipartiteGraph four_sum(const BipartiteGraph& g1, const BipartiteGraph& g2,
                        const Seam& c) {
  return seam_sum({g1, g2}, c);
}

BipartiteGraph trisum(const BipartiteGraph& g1, const BipartiteGraph& g2,
                      const BipartiteGraph& g3, const Seam& c) {
  return seam_sum({g1, g2, g3}, c);
}

Imprint imprint(const BipartiteGraph& g, const Matching& m,
                const std::vector<BipartiteGraph>& parts, const Seam& c) {
  if (!is_perfect_matching(g, m)) {
    throw PreconditionError("imprint needs a perfect matching of the sum");
  }
  for (const BipartiteGraph& p : parts) {
    if (!seam_problem(p, c).empty()) {
      throw PreconditionError("part does not record the seam");
    }
  }
  std::vector<std::string> off_seam;
  std::set<std::string> parallel;  // seam edges parallel to an edge of M
  for (EdgeId e : m.edges) {
    const std::string& x = g.vertex_name(g.edge_end_a(e));
    const std::string& y = g.vertex_name(g.edge_end_b(e));
    if (!on_seam(c, x) || !on_seam(c, y)) {
      off_seam.push_back(g.edge(e).name);
      continue;
    }
    for (int i = 0; i < 4; ++i) {
      auto [s, t] = seam_edge_ends(i);
      std::set<std::string> ends{c.vertices[s], c.vertices[t]};
      if (ends == std::set<std::string>{x, y}) parallel.insert(c.edges[i]);
    }
  }
  Imprint out;
  for (const BipartiteGraph& p : parts) {
    Matching mi;
    for (const std::string& name : off_seam) {
      if (auto e = p.find_edge(name)) mi.edges.push_back(*e);
    }
    for (const std::string& name : parallel) mi.edges.push_back(p.edge_id(name));
    std::sort(mi.edges.begin(), mi.edges.end());
    out.perfect.push_back(is_perfect_matching(p, mi));
    out.matchings.push_back(std::move(mi));
  }
  return out;
}

Seam cube_seam() {
  return {{"u1", "u2", "u3", "u4"}, {"c12", "c23", "c34", "c41"}};
}

BipartiteGraph seam_cube(const std::string& tag) {
  BipartiteGraph g;
  const Seam c = cube_seam();
  const int u1 = g.add_a("u1"), u3 = g.add_a("u3");
  const int v2 = g.add_a(tag + "v2"), v4 = g.add_a(tag + "v4");
  const int u2 = g.add_b("u2"), u4 = g.add_b("u4");
  const int v1 = g.add_b(tag + "v1"), v3 = g.add_b(tag + "v3");
  g.add_edge(c.edges[0], u1, u2);
  g.add_edge(c.edges[1], u3, u2);
  g.add_edge(c.edges[2], u3, u4);
  g.add_edge(c.edges[3], u1, u4);
  g.add_edge(tag + "s1", u1, v1);
  g.add_edge(tag + "s2", v2, u2);
  g.add_edge(tag + "s3", u3, v3);
  g.add_edge(tag + "s4", v4, u4);
  g.add_edge(tag + "f1", v2, v1);
  g.add_edge(tag + "f2", v2, v3);
  g.add_edge(tag + "f3", v4, v3);
  g.add_edge(tag + "f4", v4, v1);
  return g;
}

ThreeCubeTrisum three_cube_trisum(bool twist) {
  ThreeCubeTrisum t;
  t.seam = cube_seam();
  t.parts = {seam_cube("p"), seam_cube("q"), seam_cube("r")};
  t.graph = seam_sum(t.parts, t.seam);
  std::vector<std::string> names{"ps1", "ps2", "ps3", "ps4", "qf1", "qf3"};
  if (twist) {
    names.insert(names.end(), {"rf2", "rf4"});
  } else {
    names.insert(names.end(), {"rf1", "rf3"});
  }
  for (const std::string& name : names) {
    t.matching.edges.push_back(t.graph.edge_id(name));
  }
  std::sort(t.matching.edges.begin(), t.matching.edges.end());
  return t;
}

nlohmann::json seam_to_json(const Seam& c) {
  return {{"vertices", c.vertices}, {"edges", c.edges}};
}

}  // namespace circuitpack
