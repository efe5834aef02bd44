#include "circuitpack/decomposition.hpp"

#include <algorithm>
#include <set>

#include "circuitpack/canonical.hpp"
#include "circuitpack/fixtures.hpp"
#include "circuitpack/io.hpp"
#include "circuitpack/matching.hpp"
#include "circuitpack/planarity.hpp"
#include "circuitpack/transforms.hpp"

namespace circuitpack {
namespace {

std::string fresh_edge_name(const BipartiteGraph& g, std::string name) {
  while (g.find_edge(name)) name += "_";
  return name;
}

// Components of g with the flagged vertices hidden; -1 for hidden ones.
std::vector<int> components(const BipartiteGraph& g,
                            const std::vector<bool>& hidden, int& count) {
  std::vector<int> comp(g.num_vertices(), -1);
  count = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (hidden[s] || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        int y = g.other_end(e, x);
        if (hidden[y] || comp[y] >= 0) continue;
        comp[y] = count;
        stack.push_back(y);
      }
    }
    ++count;
  }
  return comp;
}

bool k33_free(const BipartiteGraph& part, const SplitOptions& opts);

class SplitSearch {
 public:
  SplitSearch(const BipartiteGraph& g, const SplitOptions& opts)
      : g_(g), opts_(opts), budget_(opts.budget) {}

  std::optional<SumSplit> run(int parts) {
    const int sa = g_.size_a(), n = g_.num_vertices();
    for (int a = 0; a < sa; ++a) {
      for (int a2 = a + 1; a2 < sa; ++a2) {
        for (int b = sa; b < n; ++b) {
          for (int b2 = b + 1; b2 < n; ++b2) {
            if (auto s = try_seam({a, b, a2, b2}, parts)) return s;
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  const BipartiteGraph& g_;
  const SplitOptions& opts_;
  Budget budget_;

  std::optional<SumSplit> try_seam(const std::array<int, 4>& seam, int parts) {
    budget_.tick("trisum split");
    std::vector<bool> hidden(g_.num_vertices(), false);
    for (int v : seam) hidden[v] = true;
    int count = 0;
    std::vector<int> comp = components(g_, hidden, count);
    if (count < parts) return std::nullopt;
    // Centrality: G0 - V(C) = G - V(C) needs a perfect matching.
    if (!has_perfect_matching(g_, &hidden)) return std::nullopt;
    Seam c;
    for (int i = 0; i < 4; ++i) c.vertices[i] = g_.vertex_name(seam[i]);
    for (int i = 0; i < 4; ++i) {
      std::string base = "s_" + c.vertices[i] + "_" + c.vertices[(i + 1) % 4];
      c.edges[i] = fresh_edge_name(g_, base);
    }
    // Restricted growth strings: group[k] <= 1 + max of earlier groups.
    std::vector<int> group(count, 0);
    auto rec = [&](auto&& self, int k, int used) -> std::optional<SumSplit> {
      if (count - k < parts - used) return std::nullopt;
      if (k == count) {
        if (used != parts) return std::nullopt;
        budget_.tick("trisum split");
        return build(seam, c, comp, group, parts);
      }
      for (int x = 0; x <= std::min(used, parts - 1); ++x) {
        group[k] = x;
        if (auto s = self(self, k + 1, std::max(used, x + 1))) return s;
      }
      return std::nullopt;
    };
    return rec(rec, 0, 0);
  }

  std::optional<SumSplit> build(const std::array<int, 4>& seam, const Seam& c,
                                const std::vector<int>& comp,
                                const std::vector<int>& group, int parts) {
    SumSplit split;
    split.seam = c;
    std::vector<bool> on_seam(g_.num_vertices(), false);
    for (int v : seam) on_seam[v] = true;
    for (int p = 0; p < parts; ++p) {
      std::vector<bool> in(g_.num_vertices(), false);
      int balance = 0;
      for (int v = 0; v < g_.num_vertices(); ++v) {
        in[v] = on_seam[v] || group[comp[v]] == p;
        if (in[v] && !on_seam[v]) balance += g_.is_a(v) ? 1 : -1;
      }
      if (balance != 0) return std::nullopt;
      BipartiteGraph part;
      for (int v = 0; v < g_.num_vertices(); ++v) {
        if (!in[v]) continue;
        if (g_.is_a(v)) part.add_a(g_.vertex_name(v));
        else part.add_b(g_.vertex_name(v));
      }
      auto side_index = [&](int v) {
        int global = part.vertex(g_.vertex_name(v));
        return part.is_a(global) ? global : global - part.size_a();
      };
      for (int i = 0; i < 4; ++i) {
        int x = seam[i], y = seam[(i + 1) % 4];
        int a = g_.is_a(x) ? x : y, b = g_.is_a(x) ? y : x;
        part.add_edge(c.edges[i], side_index(a), side_index(b));
      }
      for (EdgeId e = 0; e < g_.num_edges(); ++e) {
        int a = g_.edge_end_a(e), b = g_.edge_end_b(e);
        if (!in[a] || !in[b]) continue;
        if (on_seam[a] && on_seam[b] && p != 0) continue;
        part.add_edge(g_.edge(e).name, side_index(a), side_index(b));
      }
      if (!is_brace(part)) return std::nullopt;
      split.parts.push_back(std::move(part));
    }
    if (opts_.k33_free_parts) {
      for (const BipartiteGraph& part : split.parts) {
        if (!k33_free(part, opts_)) return std::nullopt;
      }
    }
    return split;
  }
};

const CanonicalKey& heawood_key() {
  static const CanonicalKey key = canonical_form(heawood());
  return key;
}

// Small parts go through the containment search. Larger ones are accepted
// when they split again into K33-free parts, since such sums have no K33; a
// larger non-planar brace without such a split is taken to contain K33.
bool k33_free(const BipartiteGraph& part, const SplitOptions& opts) {
  if (planar(part) || canonical_form(part) == heawood_key()) return true;
  if (part.num_vertices() <= 12) {
    ContainmentOptions copts;
    copts.budget = opts.budget;
    return !contains_k33(part, copts);
  }
  SplitSearch search(part, opts);
  std::optional<SumSplit> s = search.run(3);
  if (!s && opts.allow_four_sum) s = search.run(2);
  return s.has_value();
}

const CanonicalKey& cube_key() {
  static const CanonicalKey key = canonical_form(cube());
  return key;
}

void mark_obstructed(DecompositionNode& node, const BipartiteGraph& g,
                     const ContainmentOptions& opts) {
  static const BipartiteGraph k = k33();
  static const BipartiteGraph h = heawood();
  if (auto w = contains(g, k, opts)) {
    node.obstruction = "K33";
    node.witness = std::move(w);
  } else if (auto w2 = contains(g, h, opts)) {
    node.obstruction = "Heawood";
    node.witness = std::move(w2);
  } else {
    return;
  }
  node.kind = NodeKind::kObstructed;
  node.seam.reset();
  node.children.clear();
}

}  // namespace

std::optional<SumSplit> find_trisum_split(const BipartiteGraph& g,
                                          const SplitOptions& opts) {
  if (g.num_vertices() > opts.max_vertices) {
    throw PreconditionError("trisum split limited to " +
                            std::to_string(opts.max_vertices) + " vertices");
  }
  SplitSearch search(g, opts);
  if (auto s = search.run(3)) return s;
  if (opts.allow_four_sum) return search.run(2);
  return std::nullopt;
}

DecompositionNode trisum_decompose(const BipartiteGraph& g,
                                   const DecomposeOptions& opts) {
  if (!is_brace(g)) throw PreconditionError("decomposition needs a brace");
  DecompositionNode node;
  node.graph = g;
  if (planar(g)) {
    node.kind = NodeKind::kLeaf;
    return node;
  }
  if (canonical_form(g) == heawood_key()) {
    node.kind = NodeKind::kHeawoodLeaf;
    return node;
  }
  if (auto split = find_trisum_split(g, opts.split)) {
    node.kind = split->parts.size() == 3 ? NodeKind::kTrisum : NodeKind::kFourSum;
    node.seam = split->seam;
    bool clean = true;
    for (const BipartiteGraph& part : split->parts) {
      node.children.push_back(trisum_decompose(part, opts));
      NodeKind k = node.children.back().kind;
      clean = clean && k != NodeKind::kObstructed && k != NodeKind::kHeawoodLeaf;
    }
    // A part that is obstructed, or is the Heawood graph, is reported on the
    // whole graph when a witness exists there.
    if (!clean) mark_obstructed(node, g, opts.containment);
    return node;
  }
  mark_obstructed(node, g, opts.containment);
  if (node.kind != NodeKind::kObstructed) {
    throw std::logic_error(
        "brace without a split is neither planar nor Heawood and contains "
        "neither K33 nor Heawood");
  }
  return node;
}

DecompositionNode decompose_digraph(const Digraph& d,
                                    const DecomposeOptions& opts) {
  DecompositionNode node;
  node.digraph = d;
  if (auto z = split_zero_sum(d)) {
    node.kind = NodeKind::kZeroSum;
    node.cross = z->cross;
    node.children.push_back(decompose_digraph(z->first, opts));
    node.children.push_back(decompose_digraph(z->second, opts));
    return node;
  }
  if (auto o = split_one_sum(d)) {
    node.kind = NodeKind::kOneSum;
    node.cut_vertex = o->cut_vertex;
    node.children.push_back(decompose_digraph(o->first, opts));
    node.children.push_back(decompose_digraph(o->second, opts));
    return node;
  }
  node.kind = NodeKind::kPiece;
  if (d.num_vertices() >= 2) {
    BipartiteGraph g = bipartite_double(d).graph;
    if (is_brace(g)) node.children.push_back(trisum_decompose(g, opts));
  }
  return node;
}

BipartiteGraph compose_tree(const DecompositionNode& node) {
  switch (node.kind) {
    case NodeKind::kTrisum:
    case NodeKind::kFourSum: {
      std::vector<BipartiteGraph> parts;
      for (const auto& child : node.children) parts.push_back(compose_tree(child));
      return seam_sum(parts, *node.seam);
    }
    case NodeKind::kPiece:
      if (!node.children.empty()) return compose_tree(node.children[0]);
      break;
    default:
      if (node.graph) return *node.graph;
  }
  throw PreconditionError("node has no bipartite graph");
}

Digraph compose_digraph_tree(const DecompositionNode& node) {
  switch (node.kind) {
    case NodeKind::kZeroSum:
      return zero_sum(compose_digraph_tree(node.children[0]),
                      compose_digraph_tree(node.children[1]), node.cross);
    case NodeKind::kOneSum:
      return one_sum(compose_digraph_tree(node.children[0]),
                     compose_digraph_tree(node.children[1]), node.cut_vertex);
    default:
      if (node.digraph) return *node.digraph;
  }
  throw PreconditionError("node has no digraph");
}

std::vector<BipartiteGraph> sum_parts(const DecompositionNode& node) {
  std::vector<BipartiteGraph> out;
  auto walk = [&](auto&& self, const DecompositionNode& x) -> void {
    const bool is_sum = x.kind == NodeKind::kTrisum || x.kind == NodeKind::kFourSum;
    for (const auto& child : x.children) {
      if (is_sum && child.graph) out.push_back(*child.graph);
      self(self, child);
    }
  };
  walk(walk, node);
  return out;
}

LemmaXReport lemma_x_check(const BipartiteGraph& part) {
  LemmaXReport r;
  r.edges = part.num_edges();
  r.is_cube = r.edges == 12 && canonical_form(part) == cube_key();
  r.ok = r.edges > 12 || r.is_cube;
  return r;
}

BipartiteGraph place_on_seam(const BipartiteGraph& g, const EdgeCircuit& c,
                             const std::string& prefix) {
  if (c.edges.size() != 4) throw PreconditionError("seam must be a 4-circuit");
  const Seam seam = cube_seam();
  // Rotate so that position 0 is on side A.
  const int shift = g.is_a(c.vertices[0]) ? 0 : 1;
  std::vector<std::string> names(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) names[v] = prefix + g.vertex_name(v);
  std::vector<std::string> edge_names(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) edge_names[e] = prefix + g.edge(e).name;
  for (int i = 0; i < 4; ++i) {
    names[c.vertices[(i + shift) % 4]] = seam.vertices[i];
    edge_names[c.edges[(i + shift) % 4]] = seam.edges[i];
  }
  BipartiteGraph out;
  for (int v = 0; v < g.size_a(); ++v) out.add_a(names[v]);
  for (int v = g.size_a(); v < g.num_vertices(); ++v) out.add_b(names[v]);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out.add_edge(edge_names[e], g.edge(e).a, g.edge(e).b);
  }
  return out;
}

std::optional<RandomSum> random_brace_sum(const std::vector<BipartiteGraph>& pool,
                                          int parts, Rng& rng,
                                          int extra_parallel) {
  if (pool.empty() || (parts != 2 && parts != 3)) {
    throw PreconditionError("random_brace_sum needs a pool and 2 or 3 parts");
  }
  RandomSum r;
  r.seam = cube_seam();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < parts; ++k) {
    const BipartiteGraph& g = pool[pick(rng)];
    auto seams = central_circuits(g, 4);
    if (seams.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> which(0, seams.size() - 1);
    EdgeCircuit c = seams[which(rng)];
    if (rng() & 1) {  // start half-way round
      std::rotate(c.edges.begin(), c.edges.begin() + 2, c.edges.end());
      std::rotate(c.vertices.begin(), c.vertices.begin() + 2, c.vertices.end());
    }
    r.parts.push_back(place_on_seam(g, c, "g" + std::to_string(k) + "_"));
  }
  std::uniform_int_distribution<int> part_of(0, parts - 1), side(0, 3);
  for (int i = 0; i < extra_parallel; ++i) {
    BipartiteGraph& p = r.parts[part_of(rng)];
    EdgeId e = p.edge_id(r.seam.edges[side(rng)]);
    std::string name = "x" + std::to_string(i);
    p.add_edge(name, p.edge(e).a, p.edge(e).b);
  }
  try {
    r.graph = seam_sum(r.parts, r.seam);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  if (!is_brace(r.graph)) return std::nullopt;
  return r;
}

std::vector<BipartiteGraph> planar_braces(int max_half) {
  std::vector<BipartiteGraph> out;
  for (int half = 2; half <= max_half; ++half) {
    for (BipartiteGraph& g : enumerate_braces(half)) {
      if (planar(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::string node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::kLeaf: return "leaf";
    case NodeKind::kHeawoodLeaf: return "heawood_leaf";
    case NodeKind::kTrisum: return "trisum";
    case NodeKind::kFourSum: return "four_sum";
    case NodeKind::kObstructed: return "obstructed";
    case NodeKind::kZeroSum: return "zero_sum";
    case NodeKind::kOneSum: return "one_sum";
    case NodeKind::kPiece: return "piece";
  }
  return "unknown";
}

nlohmann::json decomposition_to_json(const DecompositionNode& node) {
  nlohmann::json j{{"kind", node_kind_name(node.kind)}};
  if (node.graph) j["graph"] = bipartite_to_json(*node.graph);
  if (node.digraph) j["digraph"] = digraph_to_json(*node.digraph);
  if (node.seam) j["seam"] = seam_to_json(*node.seam);
  if (node.kind == NodeKind::kZeroSum) {
    nlohmann::json cross = nlohmann::json::array();
    for (const CrossArc& x : node.cross) {
      cross.push_back({{"id", x.name}, {"tail", x.tail}, {"head", x.head}});
    }
    j["cross"] = cross;
  }
  if (node.kind == NodeKind::kOneSum) j["cut_vertex"] = node.cut_vertex;
  if (node.kind == NodeKind::kObstructed && node.witness) {
    static const BipartiteGraph k = k33();
    static const BipartiteGraph h = heawood();
    j["obstruction"] = {
        {"target", node.obstruction},
        {"witness", containment_to_json(*node.graph,
                                        node.obstruction == "K33" ? k : h,
                                        *node.witness)}};
  }
  if (!node.children.empty()) {
    nlohmann::json children = nlohmann::json::array();
    for (const auto& child : node.children) {
      children.push_back(decomposition_to_json(child));
    }
    j["children"] = children;
  }
  return j;
}

}  // namespace circuitpack
