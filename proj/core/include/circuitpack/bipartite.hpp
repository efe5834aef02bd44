#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace circuitpack {

using EdgeId = int;

struct BipartiteEdge {
  std::string name;
  int a = 0;  // index into side A
  int b = 0;  // index into side B
  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

// Bipartite multigraph with a fixed side labelling. Vertex indices used by the
// algorithms are global: side A occupies [0, size_a), side B
// [size_a, size_a + size_b).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  int add_a(std::string name);
  int add_b(std::string name);
  EdgeId add_edge(std::string name, int a, int b);
  EdgeId add_edge(int a, int b);  // generated name

  int size_a() const { return static_cast<int>(a_names_.size()); }
  int size_b() const { return static_cast<int>(b_names_.size()); }
  int num_vertices() const { return size_a() + size_b(); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& a_names() const { return a_names_; }
  const std::vector<std::string>& b_names() const { return b_names_; }
  const std::vector<BipartiteEdge>& edges() const { return edges_; }
  const BipartiteEdge& edge(EdgeId e) const { return edges_[e]; }

  // Global vertex helpers.
  bool is_a(int v) const { return v < size_a(); }
  int global_a(int a) const { return a; }
  int global_b(int b) const { return size_a() + b; }
  const std::string& vertex_name(int v) const {
    return is_a(v) ? a_names_[v] : b_names_[v - size_a()];
  }
  int edge_end_a(EdgeId e) const { return edges_[e].a; }
  int edge_end_b(EdgeId e) const { return size_a() + edges_[e].b; }
  int other_end(EdgeId e, int v) const {
    return v == edge_end_a(e) ? edge_end_b(e) : edge_end_a(e);
  }
  std::span<const EdgeId> incident(int v) const {
    return is_a(v) ? incident_a_[v] : incident_b_[v - size_a()];
  }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  std::optional<int> find_vertex(std::string_view name) const;  // global id
  std::optional<EdgeId> find_edge(std::string_view name) const;
  int vertex(std::string_view name) const;
  EdgeId edge_id(std::string_view name) const;

  // Keeps flagged (global) vertices and flagged edges with both ends kept.
  BipartiteGraph subgraph(const std::vector<bool>& keep_vertex,
                          const std::vector<bool>& keep_edge) const;
  BipartiteGraph without_vertices(const std::vector<bool>& drop_vertex) const;
  BipartiteGraph without_edges(const std::vector<bool>& drop_edge) const;

  bool is_simple() const;
  bool is_connected() const;

  friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
    return x.a_names_ == y.a_names_ && x.b_names_ == y.b_names_ &&
           x.edges_ == y.edges_;
  }

 private:
  std::vector<std::string> a_names_;
  std::vector<std::string> b_names_;
  std::vector<BipartiteEdge> edges_;
  std::vector<std::vector<EdgeId>> incident_a_;
  std::vector<std::vector<EdgeId>> incident_b_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

// A set of edge ids of a host bipartite graph, kept sorted.
struct Matching {
  std::vector<EdgeId> edges;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

bool is_matching(const BipartiteGraph& g, const Matching& m);
bool is_perfect_matching(const BipartiteGraph& g, const Matching& m);

// A bipartite graph together with a distinguished edge set, as carried by the
// bipartite file format (`m` lines).
struct MarkedBipartite {
  BipartiteGraph graph;
  Matching matching;
};

}  // namespace circuitpack
