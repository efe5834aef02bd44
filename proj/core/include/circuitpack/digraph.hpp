#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace circuitpack {

using VertexId = int;
using ArcId = int;

struct Arc {
  std::string name;
  VertexId tail = 0;
  VertexId head = 0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed multigraph with loops. Vertices and arcs are addressed by their
// position (declaration order); names are the external identifiers used by the
// file formats. Positional order is the deterministic order used everywhere.
class Digraph {
 public:
  Digraph() = default;

  // Builds an unnamed digraph on `n` vertices ("0".."n-1") with arcs
  // "e0".."ek" in the given order.
  static Digraph from_arcs(int n, std::span<const std::pair<int, int>> arcs);

  VertexId add_vertex(std::string name);
  ArcId add_arc(std::string name, VertexId tail, VertexId head);
  // Adds an arc with a generated name that does not clash with existing arcs.
  ArcId add_arc(VertexId tail, VertexId head);

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  bool empty() const { return vertex_names_.empty(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const ArcId> out_arcs(VertexId v) const { return out_[v]; }
  std::span<const ArcId> in_arcs(VertexId v) const { return in_[v]; }
  int out_degree(VertexId v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(VertexId v) const { return static_cast<int>(in_[v].size()); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArcId> find_arc(std::string_view name) const;
  VertexId vertex(std::string_view name) const;  // throws if absent
  ArcId arc_id(std::string_view name) const;     // throws if absent

  // Subdigraph keeping the flagged vertices and the flagged arcs whose ends
  // are both kept. Relative order is preserved.
  Digraph subdigraph(const std::vector<bool>& keep_vertex,
                     const std::vector<bool>& keep_arc) const;
  Digraph without_arcs(const std::vector<bool>& drop_arc) const;
  Digraph without_vertices(const std::vector<bool>& drop_vertex) const;
  Digraph without_vertex(VertexId v) const;
  Digraph without_arc(ArcId a) const;
  // Removes vertices that have no incident arcs.
  Digraph without_isolated_vertices() const;

  // Number of arcs u->v (loops when u == v).
  int multiplicity(VertexId u, VertexId v) const;
  bool has_loops() const;
  bool is_simple() const;  // no loops, no parallel arcs

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_names_ == b.vertex_names_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArcId> arc_index_;
};

// A directed circuit, stored as a cyclic arc sequence. The first arc leaves
// the smallest vertex on the circuit.
struct Circuit {
  std::vector<ArcId> arcs;

  int length() const { return static_cast<int>(arcs.size()); }
  friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

// Vertices of `c` in traversal order.
std::vector<VertexId> circuit_vertices(const Digraph& d, const Circuit& c);
// Checks consecutive arcs chain head->tail, the sequence closes and no vertex
// repeats.
bool is_valid_circuit(const Digraph& d, const Circuit& c);

using VertexWeights = std::vector<std::int64_t>;  // indexed by VertexId
using ArcWeights = std::vector<std::int64_t>;     // indexed by ArcId

// Name-keyed weight maps as they appear in files.
VertexWeights vertex_weights_from_map(
    const Digraph& d, const std::map<std::string, std::int64_t>& by_name,
    std::int64_t default_weight = 1);
ArcWeights arc_weights_from_map(
    const Digraph& d, const std::map<std::string, std::int64_t>& by_name,
    std::int64_t default_weight = 1);

}  // namespace circuitpack
