#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "circuitpack/bipartite.hpp"
#include "circuitpack/digraph.hpp"

namespace circuitpack {

// Digraph text format:
//   # comment
//   v <name>
//   e <name> <tail> <head>
// Vertices must be declared before arcs that use them.
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& d);

// Bipartite text format:
//   a <name>               vertex on side A
//   b <name>               vertex on side B
//   e <name> <endA> <endB>
//   m <name>               flags edge <name> as matched
MarkedBipartite parse_bipartite(std::string_view text);
std::string serialize_bipartite(const BipartiteGraph& g,
                                const Matching& m = {});

// True when the text uses bipartite directives (`a`/`b`/`m`).
bool looks_bipartite(std::string_view text);

// JSON mirrors: {"vertices":[...],"arcs":[{"id","tail","head"}]} and
// {"sideA":[...],"sideB":[...],"edges":[{"id","a","b"}],"matching":[...]}.
nlohmann::json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const nlohmann::json& j);
nlohmann::json bipartite_to_json(const BipartiteGraph& g,
                                 const Matching& m = {});
MarkedBipartite bipartite_from_json(const nlohmann::json& j);

std::string digraph_to_dot(const Digraph& d);
std::string bipartite_to_dot(const BipartiteGraph& g, const Matching& m = {});

nlohmann::json circuit_to_json(const Digraph& d, const Circuit& c);

}  // namespace circuitpack
