#include "circuitpack/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "circuitpack/errors.hpp"

namespace circuitpack {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' expects " +
                                      std::to_string(n - 1) + " arguments");
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  Digraph d;
  for (const Line& line : tokenize(text)) {
    const std::string& kind = line.tokens[0];
    try {
      if (kind == "v") {
        expect_arity(line, 2);
        d.add_vertex(line.tokens[1]);
      } else if (kind == "e") {
        expect_arity(line, 4);
        auto tail = d.find_vertex(line.tokens[2]);
        auto head = d.find_vertex(line.tokens[3]);
        if (!tail || !head) {
          throw ParseError(line.number, "undeclared endpoint in arc '" +
                                            line.tokens[1] + "'");
        }
        d.add_arc(line.tokens[1], *tail, *head);
      } else {
        throw ParseError(line.number, "unknown directive '" + kind + "'");
      }
    } catch (const PreconditionError& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return d;
}

std::string serialize_digraph(const Digraph& d) {
  std::string out;
  for (const auto& name : d.vertex_names()) out += "v " + name + "\n";
  for (const Arc& a : d.arcs()) {
    out += "e " + a.name + " " + d.vertex_name(a.tail) + " " +
           d.vertex_name(a.head) + "\n";
  }
  return out;
}

MarkedBipartite parse_bipartite(std::string_view text) {
  MarkedBipartite result;
  BipartiteGraph& g = result.graph;
  std::vector<std::pair<int, std::string>> matched;
  for (const Line& line : tokenize(text)) {
    const std::string& kind = line.tokens[0];
    try {
      if (kind == "a") {
        expect_arity(line, 2);
        g.add_a(line.tokens[1]);
      } else if (kind == "b") {
        expect_arity(line, 2);
        g.add_b(line.tokens[1]);
      } else if (kind == "e") {
        expect_arity(line, 4);
        auto a = g.find_vertex(line.tokens[2]);
        auto b = g.find_vertex(line.tokens[3]);
        if (!a || !b || !g.is_a(*a) || g.is_a(*b)) {
          throw ParseError(line.number, "edge '" + line.tokens[1] +
                                            "' must join an a-vertex to a "
                                            "b-vertex");
        }
        g.add_edge(line.tokens[1], *a, *b - g.size_a());
      } else if (kind == "m") {
        expect_arity(line, 2);
        matched.emplace_back(line.number, line.tokens[1]);
      } else {
        throw ParseError(line.number, "unknown directive '" + kind + "'");
      }
    } catch (const PreconditionError& e) {
      throw ParseError(line.number, e.what());
    }
  }
  for (const auto& [number, name] : matched) {
    auto e = g.find_edge(name);
    if (!e) throw ParseError(number, "matched edge '" + name + "' undeclared");
    result.matching.edges.push_back(*e);
  }
  std::sort(result.matching.edges.begin(), result.matching.edges.end());
  result.matching.edges.erase(
      std::unique(result.matching.edges.begin(), result.matching.edges.end()),
      result.matching.edges.end());
  return result;
}

std::string serialize_bipartite(const BipartiteGraph& g, const Matching& m) {
  std::string out;
  for (const auto& name : g.a_names()) out += "a " + name + "\n";
  for (const auto& name : g.b_names()) out += "b " + name + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + e.name + " " + g.a_names()[e.a] + " " + g.b_names()[e.b] +
           "\n";
  }
  for (EdgeId e : m.edges) out += "m " + g.edge(e).name + "\n";
  return out;
}

bool looks_bipartite(std::string_view text) {
  for (const Line& line : tokenize(text)) {
    const std::string& kind = line.tokens[0];
    if (kind == "a" || kind == "b" || kind == "m") return true;
    if (kind == "v") return false;
  }
  return false;
}

nlohmann::json digraph_to_json(const Digraph& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : d.arcs()) {
    arcs.push_back({{"id", a.name},
                    {"tail", d.vertex_name(a.tail)},
                    {"head", d.vertex_name(a.head)}});
  }
  return {{"vertices", d.vertex_names()}, {"arcs", arcs}};
}

Digraph digraph_from_json(const nlohmann::json& j) {
  Digraph d;
  try {
    for (const auto& v : j.at("vertices")) d.add_vertex(v.get<std::string>());
    for (const auto& a : j.at("arcs")) {
      auto tail = d.find_vertex(a.at("tail").get<std::string>());
      auto head = d.find_vertex(a.at("head").get<std::string>());
      if (!tail || !head) {
        throw ParseError(0, "undeclared endpoint in arc " + a.dump());
      }
      d.add_arc(a.at("id").get<std::string>(), *tail, *head);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return d;
}

nlohmann::json bipartite_to_json(const BipartiteGraph& g, const Matching& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(
        {{"id", e.name}, {"a", g.a_names()[e.a]}, {"b", g.b_names()[e.b]}});
  }
  nlohmann::json matched = nlohmann::json::array();
  for (EdgeId e : m.edges) matched.push_back(g.edge(e).name);
  return {{"sideA", g.a_names()},
          {"sideB", g.b_names()},
          {"edges", edges},
          {"matching", matched}};
}

MarkedBipartite bipartite_from_json(const nlohmann::json& j) {
  MarkedBipartite result;
  BipartiteGraph& g = result.graph;
  try {
    for (const auto& v : j.at("sideA")) g.add_a(v.get<std::string>());
    for (const auto& v : j.at("sideB")) g.add_b(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
      auto a = g.find_vertex(e.at("a").get<std::string>());
      auto b = g.find_vertex(e.at("b").get<std::string>());
      if (!a || !b || !g.is_a(*a) || g.is_a(*b)) {
        throw ParseError(0, "bad edge endpoints in " + e.dump());
      }
      g.add_edge(e.at("id").get<std::string>(), *a, *b - g.size_a());
    }
    if (j.contains("matching")) {
      for (const auto& name : j.at("matching")) {
        result.matching.edges.push_back(g.edge_id(name.get<std::string>()));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  std::sort(result.matching.edges.begin(), result.matching.edges.end());
  return result;
}

std::string digraph_to_dot(const Digraph& d) {
  std::string out = "digraph D {\n";
  for (const auto& name : d.vertex_names()) out += "  " + quote(name) + ";\n";
  for (const Arc& a : d.arcs()) {
    out += "  " + quote(d.vertex_name(a.tail)) + " -> " +
           quote(d.vertex_name(a.head)) + " [label=" + quote(a.name) + "];\n";
  }
  return out + "}\n";
}

std::string bipartite_to_dot(const BipartiteGraph& g, const Matching& m) {
  std::string out = "graph G {\n";
  for (const auto& name : g.a_names()) {
    out += "  " + quote(name) + " [shape=box];\n";
  }
  for (const auto& name : g.b_names()) {
    out += "  " + quote(name) + " [shape=circle];\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    bool matched = std::binary_search(m.edges.begin(), m.edges.end(), e);
    out += "  " + quote(g.a_names()[edge.a]) + " -- " +
           quote(g.b_names()[edge.b]) + " [label=" + quote(edge.name) +
           (matched ? ", style=bold" : "") + "];\n";
  }
  return out + "}\n";
}

nlohmann::json circuit_to_json(const Digraph& d, const Circuit& c) {
  nlohmann::json arcs = nlohmann::json::array();
  for (ArcId a : c.arcs) arcs.push_back(d.arc(a).name);
  return arcs;
}

}  // namespace circuitpack
