#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "circuitpack/decomposition.hpp"
#include "circuitpack/io.hpp"
#include "circuitpack/matching.hpp"
#include "circuitpack/minor.hpp"
#include "circuitpack/packs.hpp"
#include "circuitpack/solvers.hpp"
#include "circuitpack/transforms.hpp"
#include "circuitpack/verify.hpp"

namespace cp = circuitpack;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kBudget = 3, kInconsistent = 4 };

// Raised when two routes that must agree do not.
struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& text, int line_hint = 1) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw cp::ParseError(line_hint, e.what());
  }
}

// Text or JSON input of either kind.
struct Input {
  bool bipartite = false;
  cp::Digraph digraph;
  cp::MarkedBipartite marked;
};

Input load(const std::string& path) {
  std::string text = read_file(path);
  Input in;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = read_json(text);
    in.bipartite = j.contains("sideA");
    if (in.bipartite) in.marked = cp::bipartite_from_json(j);
    else in.digraph = cp::digraph_from_json(j);
    return in;
  }
  in.bipartite = cp::looks_bipartite(text);
  if (in.bipartite) in.marked = cp::parse_bipartite(text);
  else in.digraph = cp::parse_digraph(text);
  return in;
}

cp::Digraph load_digraph(const std::string& path) {
  Input in = load(path);
  if (in.bipartite) throw cp::PreconditionError("expected a digraph");
  return in.digraph;
}

std::map<std::string, std::int64_t> load_weights(const std::string& path) {
  json j = read_json(read_file(path));
  if (!j.is_object()) throw cp::ParseError(1, "weights must be a JSON object");
  std::map<std::string, std::int64_t> out;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
      throw cp::ParseError(1, "weight of '" + name + "' must be a non-negative integer");
    }
    out[name] = value.get<std::int64_t>();
  }
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_solve(const std::string& file, const std::string& mode,
              const std::string& weights) {
  cp::Digraph d = load_digraph(file);
  std::map<std::string, std::int64_t> w;
  if (!weights.empty()) w = load_weights(weights);
  cp::SolveResult r;
  if (mode == "nu") r = cp::nu(d);
  else if (mode == "tau") r = cp::tau(d);
  else if (mode == "nu-w") r = cp::nu_weighted(d, cp::vertex_weights_from_map(d, w));
  else if (mode == "tau-w") r = cp::tau_weighted(d, cp::vertex_weights_from_map(d, w));
  else if (mode == "nu-edge") r = cp::nu_edge(d, cp::arc_weights_from_map(d, w));
  else r = cp::tau_edge(d, cp::arc_weights_from_map(d, w));
  print(cp::solve_result_to_json(d, r));
  return kOk;
}

int run_packs(const std::string& file, const std::string& method) {
  cp::Digraph d = load_digraph(file);
  json out{{"method", method}};
  std::optional<bool> brute, minor;
  if (method != "minor") {
    cp::PacksResult r = cp::packs_bruteforce(d);
    brute = r.packs;
    out["brute"] = cp::packs_result_to_json(r);
  }
  if (method != "brute") {
    auto o = cp::find_obstruction(d);
    minor = !o.has_value();
    out["minor"] = {{"packs", *minor},
                    {"obstruction", o ? cp::obstruction_to_json(d, *o) : json()}};
  }
  out["packs"] = brute ? *brute : *minor;
  print(out);
  if (brute && minor && *brute != *minor) {
    throw Inconsistent("brute force and obstruction search disagree");
  }
  return kOk;
}

int run_obstruction(const std::string& file) {
  cp::Digraph d = load_digraph(file);
  auto o = cp::find_obstruction(d);
  print({{"obstruction", o ? cp::obstruction_to_json(d, *o) : json()}});
  return kOk;
}

int run_transform(const std::string& file, const std::string& op,
                  const std::string& format) {
  Input in = load(file);
  if (op == "dgm") {
    if (!in.bipartite) throw cp::PreconditionError("dgm expects a bipartite graph");
    cp::Digraph d = cp::dgm(in.marked.graph, in.marked.matching);
    if (format == "json") print(cp::digraph_to_json(d));
    else if (format == "dot") std::cout << cp::digraph_to_dot(d);
    else std::cout << cp::serialize_digraph(d);
    return kOk;
  }
  if (in.bipartite) throw cp::PreconditionError(op + " expects a digraph");
  if (op == "double") {
    cp::MarkedBipartite g = cp::bipartite_double(in.digraph);
    if (format == "json") print(cp::bipartite_to_json(g.graph, g.matching));
    else if (format == "dot") std::cout << cp::bipartite_to_dot(g.graph, g.matching);
    else std::cout << cp::serialize_bipartite(g.graph, g.matching);
    return kOk;
  }
  cp::VertexSplit s = cp::vertex_split(in.digraph);
  json weights = json::object();
  for (cp::ArcId a = 0; a < s.graph.num_arcs(); ++a) {
    weights[s.graph.arc(a).name] = s.weights[a];
  }
  if (format == "json") {
    print({{"digraph", cp::digraph_to_json(s.graph)}, {"weights", weights}});
  } else if (format == "dot") {
    std::cout << cp::digraph_to_dot(s.graph);
  } else {
    std::cout << cp::serialize_digraph(s.graph);
    for (const auto& [name, w] : weights.items()) {
      std::cout << "# weight " << name << " " << w << "\n";
    }
  }
  return kOk;
}

int run_brace(const std::string& file) {
  Input in = load(file);
  if (!in.bipartite) throw cp::PreconditionError("brace expects a bipartite graph");
  const cp::BipartiteGraph& g = in.marked.graph;
  json ext = json::object();
  for (int k = 1; k <= 3; ++k) ext[std::to_string(k)] = cp::k_extendable(g, k);
  print({{"connected", g.is_connected()},
         {"perfect_matching", cp::has_perfect_matching(g)},
         {"k_extendable", ext},
         {"brace", cp::is_brace(g)}});
  return kOk;
}

int run_decompose(const std::string& file) {
  Input in = load(file);
  if (in.bipartite) {
    print(cp::decomposition_to_json(cp::trisum_decompose(in.marked.graph)));
  } else {
    print(cp::decomposition_to_json(cp::decompose_digraph(in.digraph)));
  }
  return kOk;
}

cp::VerifyBounds parse_bounds(const std::string& text, std::uint64_t seed) {
  cp::VerifyBounds b;
  b.seed = seed;
  if (!text.empty()) b = cp::bounds_from_json(read_json(text), b);
  return b;
}

int run_verify(const std::string& id, const std::string& bounds,
               std::uint64_t seed) {
  cp::VerificationReport r = cp::verify_theorem(id, parse_bounds(bounds, seed));
  print(cp::report_to_json(r));
  if (!r.failures.empty()) {
    throw Inconsistent(std::to_string(r.failures.size()) + " failure(s) for " + id);
  }
  return kOk;
}

int run_search_weighted(const std::string& bounds) {
  cp::WeightedSearchBounds b;
  if (!bounds.empty()) {
    json j = read_json(bounds);
    b.max_vertices = j.value("max_vertices", b.max_vertices);
    b.max_weight = j.value("max_weight", b.max_weight);
    b.max_findings = j.value("max_findings", b.max_findings);
  }
  json findings = json::array();
  for (const auto& f : cp::weighted_obstruction_search(b)) {
    findings.push_back(cp::weighted_finding_to_json(f));
  }
  print({{"bounds", {{"max_vertices", b.max_vertices},
                     {"max_weight", b.max_weight},
                     {"max_findings", b.max_findings}}},
         {"findings", findings}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact circuit packing tools for digraphs and bipartite graphs"};
  app.require_subcommand(1);
  std::string budget;
  app.add_option("--budget", budget, "search node allowance (overrides CIRCUITPACK_BUDGET)");

  std::string file, mode = "nu", weights, method = "both", op, bounds, id;
  std::uint64_t seed = 0;
  bool as_json = false, as_dot = false;

  auto* solve = app.add_subcommand("solve", "nu / tau and their weighted and arc variants");
  solve->add_option("file", file)->required();
  solve->add_option("--mode", mode)
      ->check(CLI::IsMember({"nu", "tau", "nu-w", "tau-w", "nu-edge", "tau-edge"}));
  solve->add_option("--weights", weights, "JSON object of weights by name");

  auto* packs = app.add_subcommand("packs", "does every subdigraph have tau = nu");
  packs->add_option("file", file)->required();
  packs->add_option("--method", method)->check(CLI::IsMember({"brute", "minor", "both"}));

  auto* obstruction = app.add_subcommand("obstruction", "odd double circuit or F7 minor");
  obstruction->add_option("file", file)->required();

  auto* transform = app.add_subcommand("transform", "dgm, bipartite double, vertex split");
  transform->add_option("file", file)->required();
  transform->add_option("--op", op)->required()->check(CLI::IsMember({"dgm", "double", "split"}));

  auto* brace = app.add_subcommand("brace", "extendability report");
  brace->add_option("file", file)->required();

  auto* decompose = app.add_subcommand("decompose", "sum decomposition tree");
  decompose->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "enumerate and check a theorem");
  verify->add_option("id", id)->required()->check(CLI::IsMember(cp::theorem_ids()));
  verify->add_option("--bounds", bounds, "JSON object overriding enumeration bounds");
  verify->add_option("--seed", seed);

  auto* search = app.add_subcommand("search-weighted",
                                    "obstruction-free digraphs with weighted tau > nu");
  search->add_option("--bounds", bounds, "JSON: max_vertices, max_weight, max_findings");

  for (CLI::App* sub : {transform}) {
    sub->add_flag("--json", as_json, "JSON output");
    sub->add_flag("--dot", as_dot, "Graphviz output");
  }

  CLI11_PARSE(app, argc, argv);
  if (!budget.empty()) setenv("CIRCUITPACK_BUDGET", budget.c_str(), 1);

  try {
    if (*solve) return run_solve(file, mode, weights);
    if (*packs) return run_packs(file, method);
    if (*obstruction) return run_obstruction(file);
    if (*transform) return run_transform(file, op, as_json ? "json" : as_dot ? "dot" : "text");
    if (*brace) return run_brace(file);
    if (*decompose) return run_decompose(file);
    if (*verify) return run_verify(id, bounds, seed);
    if (*search) return run_search_weighted(bounds);
  } catch (const cp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const cp::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const Inconsistent& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kInconsistent;
  } catch (const cp::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::logic_error& e) {
    // Certificate validation failures surface as logic_error.
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
