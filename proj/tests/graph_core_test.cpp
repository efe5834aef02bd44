#include <random>

#include <gtest/gtest.h>

#include "circuitpack/canonical.hpp"
#include "circuitpack/circuits.hpp"
#include "circuitpack/connectivity.hpp"
#include "circuitpack/enumerate.hpp"
#include "circuitpack/errors.hpp"
#include "circuitpack/fixtures.hpp"
#include "circuitpack/io.hpp"
#include "circuitpack/minor.hpp"
#include "circuitpack/planarity.hpp"
#include "circuitpack/transforms.hpp"
#include "oracles.hpp"

namespace cp = circuitpack;

namespace {

cp::Digraph digon() {
  return cp::parse_digraph("v 1\nv 2\ne a 1 2\ne b 2 1");
}

cp::Digraph directed_cycle(int k) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < k; ++i) arcs.emplace_back(i, (i + 1) % k);
  return cp::Digraph::from_arcs(k, arcs);
}

// Random multidigraph with loops, for cross-checks against brute force.
cp::Digraph random_multi(int n, int arcs, cp::Rng& rng) {
  std::uniform_int_distribution<int> v(0, n - 1);
  std::vector<std::pair<int, int>> list;
  for (int i = 0; i < arcs; ++i) list.emplace_back(v(rng), v(rng));
  return cp::Digraph::from_arcs(n, list);
}

cp::Digraph shuffled(const cp::Digraph& d, cp::Rng& rng) {
  std::vector<int> perm(d.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> arcs;
  for (const auto& a : d.arcs()) arcs.emplace_back(perm[a.tail], perm[a.head]);
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return cp::Digraph::from_arcs(d.num_vertices(), arcs);
}

}  // namespace

TEST(Parse, Digon) {
  cp::Digraph d = digon();
  EXPECT_EQ(d.num_vertices(), 2);
  EXPECT_EQ(d.num_arcs(), 2);
  EXPECT_EQ(d.arc(d.arc_id("a")).tail, d.vertex("1"));
  EXPECT_EQ(d.arc(d.arc_id("b")).head, d.vertex("1"));
}

TEST(Parse, EmptyText) {
  EXPECT_TRUE(cp::parse_digraph("").empty());
  EXPECT_TRUE(cp::parse_digraph("# nothing\n\n").empty());
}

TEST(Parse, ErrorsCarryLineNumbers) {
  try {
    cp::parse_digraph("v 1\n\ne a 1 2\n");
    FAIL() << "undeclared vertex accepted";
  } catch (const cp::ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(cp::parse_digraph("v 1\nv 1\n"), cp::ParseError);
  EXPECT_THROW(cp::parse_digraph("x 1\n"), cp::ParseError);
  EXPECT_THROW(cp::parse_digraph("v 1\ne a 1\n"), cp::ParseError);
  EXPECT_THROW(cp::parse_bipartite("a 1\nb 2\ne x 2 1\n"), cp::ParseError);
}

TEST(Parse, RoundTripRandomFile) {
  cp::Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    cp::Digraph d = random_multi(5, 15, rng);
    std::string text = cp::serialize_digraph(d);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 20);
    cp::Digraph back = cp::parse_digraph(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(cp::serialize_digraph(back), text);
    EXPECT_EQ(cp::digraph_from_json(cp::digraph_to_json(d)), d);
  }
}

TEST(Parse, BipartiteRoundTrip) {
  cp::BipartiteGraph h = cp::heawood();
  cp::MarkedBipartite mb = cp::bipartite_double(cp::f7());
  std::string text = cp::serialize_bipartite(mb.graph, mb.matching);
  EXPECT_TRUE(cp::looks_bipartite(text));
  cp::MarkedBipartite back = cp::parse_bipartite(text);
  EXPECT_EQ(back.graph, mb.graph);
  EXPECT_EQ(back.matching, mb.matching);
  cp::MarkedBipartite j = cp::bipartite_from_json(cp::bipartite_to_json(h));
  EXPECT_EQ(j.graph, h);
  EXPECT_FALSE(cp::looks_bipartite(cp::serialize_digraph(cp::f7())));
}

TEST(StrongConnectivity, Examples) {
  EXPECT_TRUE(cp::strongly_connected(digon()));
  EXPECT_FALSE(cp::strongly_connected(cp::parse_digraph("v 1\nv 2\ne a 1 2")));
  EXPECT_TRUE(cp::strongly_connected(cp::f7()));
  EXPECT_TRUE(cp::strongly_connected(cp::Digraph{}));
  EXPECT_TRUE(cp::strongly_k_connected(digon(), 2));
  EXPECT_FALSE(cp::strongly_k_connected(directed_cycle(3), 2));
  EXPECT_TRUE(cp::strongly_k_connected(cp::f7(), 2));
}

TEST(StrongConnectivity, MatchesReachabilityOracle) {
  cp::Rng rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    cp::Digraph d = random_multi(1 + rep % 6, rep % 13, rng);
    oracle::Small s = oracle::small_of(d);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(cp::strongly_k_connected(d, k), oracle::brute_strongly_k_connected(s, k))
          << cp::serialize_digraph(d) << "k=" << k;
    }
  }
}

TEST(StrongConnectivity, ComponentsAreTopologicallyOrdered) {
  cp::Rng rng(12);
  for (int rep = 0; rep < 200; ++rep) {
    cp::Digraph d = random_multi(6, rep % 10, rng);
    cp::Condensation c = cp::strong_components(d);
    for (const auto& a : d.arcs()) EXPECT_LE(c.component[a.tail], c.component[a.head]);
    // Same component iff mutually reachable (Warshall closure).
    const int n = d.num_vertices();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x) reach[x][x] = true;
    for (const auto& a : d.arcs()) reach[a.tail][a.head] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        EXPECT_EQ(c.component[u] == c.component[v], reach[u][v] && reach[v][u]);
      }
    }
  }
}

TEST(Circuits, Examples) {
  EXPECT_EQ(cp::enumerate_circuits(digon()).circuits.size(), 1u);
  std::vector<std::pair<int, int>> dag{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {0, 4}};
  EXPECT_TRUE(cp::enumerate_circuits(cp::Digraph::from_arcs(5, dag)).circuits.empty());
  EXPECT_EQ(cp::enumerate_circuits(cp::odd_double_circuit(3)).circuits.size(), 5u);
}

TEST(Circuits, MatchBruteForceCount) {
  cp::Rng rng(3);
  for (int rep = 0; rep < 300; ++rep) {
    cp::Digraph d = random_multi(1 + rep % 6, rep % 14, rng);
    cp::CircuitList list = cp::enumerate_circuits(d);
    EXPECT_FALSE(list.truncated);
    EXPECT_EQ(static_cast<std::int64_t>(list.circuits.size()),
              oracle::brute_circuit_count(oracle::small_of(d)))
        << cp::serialize_digraph(d);
    std::set<cp::Circuit> distinct(list.circuits.begin(), list.circuits.end());
    EXPECT_EQ(distinct.size(), list.circuits.size());
    for (const auto& c : list.circuits) EXPECT_TRUE(cp::is_valid_circuit(d, c));
  }
}

TEST(Circuits, CapTruncates) {
  cp::CircuitList list = cp::enumerate_circuits(cp::odd_double_circuit(3), 2);
  EXPECT_EQ(list.circuits.size(), 2u);
  EXPECT_TRUE(list.truncated);
}

TEST(Canonical, Examples) {
  cp::Digraph relabelled = cp::parse_digraph("v x\nv y\ne p y x\ne q x y");
  EXPECT_EQ(cp::canonical_form(digon()), cp::canonical_form(relabelled));
  std::vector<std::pair<int, int>> rev{{1, 0}, {2, 1}, {0, 2}};
  EXPECT_EQ(cp::canonical_form(directed_cycle(3)),
            cp::canonical_form(cp::Digraph::from_arcs(3, rev)));
}

TEST(Canonical, AgreesWithPermutationSearch) {
  cp::Rng rng(5);
  for (int rep = 0; rep < 400; ++rep) {
    const int n = 6;
    cp::Digraph a = random_multi(n, 7 + rep % 5, rng);
    // Half the time an isomorphic copy, otherwise a random neighbour.
    cp::Digraph b = rep % 2 ? shuffled(a, rng) : random_multi(n, a.num_arcs(), rng);
    if (rep % 4 == 0) {
      std::vector<std::pair<int, int>> arcs;
      for (const auto& x : a.arcs()) arcs.emplace_back(x.tail, x.head);
      arcs.back().second = (arcs.back().second + 1) % n;
      b = shuffled(cp::Digraph::from_arcs(n, arcs), rng);
    }
    EXPECT_EQ(cp::isomorphic(a, b), oracle::brute_isomorphic(a, b))
        << cp::serialize_digraph(a) << "--\n" << cp::serialize_digraph(b);
  }
}

TEST(Canonical, BipartiteAgreesWithPermutationSearch) {
  cp::Rng rng(6);
  std::uniform_int_distribution<int> side(0, 2);
  for (int rep = 0; rep < 200; ++rep) {
    cp::BipartiteGraph x, y;
    for (int i = 0; i < 3; ++i) {
      x.add_a("a" + std::to_string(i));
      x.add_b("b" + std::to_string(i));
      y.add_a("a" + std::to_string(i));
      y.add_b("b" + std::to_string(i));
    }
    for (int e = 0; e < 5; ++e) x.add_edge(side(rng), side(rng));
    for (int e = 0; e < 5; ++e) y.add_edge(side(rng), side(rng));
    EXPECT_EQ(cp::isomorphic(x, y), oracle::brute_isomorphic(x, y));
  }
}

TEST(Canonical, SizeGuard) {
  EXPECT_THROW(cp::canonical_form(cp::Digraph::from_arcs(cp::kCanonicalVertexLimit + 1, {})),
               cp::PreconditionError);
}

TEST(Enumerate, DigraphCounts) {
  // Unlabelled simple digraphs on n vertices, without and with loops.
  const int plain[] = {1, 3, 16, 218};
  const int looped[] = {2, 10, 104, 3044};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(cp::enumerate_digraphs(n).size(), static_cast<std::size_t>(plain[n - 1]));
    cp::DigraphEnumOptions opts;
    opts.loops = true;
    EXPECT_EQ(cp::enumerate_digraphs(n, opts).size(),
              static_cast<std::size_t>(looped[n - 1]));
  }
}

TEST(Enumerate, DigraphsPairwiseNonIsomorphic) {
  std::vector<cp::Digraph> all = cp::enumerate_digraphs(3);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      EXPECT_FALSE(oracle::brute_isomorphic(all[i], all[j]));
    }
  }
}

TEST(Enumerate, BipartiteWithPerfectMatchingMatchesBruteForce) {
  for (int half = 1; half <= 3; ++half) {
    // All labelled simple graphs with a perfect matching, deduplicated by the
    // permutation oracle.
    std::set<std::vector<std::pair<int, int>>> keys;
    const int cells = half * half;
    for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
      cp::BipartiteGraph g;
      for (int i = 0; i < half; ++i) {
        g.add_a("a" + std::to_string(i));
        g.add_b("b" + std::to_string(i));
      }
      for (int c = 0; c < cells; ++c) {
        if (mask >> c & 1) g.add_edge(c / half, c % half);
      }
      if (oracle::ryser_permanent(g) == 0) continue;
      keys.insert(std::min(oracle::brute_canonical(oracle::marked_symmetric(g, true)),
                           oracle::brute_canonical(oracle::marked_symmetric(g, false))));
    }
    EXPECT_EQ(cp::enumerate_bipartite_with_pm(half).size(), keys.size()) << half;
  }
}

TEST(Enumerate, BracesSmall) {
  ASSERT_EQ(cp::enumerate_braces(2).size(), 1u);
  ASSERT_EQ(cp::enumerate_braces(3).size(), 1u);
  EXPECT_TRUE(cp::isomorphic(cp::enumerate_braces(3)[0], cp::k33()));
  bool has_cube = false;
  for (const auto& g : cp::enumerate_braces(4)) {
    EXPECT_TRUE(oracle::brute_brace(g));
    has_cube = has_cube || cp::isomorphic(g, cp::cube());
  }
  EXPECT_TRUE(has_cube);
}

TEST(Planarity, Fixtures) {
  EXPECT_TRUE(cp::planar(cp::cube()));
  EXPECT_FALSE(cp::planar(cp::k33()));
  EXPECT_FALSE(cp::planar(cp::heawood()));
  std::vector<std::pair<int, int>> k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
  EXPECT_FALSE(cp::planar_graph(5, k5));
  k5.pop_back();
  EXPECT_TRUE(cp::planar_graph(5, k5));
}

TEST(Planarity, EulerBoundOnRandomPlanarDigraphs) {
  cp::Rng rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    cp::Digraph d = cp::random_planar_digraph(3 + rep % 6, rng);
    ASSERT_TRUE(cp::planar(d));
    std::set<std::pair<int, int>> pairs;
    for (const auto& a : d.arcs()) {
      if (a.tail != a.head) pairs.insert(std::minmax(a.tail, a.head));
    }
    EXPECT_LE(static_cast<int>(pairs.size()), 3 * d.num_vertices() - 6);
  }
}

TEST(Planarity, StronglyPlanar) {
  EXPECT_TRUE(cp::strongly_planar(directed_cycle(5)));
  EXPECT_FALSE(cp::strongly_planar(cp::f7()));
  EXPECT_FALSE(cp::strongly_planar(cp::odd_double_circuit(3)));
}

TEST(Transforms, DoubleExamples) {
  cp::MarkedBipartite g = cp::bipartite_double(digon());
  EXPECT_EQ(g.graph.num_vertices(), 4);
  EXPECT_EQ(g.graph.num_edges(), 4);
  EXPECT_EQ(g.matching.edges.size(), 2u);
  cp::MarkedBipartite loop = cp::bipartite_double(cp::parse_digraph("v x\ne l x x"));
  EXPECT_EQ(loop.graph.num_vertices(), 2);
  EXPECT_EQ(loop.graph.num_edges(), 2);
  EXPECT_EQ(loop.matching.edges.size(), 1u);
  EXPECT_TRUE(cp::isomorphic(cp::bipartite_double(cp::f7()).graph, cp::heawood()));
}

TEST(Transforms, DgmOfDoubleIsIdentity) {
  for (int n = 1; n <= 4; ++n) {
    cp::DigraphEnumOptions opts;
    opts.loops = true;
    for (const cp::Digraph& d : cp::enumerate_digraphs(n, opts)) {
      cp::MarkedBipartite g = cp::bipartite_double(d);
      cp::Digraph back = cp::dgm(g.graph, g.matching);
      EXPECT_TRUE(oracle::brute_isomorphic(back, d)) << cp::serialize_digraph(d);
    }
  }
}

TEST(Transforms, VertexSplit) {
  cp::VertexSplit s = cp::vertex_split(digon());
  EXPECT_EQ(s.graph.num_vertices(), 4);
  EXPECT_EQ(s.graph.num_arcs(), 4);
  EXPECT_TRUE(cp::vertex_split(cp::Digraph{}).graph.empty());
  cp::Rng rng(4);
  for (int rep = 0; rep < 40; ++rep) {
    cp::Digraph d = cp::random_planar_digraph(3 + rep % 4, rng);
    cp::VertexSplit h = cp::vertex_split(d);
    EXPECT_EQ(h.graph.num_vertices(), 2 * d.num_vertices());
    EXPECT_EQ(h.graph.num_arcs(), d.num_arcs() + d.num_vertices());
    int ones = 0;
    for (auto w : h.weights) {
      EXPECT_TRUE(w == 1 || w == h.graph.num_arcs());
      ones += w == 1;
    }
    EXPECT_EQ(ones, d.num_vertices());
    if (cp::strongly_planar(d)) {
      EXPECT_TRUE(cp::strongly_planar(h.graph));
    }
  }
}
