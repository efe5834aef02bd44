#include <random>

#include <gtest/gtest.h>

#include "circuitpack/canonical.hpp"
#include "circuitpack/connectivity.hpp"
#include "circuitpack/containment.hpp"
#include "circuitpack/enumerate.hpp"
#include "circuitpack/errors.hpp"
#include "circuitpack/fixtures.hpp"
#include "circuitpack/io.hpp"
#include "circuitpack/matching.hpp"
#include "circuitpack/minor.hpp"
#include "circuitpack/planarity.hpp"
#include "circuitpack/solvers.hpp"
#include "circuitpack/transforms.hpp"
#include "oracles.hpp"

namespace cp = circuitpack;

namespace {

cp::BipartiteGraph cycle_graph(int half) {
  cp::BipartiteGraph g;
  for (int i = 0; i < half; ++i) {
    g.add_a("a" + std::to_string(i));
    g.add_b("b" + std::to_string(i));
  }
  for (int i = 0; i < half; ++i) {
    g.add_edge(i, i);
    g.add_edge(i, (i + 1) % half);
  }
  return g;
}

cp::BipartiteGraph random_bipartite(int half, int edges, cp::Rng& rng) {
  cp::BipartiteGraph g;
  for (int i = 0; i < half; ++i) {
    g.add_a("a" + std::to_string(i));
    g.add_b("b" + std::to_string(i));
  }
  std::uniform_int_distribution<int> v(0, half - 1);
  for (int i = 0; i < half; ++i) g.add_edge(i, i);  // keeps a perfect matching
  for (int e = 0; e < edges; ++e) g.add_edge(v(rng), v(rng));
  return g;
}

int girth(const cp::BipartiteGraph& g) {
  int best = 1 << 20;
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::vector<int> dist(g.num_vertices(), -1), parent(g.num_vertices(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (cp::EdgeId e : g.incident(x)) {
        int y = g.other_end(e, x);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = e;
          queue.push_back(y);
        } else if (parent[x] != e) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST(Fixtures, Heawood) {
  cp::BipartiteGraph h = cp::heawood();
  EXPECT_EQ(h.num_vertices(), 14);
  EXPECT_EQ(h.num_edges(), 21);
  for (int v = 0; v < 14; ++v) EXPECT_EQ(h.degree(v), 3);
  EXPECT_EQ(girth(h), 6);
  EXPECT_TRUE(oracle::brute_brace(h));
  EXPECT_TRUE(cp::is_brace(h));
}

TEST(Fixtures, CubeAndK33) {
  cp::BipartiteGraph c = cp::cube();
  EXPECT_EQ(c.num_vertices(), 8);
  EXPECT_EQ(c.num_edges(), 12);
  EXPECT_TRUE(cp::planar(c));
  EXPECT_EQ(cp::k33().num_edges(), 9);
}

TEST(Matchings, Counts) {
  EXPECT_EQ(cp::perfect_matchings(cycle_graph(2)).matchings.size(), 2u);
  EXPECT_EQ(cp::perfect_matchings(cp::k33()).matchings.size(), 6u);
  EXPECT_EQ(static_cast<std::int64_t>(cp::perfect_matchings(cp::heawood()).matchings.size()),
            oracle::ryser_permanent(cp::heawood()));
  EXPECT_EQ(cp::perfect_matchings(cp::BipartiteGraph{}).matchings.size(), 1u);
}

TEST(Matchings, AgreeWithPermanent) {
  cp::Rng rng(51);
  for (int rep = 0; rep < 200; ++rep) {
    cp::BipartiteGraph g = random_bipartite(1 + rep % 6, rep % 10, rng);
    cp::MatchingList list = cp::perfect_matchings(g);
    EXPECT_EQ(static_cast<std::int64_t>(list.matchings.size()), oracle::ryser_permanent(g));
    std::set<cp::Matching> distinct(list.matchings.begin(), list.matchings.end());
    EXPECT_EQ(distinct.size(), list.matchings.size());
    for (const auto& m : list.matchings) EXPECT_TRUE(cp::is_perfect_matching(g, m));
  }
}

TEST(Extendability, Examples) {
  EXPECT_TRUE(cp::k_extendable(cp::k33(), 2));
  EXPECT_TRUE(cp::k_extendable(cycle_graph(2), 2));
  cp::BipartiteGraph path;
  path.add_a("a0");
  path.add_b("b0");
  path.add_a("a1");
  path.add_b("b1");
  path.add_edge(0, 0);
  path.add_edge(1, 0);
  path.add_edge(1, 1);
  EXPECT_FALSE(cp::k_extendable(path, 1));
  EXPECT_TRUE(cp::is_brace(cycle_graph(2)));
  EXPECT_FALSE(cp::is_brace(cycle_graph(3)));
}

TEST(Extendability, AgreesWithExhaustiveExtension) {
  cp::Rng rng(52);
  for (int rep = 0; rep < 150; ++rep) {
    cp::BipartiteGraph g = random_bipartite(2 + rep % 4, 2 + rep % 9, rng);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(cp::k_extendable(g, k), oracle::brute_k_extendable(g, k))
          << cp::serialize_bipartite(g) << "k=" << k;
    }
    EXPECT_EQ(cp::is_brace(g), oracle::brute_brace(g)) << cp::serialize_bipartite(g);
  }
}

TEST(Extendability, MatchesStrongConnectivityOfDgm) {
  for (int half = 1; half <= 4; ++half) {
    for (const cp::BipartiteGraph& g : cp::enumerate_bipartite_with_pm(half)) {
      if (!g.is_connected()) continue;
      for (const cp::Matching& m : cp::perfect_matchings(g).matchings) {
        cp::Digraph d = cp::dgm(g, m);
        for (int k = 1; k <= 3; ++k) {
          EXPECT_EQ(cp::k_extendable(g, k), cp::strongly_k_connected(d, k));
        }
      }
    }
  }
}

TEST(Dgm, Examples) {
  cp::BipartiteGraph c4 = cycle_graph(2);
  for (const auto& m : cp::perfect_matchings(c4).matchings) {
    cp::Digraph d = cp::dgm(c4, m);
    EXPECT_EQ(d.num_vertices(), 2);
    EXPECT_EQ(d.num_arcs(), 2);
    EXPECT_TRUE(cp::strongly_connected(d));
  }
  for (const auto& m : cp::perfect_matchings(cp::k33()).matchings) {
    EXPECT_TRUE(cp::isomorphic(cp::dgm(cp::k33(), m), cp::odd_double_circuit(3)));
  }
  EXPECT_THROW(cp::dgm(c4, cp::Matching{{0}}), cp::PreconditionError);
}

TEST(Dgm, HeawoodGivesF7ForEveryMatching) {
  cp::BipartiteGraph h = cp::heawood();
  cp::MatchingList all = cp::perfect_matchings(h);
  EXPECT_EQ(all.matchings.size(), 24u);
  const cp::CanonicalKey key = cp::canonical_form(cp::f7());
  for (const auto& m : all.matchings) {
    cp::Digraph d = cp::dgm(h, m);
    EXPECT_EQ(cp::canonical_form(d), key);
    EXPECT_EQ(d.num_vertices(), 7);
    EXPECT_EQ(d.num_arcs(), 14);
  }
}

TEST(Alternating, Examples) {
  cp::BipartiteGraph c4 = cycle_graph(2);
  cp::Matching m = cp::perfect_matchings(c4).matchings[0];
  EXPECT_EQ(cp::alternating_nu(c4, m).value, 1);
  EXPECT_EQ(cp::alternating_tau(c4, m).value, 1);
  cp::Matching mh = cp::perfect_matchings(cp::heawood()).matchings[0];
  EXPECT_EQ(cp::alternating_nu(cp::heawood(), mh).value, 2);
  EXPECT_EQ(cp::alternating_tau(cp::heawood(), mh).value, 3);
}

TEST(Alternating, EqualsDigraphValues) {
  cp::Rng rng(53);
  for (int rep = 0; rep < 120; ++rep) {
    cp::BipartiteGraph g = random_bipartite(2 + rep % 4, rep % 8, rng);
    for (const auto& m : cp::perfect_matchings(g, 3).matchings) {
      cp::Digraph d = cp::dgm(g, m);
      cp::AlternatingResult n = cp::alternating_nu(g, m), t = cp::alternating_tau(g, m);
      EXPECT_EQ(n.value, cp::nu(d).value);
      EXPECT_EQ(t.value, cp::tau(d).value);
      EXPECT_EQ(static_cast<std::int64_t>(n.circuits.size()), n.value);
      EXPECT_EQ(cp::alternating_circuits(g, m).size(),
                static_cast<std::size_t>(oracle::brute_circuit_count(oracle::small_of(d))));
    }
  }
}

TEST(CentralCircuits, Examples) {
  EXPECT_EQ(cp::central_circuits(cp::cube(), 4).size(), 6u);
  EXPECT_EQ(cp::central_circuits(cycle_graph(2), 4).size(), 1u);
  // K33: a 6-circuit covers everything, so all of them are central.
  std::vector<cp::EdgeCircuit> six = cp::bipartite_circuits(cp::k33(), 6);
  std::size_t hamiltonian = 0;
  for (const auto& c : six) hamiltonian += c.edges.size() == 6;
  EXPECT_EQ(cp::central_circuits(cp::k33(), 6).size(), hamiltonian);
  EXPECT_EQ(hamiltonian, 6u);
}

TEST(Containment, Examples) {
  cp::BipartiteGraph k = cp::k33(), h = cp::heawood(), c = cp::cube();
  auto self = cp::contains(h, h);
  ASSERT_TRUE(self);
  EXPECT_TRUE(self->complement.edges.empty());
  EXPECT_TRUE(cp::valid_containment(h, h, *self));
  EXPECT_FALSE(cp::contains(h, k));
  EXPECT_FALSE(cp::contains(c, h));
  EXPECT_TRUE(cp::contains_k33(k));
  EXPECT_TRUE(cp::contains_heawood(h));
  EXPECT_FALSE(cp::contains_k33(h));
  EXPECT_FALSE(cp::contains_k33(c));
  EXPECT_FALSE(cp::contains_heawood(c));
}

TEST(Containment, EvenSubdivisionIsFound) {
  // Replace edge a1b1 of K33 by the path a1 - x - y - b1.
  cp::BipartiteGraph k = cp::k33();
  cp::BipartiteGraph g;
  for (const auto& n : k.a_names()) g.add_a(n);
  for (const auto& n : k.b_names()) g.add_b(n);
  int y = g.add_a("y");
  int x = g.add_b("x");
  for (const auto& e : k.edges()) {
    if (e.name == "a1b1") continue;
    g.add_edge(e.name, e.a, e.b);
  }
  g.add_edge("p", 0, x);
  g.add_edge("q", y, x);
  g.add_edge("r", y, 0);
  // x y are covered by the path, so the complement is empty.
  auto w = cp::contains(g, k);
  ASSERT_TRUE(w);
  EXPECT_TRUE(cp::valid_containment(g, k, *w));
  // Adding a pendant pair that must be matched keeps containment.
  int pa = g.add_a("pa");
  int pb = g.add_b("pb");
  g.add_edge("pp", pa, pb);
  g.add_edge("pq", pa, 0);
  auto w2 = cp::contains(g, k);
  ASSERT_TRUE(w2);
  EXPECT_TRUE(cp::valid_containment(g, k, *w2));
}

TEST(Containment, NoK33InPlanarBraces) {
  for (int half = 2; half <= 5; ++half) {
    for (const auto& g : cp::enumerate_braces(half)) {
      bool k33 = cp::contains_k33(g);
      if (cp::planar(g)) {
        EXPECT_FALSE(k33);
      }
      if (auto w = cp::contains(g, cp::k33())) {
        EXPECT_TRUE(cp::valid_containment(g, cp::k33(), *w));
      }
    }
  }
}
