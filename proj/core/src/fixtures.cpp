#include "circuitpack/fixtures.hpp"

#include <string>
#include <utility>
#include <vector>

namespace circuitpack {

BipartiteGraph heawood() {
  BipartiteGraph g;
  for (int i = 0; i < 14; i += 2) g.add_a(std::to_string(i));
  for (int i = 1; i < 14; i += 2) g.add_b(std::to_string(i));
  auto join = [&](std::string name, int u, int v) {
    if (u % 2) std::swap(u, v);
    g.add_edge(std::move(name), u / 2, v / 2);
  };
  for (int i = 0; i < 14; ++i) join("c" + std::to_string(i), i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) {
    join("d" + std::to_string(i / 2), i, (i + 5) % 14);
  }
  return g;
}

BipartiteGraph k33() {
  BipartiteGraph g;
  for (int i = 1; i <= 3; ++i) g.add_a("a" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) g.add_b("b" + std::to_string(i));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      g.add_edge("a" + std::to_string(i + 1) + "b" + std::to_string(j + 1), i,
                 j);
    }
  }
  return g;
}

BipartiteGraph cube() {
  auto bits = [](int x) {
    std::string s;
    for (int i = 2; i >= 0; --i) s += (x >> i & 1) ? '1' : '0';
    return s;
  };
  BipartiteGraph g;
  std::vector<int> index(8);
  for (int x = 0; x < 8; ++x) {
    if (__builtin_popcount(x) % 2 == 0) index[x] = g.add_a(bits(x));
  }
  for (int x = 0; x < 8; ++x) {
    if (__builtin_popcount(x) % 2 == 1) index[x] = g.add_b(bits(x));
  }
  for (int x = 0; x < 8; ++x) {
    if (__builtin_popcount(x) % 2) continue;
    for (int bit = 2; bit >= 0; --bit) {
      int y = x ^ (1 << bit);
      g.add_edge(bits(x) + "-" + bits(y), index[x], index[y]);
    }
  }
  return g;
}

}  // namespace circuitpack
