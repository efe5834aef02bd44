#include "circuitpack/minor.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "circuitpack/canonical.hpp"
#include "circuitpack/connectivity.hpp"
#include "circuitpack/fixtures.hpp"
#include "circuitpack/io.hpp"
#include "circuitpack/matching.hpp"
#include "circuitpack/transforms.hpp"

namespace circuitpack {
namespace {

// Working digraph of the search. Every vertex carries the host vertex whose
// name it kept, every arc its host arc id.
struct SArc {
  int tail, head, id;
};

struct State {
  std::vector<int> label;
  std::vector<SArc> arcs;

  int n() const { return static_cast<int>(label.size()); }
  int m() const { return static_cast<int>(arcs.size()); }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arcs.size());
    for (const SArc& a : arcs) out.emplace_back(a.tail, a.head);
    return out;
  }
};

struct Op {
  enum Kind { kDeleteArc, kDeleteVertex, kContract } kind;
  int id;  // host arc id, or host vertex label
};

struct TargetInfo {
  CanonicalKey key;
  int n = 0, m = 0;
  bool loopless = false;
  bool no_parallel = false;    // no two arcs with the same (tail, head)
  bool strong = false;         // strongly connected, every arc on a circuit
  bool no_isolated = false;
};

TargetInfo describe(const Digraph& t) {
  TargetInfo info;
  info.key = canonical_form(t);
  info.n = t.num_vertices();
  info.m = t.num_arcs();
  info.loopless = !t.has_loops();
  info.no_parallel = true;
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    std::vector<VertexId> heads;
    for (ArcId a : t.out_arcs(v)) heads.push_back(t.arc(a).head);
    std::sort(heads.begin(), heads.end());
    if (std::adjacent_find(heads.begin(), heads.end()) != heads.end()) {
      info.no_parallel = false;
    }
  }
  auto on = arcs_on_circuits(t);
  info.strong = t.num_vertices() > 0 && strongly_connected(t) &&
                std::all_of(on.begin(), on.end(), [](bool b) { return b; });
  info.no_isolated = true;
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    if (t.out_degree(v) + t.in_degree(v) == 0) info.no_isolated = false;
  }
  return info;
}

// Mutual reachability classes, numbered by smallest member.
std::vector<int> components(const State& s, int& count) {
  const int n = s.n();
  std::vector<std::vector<int>> out(n);
  for (const SArc& a : s.arcs) out[a.tail].push_back(a.head);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    std::vector<int> stack{v};
    reach[v][v] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : out[x]) {
        if (!reach[v][y]) {
          reach[v][y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<int> comp(n, -1);
  count = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    for (int u = v; u < n; ++u) {
      if (reach[v][u] && reach[u][v]) comp[u] = count;
    }
    ++count;
  }
  return comp;
}

void drop_arcs(State& s, const std::vector<bool>& drop, std::vector<Op>& log) {
  std::vector<SArc> kept;
  for (std::size_t i = 0; i < s.arcs.size(); ++i) {
    if (drop[i]) {
      log.push_back({Op::kDeleteArc, s.arcs[i].id});
    } else {
      kept.push_back(s.arcs[i]);
    }
  }
  s.arcs = std::move(kept);
}

// Arcs at dropped vertices disappear with them.
void drop_vertices(State& s, const std::vector<bool>& drop,
                   std::vector<Op>& log) {
  std::vector<int> remap(s.n(), -1);
  std::vector<int> label;
  for (int v = 0; v < s.n(); ++v) {
    if (drop[v]) {
      log.push_back({Op::kDeleteVertex, s.label[v]});
    } else {
      remap[v] = static_cast<int>(label.size());
      label.push_back(s.label[v]);
    }
  }
  std::vector<SArc> arcs;
  for (const SArc& a : s.arcs) {
    if (remap[a.tail] >= 0 && remap[a.head] >= 0) {
      arcs.push_back({remap[a.tail], remap[a.head], a.id});
    }
  }
  s.label = std::move(label);
  s.arcs = std::move(arcs);
}

State contract(const State& s, int index) {
  const SArc e = s.arcs[index];
  auto map = [&](int v) {
    if (v == e.head) v = e.tail;
    return v > e.head ? v - 1 : v;
  };
  State out;
  for (int v = 0; v < s.n(); ++v) {
    if (v != e.head) out.label.push_back(s.label[v]);
  }
  for (int i = 0; i < s.m(); ++i) {
    if (i == index) continue;
    const SArc& a = s.arcs[i];
    out.arcs.push_back({map(a.tail), map(a.head), a.id});
  }
  return out;
}

using FailureSet = std::unordered_set<CanonicalKey>;

class FailureCache {
 public:
  static constexpr std::size_t kMaxEntries = 2'000'000;

  bool contains(const CanonicalKey& target, const CanonicalKey& state) {
    std::shared_lock lock(mutex_);
    auto it = sets_.find(target);
    return it != sets_.end() && it->second.contains(state);
  }

  void insert(const CanonicalKey& target, const CanonicalKey& state) {
    std::unique_lock lock(mutex_);
    if (size_ >= kMaxEntries) {
      sets_.clear();
      size_ = 0;
    }
    size_ += sets_[target].insert(state).second;
  }

  std::size_t size() {
    std::shared_lock lock(mutex_);
    return size_;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    sets_.clear();
    size_ = 0;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, FailureSet> sets_;
  std::size_t size_ = 0;
};

FailureCache& failure_cache() {
  static FailureCache cache;
  return cache;
}

class MinorSearch {
 public:
  MinorSearch(const TargetInfo& t, Budget& budget) : t_(t), budget_(budget) {}

  bool search(State s) {
    budget_.tick("minor search");
    const std::size_t mark = log.size();
    normalize(s);
    if (t_.strong) {
      int count = 0;
      std::vector<int> comp = components(s, count);
      if (count > 1) {
        for (int c = 0; c < count; ++c) {
          std::vector<bool> drop(s.n());
          int size = 0;
          for (int v = 0; v < s.n(); ++v) {
            drop[v] = comp[v] != c;
            size += !drop[v];
          }
          if (size < t_.n) continue;
          State sub = s;
          const std::size_t inner = log.size();
          drop_vertices(sub, drop, log);
          if (search(std::move(sub))) return true;
          log.resize(inner);
        }
        log.resize(mark);
        return false;
      }
    }
    const int n = s.n(), m = s.m();
    if (n < t_.n || m < t_.m ||
        (t_.no_isolated && m - n < t_.m - t_.n)) {
      log.resize(mark);
      return false;
    }
    const auto pairs = s.pairs();
    CanonicalKey key = canonical_form(n, pairs);
    if (n == t_.n && m == t_.m) {
      if (key == t_.key) return true;
      log.resize(mark);
      return false;
    }
    FailureCache& cache = failure_cache();
    if (cache.contains(t_.key, key)) {
      log.resize(mark);
      return false;
    }

    std::vector<int> indeg(n, 0), outdeg(n, 0), deg(n, 0);
    for (const SArc& a : s.arcs) {
      ++outdeg[a.tail];
      ++indeg[a.head];
      ++deg[a.tail];
      if (a.head != a.tail) ++deg[a.head];
    }
    if (n - 1 >= t_.n && m - 1 >= t_.m) {
      for (int i = 0; i < m; ++i) {
        const SArc& a = s.arcs[i];
        if (a.tail == a.head) continue;
        if (indeg[a.head] != 1 && outdeg[a.tail] != 1) continue;
        log.push_back({Op::kContract, a.id});
        if (search(contract(s, i))) return true;
        log.pop_back();
      }
    }
    if (m - 1 >= t_.m && (!t_.no_isolated || m - 1 - n >= t_.m - t_.n)) {
      for (int i = 0; i < m; ++i) {
        State child = s;
        child.arcs.erase(child.arcs.begin() + i);
        log.push_back({Op::kDeleteArc, s.arcs[i].id});
        if (search(std::move(child))) return true;
        log.pop_back();
      }
    }
    if (n - 1 >= t_.n) {
      for (int v = 0; v < n; ++v) {
        if (m - deg[v] < t_.m) continue;
        if (t_.no_isolated && (m - deg[v]) - (n - 1) < t_.m - t_.n) continue;
        State child = s;
        std::vector<bool> drop(n, false);
        drop[v] = true;
        const std::size_t inner = log.size();
        drop_vertices(child, drop, log);
        if (search(std::move(child))) return true;
        log.resize(inner);
      }
    }
    cache.insert(t_.key, key);
    log.resize(mark);
    return false;
  }

  std::vector<Op> log;

 private:
  const TargetInfo& t_;
  Budget& budget_;

  // Deletions that some derivation of the target can always make first.
  void normalize(State& s) {
    std::vector<bool> drop(s.m(), false);
    bool any = false;
    if (t_.loopless) {
      for (int i = 0; i < s.m(); ++i) {
        if (s.arcs[i].tail == s.arcs[i].head) drop[i] = any = true;
      }
    }
    if (t_.no_parallel) {
      // Parallel arcs are never special, and all but one must go.
      std::vector<std::pair<std::pair<int, int>, int>> keyed;
      for (int i = 0; i < s.m(); ++i) {
        if (!drop[i]) keyed.push_back({{s.arcs[i].tail, s.arcs[i].head}, i});
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t j = 1; j < keyed.size(); ++j) {
        if (keyed[j].first == keyed[j - 1].first) {
          drop[keyed[j].second] = any = true;
        }
      }
    }
    if (t_.strong) {
      // Contraction never puts an arc on a circuit, so arcs between strong
      // components stay useless.
      int count = 0;
      std::vector<int> comp = components(s, count);
      for (int i = 0; i < s.m(); ++i) {
        if (comp[s.arcs[i].tail] != comp[s.arcs[i].head]) drop[i] = any = true;
      }
    }
    if (any) drop_arcs(s, drop, log);
    if (t_.no_isolated) {
      std::vector<bool> isolated(s.n(), true);
      bool found = false;
      for (const SArc& a : s.arcs) isolated[a.tail] = isolated[a.head] = false;
      for (int v = 0; v < s.n(); ++v) found = found || isolated[v];
      if (found) drop_vertices(s, isolated, log);
    }
  }
};

MinorWitness build_witness(const Digraph& host, const State& final_state,
                           const std::vector<Op>& log) {
  const int n = host.num_vertices();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> deleted(n, false);
  std::vector<ArcId> contracted;
  for (const Op& op : log) {
    switch (op.kind) {
      case Op::kContract: {
        const Arc& a = host.arc(op.id);
        parent[find(a.head)] = find(a.tail);
        contracted.push_back(op.id);
        break;
      }
      case Op::kDeleteVertex:
        deleted[op.id] = true;
        break;
      case Op::kDeleteArc:
        break;
    }
  }
  MinorWitness w;
  for (int v = 0; v < n; ++v) {
    if (!deleted[find(v)]) w.kept_vertices.push_back(v);
  }
  for (const SArc& a : final_state.arcs) w.kept_arcs.push_back(a.id);
  for (ArcId a : contracted) {
    if (deleted[find(host.arc(a).tail)]) continue;
    w.kept_arcs.push_back(a);
    w.contractions.push_back(a);
  }
  std::sort(w.kept_arcs.begin(), w.kept_arcs.end());
  w.image = replay(host, w);
  return w;
}

// Final state of a successful search, rebuilt by applying the log.
State apply_log(const Digraph& host, const std::vector<Op>& log) {
  State s;
  for (int v = 0; v < host.num_vertices(); ++v) s.label.push_back(v);
  for (ArcId a = 0; a < host.num_arcs(); ++a) {
    s.arcs.push_back({host.arc(a).tail, host.arc(a).head, a});
  }
  std::vector<Op> scratch;
  for (const Op& op : log) {
    switch (op.kind) {
      case Op::kDeleteArc: {
        std::vector<bool> drop(s.m());
        for (int i = 0; i < s.m(); ++i) drop[i] = s.arcs[i].id == op.id;
        drop_arcs(s, drop, scratch);
        break;
      }
      case Op::kDeleteVertex: {
        std::vector<bool> drop(s.n());
        for (int v = 0; v < s.n(); ++v) drop[v] = s.label[v] == op.id;
        drop_vertices(s, drop, scratch);
        break;
      }
      case Op::kContract: {
        for (int i = 0; i < s.m(); ++i) {
          if (s.arcs[i].id == op.id) {
            s = contract(s, i);
            break;
          }
        }
        break;
      }
    }
  }
  return s;
}

}  // namespace

bool is_special(const Digraph& d, ArcId e) {
  const Arc& a = d.arc(e);
  if (a.is_loop()) return false;
  return d.in_degree(a.head) == 1 || d.out_degree(a.tail) == 1;
}

std::vector<ArcId> special_arcs(const Digraph& d) {
  std::vector<ArcId> out;
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    if (is_special(d, a)) out.push_back(a);
  }
  return out;
}

Digraph contract_special(const Digraph& d, ArcId e) {
  const Arc& c = d.arc(e);
  if (c.is_loop()) throw PreconditionError("cannot contract loop " + c.name);
  if (!is_special(d, e)) {
    throw PreconditionError("arc " + c.name + " is not special");
  }
  Digraph out;
  std::vector<VertexId> map(d.num_vertices(), -1);
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    if (v != c.head) map[v] = out.add_vertex(d.vertex_name(v));
  }
  map[c.head] = map[c.tail];
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    if (a == e) continue;
    const Arc& x = d.arc(a);
    out.add_arc(x.name, map[x.tail], map[x.head]);
  }
  return out;
}

Digraph replay(const Digraph& host, const MinorWitness& w) {
  std::vector<bool> keep_v(host.num_vertices(), false);
  std::vector<bool> keep_a(host.num_arcs(), false);
  for (VertexId v : w.kept_vertices) keep_v[v] = true;
  for (ArcId a : w.kept_arcs) keep_a[a] = true;
  Digraph cur = host.subdigraph(keep_v, keep_a);
  for (ArcId a : w.contractions) {
    auto id = cur.find_arc(host.arc(a).name);
    if (!id) {
      throw PreconditionError("contracted arc " + host.arc(a).name +
                              " is not in the kept subdigraph");
    }
    cur = contract_special(cur, *id);
  }
  return cur;
}

std::optional<MinorWitness> is_minor(const Digraph& target,
                                     const Digraph& host,
                                     const MinorOptions& opts) {
  if (host.num_vertices() > kCanonicalVertexLimit) {
    throw PreconditionError("minor search limited to " +
                            std::to_string(kCanonicalVertexLimit) +
                            " host vertices");
  }
  if (target.num_vertices() > host.num_vertices() ||
      target.num_arcs() > host.num_arcs()) {
    return std::nullopt;
  }
  TargetInfo info = describe(target);
  Budget budget(opts.budget);
  MinorSearch search(info, budget);
  State start;
  for (int v = 0; v < host.num_vertices(); ++v) start.label.push_back(v);
  for (ArcId a = 0; a < host.num_arcs(); ++a) {
    start.arcs.push_back({host.arc(a).tail, host.arc(a).head, a});
  }
  if (!search.search(std::move(start))) return std::nullopt;
  MinorWitness w = build_witness(host, apply_log(host, search.log), search.log);
  if (canonical_form(w.image) != info.key) {
    throw std::logic_error("minor witness does not replay to the target");
  }
  return w;
}

Digraph odd_double_circuit(int k) {
  if (k < 3 || k % 2 == 0) {
    throw PreconditionError("odd double circuit needs odd k >= 3");
  }
  Digraph d;
  for (int i = 0; i < k; ++i) d.add_vertex(std::to_string(i));
  for (int i = 0; i < k; ++i) {
    d.add_arc("f" + std::to_string(i), i, (i + 1) % k);
    d.add_arc("b" + std::to_string(i), (i + 1) % k, i);
  }
  return d;
}

Digraph f7() {
  static const Digraph cached = [] {
    BipartiteGraph h = heawood();
    MatchingList pms = perfect_matchings(h);
    return dgm(h, pms.matchings.front());
  }();
  return cached;
}

std::optional<Obstruction> find_obstruction(const Digraph& d,
                                            const MinorOptions& opts) {
  if (is_acyclic(d)) return std::nullopt;
  for (int k = 3; k <= d.num_vertices(); k += 2) {
    if (auto w = is_minor(odd_double_circuit(k), d, opts)) {
      return Obstruction{ObstructionKind::kOddDoubleCircuit, k, std::move(*w)};
    }
  }
  if (d.num_vertices() >= 7) {
    if (auto w = is_minor(f7(), d, opts)) {
      return Obstruction{ObstructionKind::kF7, 7, std::move(*w)};
    }
  }
  return std::nullopt;
}

nlohmann::json witness_to_json(const Digraph& host, const MinorWitness& w) {
  nlohmann::json j;
  j["kept_vertices"] = nlohmann::json::array();
  for (VertexId v : w.kept_vertices) {
    j["kept_vertices"].push_back(host.vertex_name(v));
  }
  j["kept_arcs"] = nlohmann::json::array();
  for (ArcId a : w.kept_arcs) j["kept_arcs"].push_back(host.arc(a).name);
  j["contractions"] = nlohmann::json::array();
  for (ArcId a : w.contractions) j["contractions"].push_back(host.arc(a).name);
  j["image"] = digraph_to_json(w.image);
  return j;
}

nlohmann::json obstruction_to_json(const Digraph& host, const Obstruction& o) {
  nlohmann::json j;
  if (o.kind == ObstructionKind::kF7) {
    j["kind"] = "F7";
  } else {
    j["kind"] = "odd_double_circuit";
    j["k"] = o.k;
  }
  j["witness"] = witness_to_json(host, o.witness);
  return j;
}

std::size_t minor_cache_size() { return failure_cache().size(); }
void clear_minor_cache() { failure_cache().clear(); }

}  // namespace circuitpack
