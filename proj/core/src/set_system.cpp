#include "circuitpack/set_system.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace circuitpack {
namespace {

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::vector<int>> sets_by_element(const SetSystem& sys) {
  std::vector<std::vector<int>> by(sys.num_elements);
  for (int s = 0; s < static_cast<int>(sys.sets.size()); ++s) {
    for (int e : sys.sets[s]) by[e].push_back(s);
  }
  return by;
}

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

class HittingSearch {
 public:
  HittingSearch(const SetSystem& sys, std::span<const std::int64_t> weights,
                Budget& budget)
      : sys_(sys),
        weights_(weights),
        budget_(budget),
        by_element_(sets_by_element(sys)) {}

  // Cheapest completion of `chosen` that avoids `forbidden`, if one is
  // strictly cheaper than `bound` (total weight, including `chosen`).
  std::optional<std::int64_t> solve(const std::vector<char>& chosen,
                                    const std::vector<char>& forbidden,
                                    std::int64_t bound,
                                    std::vector<int>* best_set) {
    chosen_ = chosen;
    forbidden_ = forbidden;
    hit_.assign(sys_.sets.size(), 0);
    std::int64_t cur = 0;
    for (int e = 0; e < sys_.num_elements; ++e) {
      if (!chosen_[e]) continue;
      cur += weights_[e];
      for (int s : by_element_[e]) ++hit_[s];
    }
    best_ = bound;
    found_ = false;
    best_set_.clear();
    rec(cur);
    if (!found_) return std::nullopt;
    if (best_set) *best_set = best_set_;
    return best_;
  }

 private:
  const SetSystem& sys_;
  std::span<const std::int64_t> weights_;
  Budget& budget_;
  std::vector<std::vector<int>> by_element_;
  std::vector<char> chosen_, forbidden_;
  std::vector<int> hit_;
  std::int64_t best_ = kInfinity;
  bool found_ = false;
  std::vector<int> best_set_;

  void choose(int e, int delta) {
    chosen_[e] = delta > 0;
    for (int s : by_element_[e]) hit_[s] += delta;
  }

  void rec(std::int64_t cur) {
    budget_.tick("hitting set");
    if (cur >= best_) return;
    // Most constrained unhit set.
    int pick = -1, pick_avail = std::numeric_limits<int>::max();
    std::vector<std::pair<int, int>> unhit;  // (available count, set)
    for (int s = 0; s < static_cast<int>(sys_.sets.size()); ++s) {
      if (hit_[s]) continue;
      int avail = 0;
      for (int e : sys_.sets[s]) avail += !forbidden_[e];
      if (avail == 0) return;
      unhit.emplace_back(avail, s);
      if (avail < pick_avail) {
        pick_avail = avail;
        pick = s;
      }
    }
    if (pick < 0) {
      best_ = cur;
      found_ = true;
      best_set_.clear();
      for (int e = 0; e < sys_.num_elements; ++e) {
        if (chosen_[e]) best_set_.push_back(e);
      }
      return;
    }
    // Lower bound: element-disjoint unhit sets each need their own element.
    std::sort(unhit.begin(), unhit.end());
    std::vector<char> marked(sys_.num_elements, 0);
    std::int64_t lower = 0;
    for (auto [avail, s] : unhit) {
      bool disjoint = true;
      std::int64_t cheapest = kInfinity;
      for (int e : sys_.sets[s]) {
        if (forbidden_[e]) continue;
        if (marked[e]) {
          disjoint = false;
          break;
        }
        cheapest = std::min(cheapest, weights_[e]);
      }
      if (!disjoint) continue;
      for (int e : sys_.sets[s]) marked[e] = 1;
      lower += cheapest;
    }
    if (cur + lower >= best_) return;

    std::vector<int> options;
    for (int e : sys_.sets[pick]) {
      if (!forbidden_[e]) options.push_back(e);
    }
    std::stable_sort(options.begin(), options.end(), [&](int x, int y) {
      return weights_[x] < weights_[y];
    });
    // Branch i takes options[i] and excludes options[0..i).
    for (int e : options) {
      choose(e, +1);
      rec(cur + weights_[e]);
      choose(e, -1);
      forbidden_[e] = 1;
    }
    for (int e : options) forbidden_[e] = 0;
  }
};

class PackingSearch {
 public:
  PackingSearch(const SetSystem& sys, std::span<const std::int64_t> capacity,
                Budget& budget, std::optional<std::int64_t> stop_at)
      : sys_(sys),
        cap_(capacity.begin(), capacity.end()),
        budget_(budget),
        stop_at_(stop_at),
        mult_(sys.sets.size(), 0) {}

  Packing run() {
    best_ = -1;
    rec(0, 0);
    return Packing{best_, best_mult_};
  }

 private:
  const SetSystem& sys_;
  std::vector<std::int64_t> cap_;
  Budget& budget_;
  std::optional<std::int64_t> stop_at_;
  std::vector<std::int64_t> mult_;
  std::int64_t best_ = -1;
  std::vector<std::int64_t> best_mult_;
  bool done_ = false;

  bool fits(int s) const {
    for (int e : sys_.sets[s]) {
      if (cap_[e] <= 0) return false;
    }
    return true;
  }

  // Weight (under remaining capacities) of a greedy hitting set of the sets
  // from index `from` on that still fit: no packing of them can be larger.
  std::int64_t upper_bound(int from) const {
    std::vector<int> live;
    for (int s = from; s < static_cast<int>(sys_.sets.size()); ++s) {
      if (fits(s)) live.push_back(s);
    }
    std::int64_t bound = 0;
    std::vector<char> covered(live.size(), 0);
    std::size_t left = live.size();
    std::vector<int> count(sys_.num_elements);
    while (left > 0) {
      std::fill(count.begin(), count.end(), 0);
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (covered[i]) continue;
        for (int e : sys_.sets[live[i]]) ++count[e];
      }
      int pick = -1;
      for (int e = 0; e < sys_.num_elements; ++e) {
        if (count[e] == 0) continue;
        // Maximise sets covered per unit of capacity.
        if (pick < 0 || count[e] * cap_[pick] > count[pick] * cap_[e]) pick = e;
      }
      bound += cap_[pick];
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (covered[i]) continue;
        const auto& set = sys_.sets[live[i]];
        if (std::binary_search(set.begin(), set.end(), pick)) {
          covered[i] = 1;
          --left;
        }
      }
    }
    return bound;
  }

  void rec(int i, std::int64_t cur) {
    if (done_) return;
    budget_.tick("circuit packing");
    if (i == static_cast<int>(sys_.sets.size())) {
      if (cur > best_) {
        best_ = cur;
        best_mult_ = mult_;
        if (stop_at_ && best_ >= *stop_at_) done_ = true;
      }
      return;
    }
    if (cur + upper_bound(i) <= best_) return;
    std::int64_t most = std::numeric_limits<std::int64_t>::max();
    for (int e : sys_.sets[i]) most = std::min(most, cap_[e]);
    for (std::int64_t t = most; t >= 0 && !done_; --t) {
      for (int e : sys_.sets[i]) cap_[e] -= t;
      mult_[i] = t;
      rec(i + 1, cur + t);
      mult_[i] = 0;
      for (int e : sys_.sets[i]) cap_[e] += t;
    }
  }
};

}  // namespace

SetSystem minimal_sets(SetSystem system) {
  auto& sets = system.sets;
  std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<int>> kept;
  for (auto& s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
      return k.size() < s.size() && is_subset(k, s);
    });
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  sets = std::move(kept);
  return system;
}

HittingSet min_hitting_set(const SetSystem& system,
                           std::span<const std::int64_t> weights,
                           Budget& budget) {
  const int n = system.num_elements;
  std::vector<char> chosen(n, 0), forbidden(n, 0);
  for (const auto& s : system.sets) {
    for (int e : s) {
      if (weights[e] == 0) chosen[e] = 1;
    }
  }
  HittingSearch search(system, weights, budget);
  auto optimum = search.solve(chosen, forbidden, kInfinity, nullptr);
  if (!optimum) return {};  // unreachable: taking every element always works

  // Lexicographically least optimal set: commit the smallest element that
  // still admits an optimal completion, everything skipped is forbidden.
  std::int64_t weight = 0;
  for (int e = 0; e < n; ++e) {
    if (chosen[e]) weight += weights[e];
  }
  auto all_hit = [&] {
    for (const auto& s : system.sets) {
      if (std::none_of(s.begin(), s.end(), [&](int e) { return chosen[e]; })) {
        return false;
      }
    }
    return true;
  };
  for (int e = 0; e < n && !all_hit(); ++e) {
    if (chosen[e]) continue;
    chosen[e] = 1;
    if (search.solve(chosen, forbidden, *optimum + 1, nullptr)) {
      weight += weights[e];
    } else {
      chosen[e] = 0;
      forbidden[e] = 1;
    }
  }
  HittingSet out;
  out.weight = weight;
  for (int e = 0; e < n; ++e) {
    if (chosen[e]) out.elements.push_back(e);
  }
  return out;
}

Packing max_packing(const SetSystem& system,
                    std::span<const std::int64_t> capacity, Budget& budget,
                    std::optional<std::int64_t> stop_at) {
  return PackingSearch(system, capacity, budget, stop_at).run();
}

}  // namespace circuitpack
