// Plain exhaustive reference solvers for the tests. Deliberately naive: no
// pruning, no DP, nothing shared with the library's oracles.
#ifndef MIGRATE_TESTS_ORACLES_HPP
#define MIGRATE_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Item {
  std::string id;
  std::int64_t profit = 0;
  std::vector<std::int64_t> weight;  // empty for graph problems
};

struct Best {
  std::int64_t profit = 0;
  std::set<std::string> ids;  // lexicographically smallest optimum
  int optima = 0;
};

inline bool lex_less(std::set<std::string> const& a, std::set<std::string> const& b) {
  return std::vector<std::string>(a.begin(), a.end()) < std::vector<std::string>(b.begin(), b.end());
}

/// Every subset of `items`; `ok` decides feasibility of a bitmask.
template <typename Feasible>
Best brute_force(std::vector<Item> const& items, Feasible&& ok) {
  Best best;
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    if (!ok(mask)) continue;
    std::int64_t p = 0;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < items.size(); ++i)
      if ((mask >> i) & 1U) {
        p += items[i].profit;
        ids.insert(items[i].id);
      }
    if (!found || p > best.profit) {
      best = {p, ids, 1};
      found = true;
    } else if (p == best.profit) {
      ++best.optima;
      if (lex_less(ids, best.ids)) best.ids = ids;
    }
  }
  return best;
}

inline Best knapsack(std::vector<Item> const& items, std::vector<std::int64_t> const& capacity) {
  return brute_force(items, [&](std::uint64_t mask) {
    for (std::size_t d = 0; d < capacity.size(); ++d) {
      std::int64_t load = 0;
      for (std::size_t i = 0; i < items.size(); ++i)
        if ((mask >> i) & 1U) load += items[i].weight[d];
      if (load > capacity[d]) return false;
    }
    return true;
  });
}

inline Best independent_set(std::vector<Item> const& items, std::set<std::pair<std::string, std::string>> const& edges) {
  return brute_force(items, [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j)
        if (((mask >> i) & 1U) && ((mask >> j) & 1U) && edges.contains({items[i].id, items[j].id})) return false;
    return true;
  });
}

/// Multiple knapsack over all (m+1)^n assignments.
inline std::int64_t multiple_knapsack(std::vector<Item> const& items, std::vector<std::int64_t> const& capacities) {
  std::size_t m = capacities.size();
  std::size_t n = items.size();
  std::vector<std::size_t> slot(n, 0);  // 0 = unpacked, k = knapsack k-1
  std::int64_t best = 0;
  while (true) {
    std::vector<std::int64_t> load(m, 0);
    std::int64_t p = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (slot[i] == 0) continue;
      load[slot[i] - 1] += items[i].weight[0];
      ok = load[slot[i] - 1] <= capacities[slot[i] - 1];
      p += items[i].profit;
    }
    if (ok) best = std::max(best, p);
    std::size_t k = 0;
    while (k < n && ++slot[k] > m) slot[k++] = 0;
    if (k == n) break;
  }
  return best;
}

}  // namespace oracle

#endif  // MIGRATE_TESTS_ORACLES_HPP
