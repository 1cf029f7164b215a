#ifndef MIGRATE_RANDOM_STREAMS_HPP
#define MIGRATE_RANDOM_STREAMS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "migrate/model.hpp"
#include "migrate/problems.hpp"
#include "migrate/stream.hpp"

namespace migrate {

namespace detail {

inline Amount uniform(std::mt19937_64& rng, Amount lo, Amount hi) {
  return std::uniform_int_distribution<Amount>(lo, hi)(rng);
}

/// Dynamic stream over a fixed pool: departures pick a present object, and
/// arrivals pick an absent pool object (new or returning with the same
/// attributes).
inline void random_dynamic_events(ChoosingStream& s, std::vector<ChoosingObject> const& pool, std::size_t length,
                                  double departure_rate, std::mt19937_64& rng) {
  std::vector<std::size_t> present;
  std::vector<std::size_t> absent(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) absent[i] = i;
  std::bernoulli_distribution depart(departure_rate);
  auto take = [&](std::vector<std::size_t>& from) {
    auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<Amount>(from.size()) - 1));
    auto idx = from[k];
    from.erase(from.begin() + static_cast<std::ptrdiff_t>(k));
    return idx;
  };
  for (std::size_t step = 0; step < length; ++step) {
    bool leave = !present.empty() && (absent.empty() || depart(rng));
    if (leave) {
      auto idx = take(present);
      s.remove(pool[idx].id);
      absent.push_back(idx);
    } else {
      auto idx = take(absent);
      s.add(pool[idx]);
      present.push_back(idx);
    }
  }
}

}  // namespace detail

/// Dynamic SubsetSum: at most 18 distinct objects, profits in [1,50], about
/// 30% departures.
inline ChoosingStream random_subsetsum_stream(std::uint64_t seed, std::size_t max_objects = 18,
                                              std::size_t length = 40) {
  std::mt19937_64 rng(seed);
  auto n = static_cast<std::size_t>(detail::uniform(rng, 4, static_cast<Amount>(max_objects)));
  std::vector<ChoosingObject> pool;
  Amount total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Amount size = detail::uniform(rng, 1, 50);
    total += size;
    pool.push_back({"o" + std::to_string(i + 1), size, SizePayload{size}});
  }
  ChoosingStream s;
  s.problem = SubsetSumKind{std::max<Amount>(1, detail::uniform(rng, total / 5, total / 2))};
  detail::random_dynamic_events(s, pool, length, 0.3, rng);
  return s;
}

/// Dynamic 0/1 knapsack with up to `max_objects` objects.
inline ChoosingStream random_knapsack_stream(std::uint64_t seed, std::size_t max_objects = 50,
                                             std::size_t length = 60) {
  std::mt19937_64 rng(seed);
  auto n = static_cast<std::size_t>(detail::uniform(rng, 5, static_cast<Amount>(max_objects)));
  std::vector<ChoosingObject> pool;
  Amount total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Amount w = detail::uniform(rng, 1, 60);
    total += w;
    pool.push_back({"o" + std::to_string(i + 1), detail::uniform(rng, 1, 100), WeightPayload{w}});
  }
  ChoosingStream s;
  s.problem = KnapsackKind{std::max<Amount>(1, detail::uniform(rng, total / 6, total / 3))};
  detail::random_dynamic_events(s, pool, length, 0.2, rng);
  return s;
}

/// Static multiple knapsack: m knapsacks, up to `max_objects` arrivals.
inline ChoosingStream random_mkp_stream(std::uint64_t seed, std::size_t m = 2, std::size_t max_objects = 12) {
  std::mt19937_64 rng(seed);
  auto n = static_cast<std::size_t>(detail::uniform(rng, 3, static_cast<Amount>(max_objects)));
  std::vector<Amount> caps;
  for (std::size_t j = 0; j < m; ++j) caps.push_back(detail::uniform(rng, 10, 40));
  ChoosingStream s;
  s.problem = MultipleKnapsackKind{caps};
  for (std::size_t i = 0; i < n; ++i) {
    Amount w = detail::uniform(rng, 1, 25);
    s.add({"o" + std::to_string(i + 1), detail::uniform(rng, 1, 30), WeightPayload{w}});
  }
  return s;
}

/// Weighted subgraph of a grid (planar) with a random edge-arrival order.
inline EdgeStream random_grid_edge_stream(std::uint64_t seed, std::size_t max_vertices = 14) {
  std::mt19937_64 rng(seed);
  Amount rows = detail::uniform(rng, 2, 4);
  Amount cols = std::max<Amount>(2, static_cast<Amount>(max_vertices) / rows);
  std::vector<std::pair<Amount, Amount>> cells;
  for (Amount r = 0; r < rows; ++r)
    for (Amount c = 0; c < cols; ++c) cells.emplace_back(r, c);
  // Drop a few cells so the graph is a proper grid subgraph.
  std::bernoulli_distribution drop(0.15);
  std::erase_if(cells, [&](auto const&) { return drop(rng); });
  if (cells.size() > max_vertices) cells.resize(max_vertices);

  auto name = [](std::pair<Amount, Amount> const& cell) {
    return "g" + std::to_string(cell.first) + "_" + std::to_string(cell.second);
  };
  EdgeStream s;
  std::set<std::pair<Amount, Amount>> kept(cells.begin(), cells.end());
  for (auto const& cell : cells) s.vertices[name(cell)] = detail::uniform(rng, 1, 20);

  std::vector<std::pair<ObjectId, ObjectId>> edges;
  std::bernoulli_distribution keep(0.85);
  for (auto const& [r, c] : cells) {
    for (auto [dr, dc] : {std::pair<Amount, Amount>{0, 1}, {1, 0}}) {
      std::pair<Amount, Amount> other{r + dr, c + dc};
      if (kept.contains(other) && keep(rng)) edges.emplace_back(name({r, c}), name(other));
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto& [u, v] : edges) s.add(u, v);
  return s;
}

}  // namespace migrate

#endif  // MIGRATE_RANDOM_STREAMS_HPP
