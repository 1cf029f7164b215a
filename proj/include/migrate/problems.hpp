#ifndef MIGRATE_PROBLEMS_HPP
#define MIGRATE_PROBLEMS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "migrate/error.hpp"
#include "migrate/model.hpp"
#include "migrate/rational.hpp"

namespace migrate {

// Problem kinds ---------------------------------------------------------------

struct SubsetSumKind {
  Amount capacity = 0;
  bool operator==(SubsetSumKind const&) const = default;
};

struct KnapsackKind {
  Amount capacity = 0;
  bool operator==(KnapsackKind const&) const = default;
};

struct VectorKnapsackKind {
  std::vector<Amount> capacity;
  bool operator==(VectorKnapsackKind const&) const = default;
};

struct GraphMisKind {
  bool weighted = false;
  bool operator==(GraphMisKind const&) const = default;
};

struct UnitDiskKind {
  bool operator==(UnitDiskKind const&) const = default;
};

struct MultipleKnapsackKind {
  std::vector<Amount> capacities;
  bool operator==(MultipleKnapsackKind const&) const = default;
};

using ProblemKind = std::variant<SubsetSumKind, KnapsackKind, VectorKnapsackKind, GraphMisKind, UnitDiskKind,
                                 MultipleKnapsackKind>;

inline bool is_multiple_knapsack(ProblemKind const& kind) {
  return std::holds_alternative<MultipleKnapsackKind>(kind);
}

inline void validate_kind(ProblemKind const& kind) {
  auto positive = [](Amount c) {
    if (c <= 0) throw Error(ErrorCode::PayloadMismatch, "capacities must be positive");
  };
  std::visit(
      [&](auto const& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, SubsetSumKind> || std::is_same_v<K, KnapsackKind>) {
          positive(k.capacity);
        } else if constexpr (std::is_same_v<K, VectorKnapsackKind>) {
          if (k.capacity.empty()) throw Error(ErrorCode::PayloadMismatch, "dimension must be >= 1");
          std::ranges::for_each(k.capacity, positive);
        } else if constexpr (std::is_same_v<K, MultipleKnapsackKind>) {
          if (k.capacities.empty()) throw Error(ErrorCode::PayloadMismatch, "need at least one knapsack");
          std::ranges::for_each(k.capacities, positive);
        }
      },
      kind);
}

inline nlohmann::ordered_json kind_to_json(ProblemKind const& kind) {
  return std::visit(
      [](auto const& k) -> nlohmann::ordered_json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, SubsetSumKind>) return {{"kind", "subsetsum"}, {"C", k.capacity}};
        if constexpr (std::is_same_v<K, KnapsackKind>) return {{"kind", "knapsack"}, {"C", k.capacity}};
        if constexpr (std::is_same_v<K, VectorKnapsackKind>) return {{"kind", "dknapsack"}, {"C", k.capacity}};
        if constexpr (std::is_same_v<K, GraphMisKind>) return {{"kind", "mis"}, {"weighted", k.weighted}};
        if constexpr (std::is_same_v<K, UnitDiskKind>) return {{"kind", "mds"}};
        if constexpr (std::is_same_v<K, MultipleKnapsackKind>) {
          return {{"kind", "mkp"}, {"capacities", k.capacities}};
        }
      },
      kind);
}

template <typename Json>
ProblemKind kind_from_json(Json const& j) {
  try {
    auto name = j.at("kind").template get<std::string>();
    ProblemKind kind;
    if (name == "subsetsum") {
      kind = SubsetSumKind{j.at("C").template get<Amount>()};
    } else if (name == "knapsack") {
      kind = KnapsackKind{j.at("C").template get<Amount>()};
    } else if (name == "dknapsack") {
      kind = VectorKnapsackKind{j.at("C").template get<std::vector<Amount>>()};
    } else if (name == "mis") {
      kind = GraphMisKind{j.value("weighted", false)};
    } else if (name == "mds") {
      kind = UnitDiskKind{};
    } else if (name == "mkp") {
      kind = MultipleKnapsackKind{j.at("capacities").template get<std::vector<Amount>>()};
    } else {
      throw Error(ErrorCode::ParseError, "unknown problem kind '" + name + "'");
    }
    validate_kind(kind);
    return kind;
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::ParseError, std::string("problem declaration: ") + e.what());
  }
}

/// Checks that an arriving object's payload matches the problem. Graph
/// neighbours must reference nodes present before the arrival.
inline void validate_object(ProblemKind const& kind, ChoosingObject const& object, InstanceState const& before) {
  auto mismatch = [&](std::string const& why) {
    throw Error(ErrorCode::PayloadMismatch, "object '" + object.id + "': " + why);
  };
  if (object.profit < 0) mismatch("negative profit");
  std::visit(
      [&](auto const& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, SubsetSumKind>) {
          auto const* s = std::get_if<SizePayload>(&object.payload);
          if (!s) mismatch("subset sum items need a size");
          if (s->size != object.profit) mismatch("size must equal profit");
        } else if constexpr (std::is_same_v<K, KnapsackKind> || std::is_same_v<K, MultipleKnapsackKind>) {
          auto w = weight_of(object);
          if (!w) mismatch("knapsack items need a weight");
          if (*w < 0) mismatch("negative weight");
        } else if constexpr (std::is_same_v<K, VectorKnapsackKind>) {
          auto const* v = std::get_if<VectorPayload>(&object.payload);
          if (!v || v->weights.size() != k.capacity.size()) mismatch("weight vector has wrong dimension");
          if (std::ranges::any_of(v->weights, [](Amount w) { return w < 0; })) mismatch("negative weight");
        } else if constexpr (std::is_same_v<K, GraphMisKind>) {
          auto const* nb = std::get_if<NeighborPayload>(&object.payload);
          if (!nb) mismatch("graph nodes need a neighbour list");
          if (!k.weighted && object.profit != 1) mismatch("unweighted nodes have profit 1");
          for (auto const& n : nb->neighbors) {
            if (n == object.id || !before.contains(n)) mismatch("neighbour '" + n + "' is not present");
          }
        } else if constexpr (std::is_same_v<K, UnitDiskKind>) {
          if (!std::holds_alternative<DiskPayload>(object.payload)) mismatch("disks need a center");
        }
      },
      kind);
}

// Oracle limits -------------------------------------------------------------

struct OracleLimits {
  std::size_t enumeration_n = 24;
  std::int64_t dp_cells = 10'000'000;
  std::size_t mkp_n = 14;
  std::size_t mkp_m = 3;

  bool operator==(OracleLimits const&) const = default;

  /// Overrides from MIGRATE_BENCH_ORACLE_LIMIT: either a bare integer (the
  /// enumeration cap) or comma-separated `enum=..,dp=..,mkp_n=..,mkp_m=..`.
  static OracleLimits from_env() { return from_env(OracleLimits{}); }
  static OracleLimits from_env(OracleLimits base) {
    char const* raw = std::getenv("MIGRATE_BENCH_ORACLE_LIMIT");
    if (raw == nullptr || *raw == '\0') return base;
    return parse(raw, base);
  }

  static OracleLimits parse(std::string_view spec) { return parse(spec, OracleLimits{}); }
  static OracleLimits parse(std::string_view spec, OracleLimits base) {
    auto number = [&](std::string_view text) {
      return detail::parse_int(text, spec);
    };
    if (spec.find('=') == std::string_view::npos) {
      base.enumeration_n = static_cast<std::size_t>(number(spec));
      return base;
    }
    while (!spec.empty()) {
      auto comma = spec.find(',');
      auto item = spec.substr(0, comma);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "bad oracle limit entry");
      auto key = item.substr(0, eq);
      auto value = number(item.substr(eq + 1));
      if (key == "enum") base.enumeration_n = static_cast<std::size_t>(value);
      else if (key == "dp") base.dp_cells = value;
      else if (key == "mkp_n") base.mkp_n = static_cast<std::size_t>(value);
      else if (key == "mkp_m") base.mkp_m = static_cast<std::size_t>(value);
      else throw Error(ErrorCode::ParseError, "unknown oracle limit '" + std::string(key) + "'");
      spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    }
    return base;
  }
};

// Feasibility ----------------------------------------------------------------

namespace detail {

inline bool disks_conflict(DiskPayload const& a, DiskPayload const& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy < Rational(4);
}

inline bool nodes_adjacent(ChoosingObject const& a, ChoosingObject const& b) {
  auto lists = [](ChoosingObject const& from, ObjectId const& to) {
    auto const* nb = std::get_if<NeighborPayload>(&from.payload);
    return nb && std::ranges::find(nb->neighbors, to) != nb->neighbors.end();
  };
  return lists(a, b.id) || lists(b, a.id);
}

inline std::vector<Amount> weight_vector(ProblemKind const& kind, ChoosingObject const& object) {
  if (std::holds_alternative<VectorKnapsackKind>(kind)) {
    auto const* v = std::get_if<VectorPayload>(&object.payload);
    if (!v) throw Error(ErrorCode::PayloadMismatch, "object '" + object.id + "' has no weight vector");
    return v->weights;
  }
  auto w = weight_of(object);
  if (!w) throw Error(ErrorCode::PayloadMismatch, "object '" + object.id + "' has no weight");
  return {*w};
}

inline std::vector<Amount> capacity_vector(ProblemKind const& kind) {
  if (auto const* k = std::get_if<SubsetSumKind>(&kind)) return {k->capacity};
  if (auto const* k = std::get_if<KnapsackKind>(&kind)) return {k->capacity};
  if (auto const* k = std::get_if<VectorKnapsackKind>(&kind)) return k->capacity;
  return {};
}

inline bool is_graph_kind(ProblemKind const& kind) {
  return std::holds_alternative<GraphMisKind>(kind) || std::holds_alternative<UnitDiskKind>(kind);
}

inline bool conflict(ProblemKind const& kind, ChoosingObject const& a, ChoosingObject const& b) {
  if (std::holds_alternative<GraphMisKind>(kind)) return nodes_adjacent(a, b);
  auto const* da = std::get_if<DiskPayload>(&a.payload);
  auto const* db = std::get_if<DiskPayload>(&b.payload);
  if (!da || !db) throw Error(ErrorCode::PayloadMismatch, "disk objects need centers");
  return disks_conflict(*da, *db);
}

}  // namespace detail

/// Set feasibility for the choosing kinds. MultipleKnapsack solutions are
/// m-tuples; see feasible_packing.
inline bool feasible(ProblemKind const& kind, InstanceState const& instance, SolutionSet const& s) {
  if (is_multiple_knapsack(kind)) {
    throw Error(ErrorCode::PayloadMismatch, "multiple knapsack solutions are packings");
  }
  std::vector<ChoosingObject const*> members;
  members.reserve(s.size());
  for (auto const& id : s) members.push_back(&instance.at(id));

  if (detail::is_graph_kind(kind)) {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (detail::conflict(kind, *members[i], *members[j])) return false;
    return true;
  }
  auto cap = detail::capacity_vector(kind);
  std::vector<Amount> load(cap.size(), 0);
  for (auto const* m : members) {
    auto w = detail::weight_vector(kind, *m);
    if (w.size() != cap.size()) throw Error(ErrorCode::PayloadMismatch, "weight dimension mismatch");
    for (std::size_t d = 0; d < cap.size(); ++d) load[d] += w[d];
  }
  for (std::size_t d = 0; d < cap.size(); ++d)
    if (load[d] > cap[d]) return false;
  return true;
}

// Exact oracles --------------------------------------------------------------

struct OptResult {
  SolutionSet solution;
  Amount profit = 0;
};

/// Indexed view of a choosing instance for the enumeration oracle. Items are
/// in ascending id order.
struct EnumerationModel {
  std::vector<ObjectId> ids;
  std::vector<Amount> profit;
  std::vector<std::vector<Amount>> weights;
  std::vector<Amount> capacity;
  std::vector<std::uint64_t> conflicts;
};

inline EnumerationModel build_enumeration_model(ProblemKind const& kind, InstanceState const& instance) {
  EnumerationModel model;
  std::vector<ChoosingObject const*> items;
  for (auto const& [id, obj] : instance.objects) {
    model.ids.push_back(id);
    model.profit.push_back(obj.profit);
    items.push_back(&obj);
  }
  auto n = items.size();
  if (detail::is_graph_kind(kind)) {
    if (n > 64) throw Error(ErrorCode::OracleLimitExceeded, "graph enumeration is limited to 64 nodes");
    model.conflicts.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (detail::conflict(kind, *items[i], *items[j])) {
          model.conflicts[i] |= std::uint64_t{1} << j;
          model.conflicts[j] |= std::uint64_t{1} << i;
        }
  } else {
    model.capacity = detail::capacity_vector(kind);
    for (auto const* item : items) model.weights.push_back(detail::weight_vector(kind, *item));
  }
  return model;
}

/// Exact optimum by pre-order subset enumeration. Sets are visited in
/// lexicographic order of their sorted ids and only strict improvements are
/// kept, so ties resolve to the lexicographically smallest optimal set.
inline OptResult enumerate_optimum(EnumerationModel const& model) {
  auto const n = model.ids.size();
  std::vector<Amount> suffix(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] + model.profit[k];

  std::vector<Amount> load(model.capacity.size(), 0);
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best_set;
  Amount best = 0;
  std::uint64_t members = 0;
  bool const graph = !model.conflicts.empty();

  auto fits = [&](std::size_t x) {
    if (graph) return (model.conflicts[x] & members) == 0;
    for (std::size_t d = 0; d < load.size(); ++d)
      if (load[d] + model.weights[x][d] > model.capacity[d]) return false;
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t from, Amount current) -> void {
    for (std::size_t x = from; x < n; ++x) {
      if (current + suffix[x] <= best) break;
      if (!fits(x)) continue;
      chosen.push_back(x);
      if (graph) members |= std::uint64_t{1} << x;
      else
        for (std::size_t d = 0; d < load.size(); ++d) load[d] += model.weights[x][d];
      Amount next = current + model.profit[x];
      if (next > best) {
        best = next;
        best_set = chosen;
      }
      self(self, x + 1, next);
      if (graph) members &= ~(std::uint64_t{1} << x);
      else
        for (std::size_t d = 0; d < load.size(); ++d) load[d] -= model.weights[x][d];
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);

  OptResult result;
  result.profit = best;
  for (auto i : best_set) result.solution.insert(model.ids[i]);
  return result;
}

/// Exact 0/1 knapsack by capacity DP with lexicographically smallest
/// reconstruction (same tie rule as enumerate_optimum).
inline OptResult knapsack_dp(std::vector<ObjectId> const& ids, std::vector<Amount> const& weight,
                             std::vector<Amount> const& profit, Amount capacity) {
  auto const n = ids.size();
  auto const width = static_cast<std::size_t>(capacity) + 1;
  // best[k][c]: max profit from items k..n-1 with capacity c.
  std::vector<Amount> best((n + 1) * width, 0);
  auto at = [&](std::size_t k, Amount c) -> Amount& { return best[k * width + static_cast<std::size_t>(c)]; };
  for (std::size_t k = n; k-- > 0;) {
    for (Amount c = 0; c <= capacity; ++c) {
      Amount value = at(k + 1, c);
      if (weight[k] <= c) value = std::max(value, profit[k] + at(k + 1, c - weight[k]));
      at(k, c) = value;
    }
  }
  OptResult result;
  result.profit = at(0, capacity);
  Amount need = result.profit;
  Amount room = capacity;
  for (std::size_t k = 0; k < n && need > 0; ++k) {
    if (weight[k] <= room && profit[k] + at(k + 1, room - weight[k]) == need) {
      result.solution.insert(ids[k]);
      need -= profit[k];
      room -= weight[k];
    }
  }
  return result;
}

/// Optimal solution of a choosing instance at desk scale.
inline OptResult opt_oracle(ProblemKind const& kind, InstanceState const& instance,
                            OracleLimits const& limits = OracleLimits{}) {
  if (is_multiple_knapsack(kind)) {
    throw Error(ErrorCode::PayloadMismatch, "use opt_packing for multiple knapsack");
  }
  auto const n = instance.objects.size();
  if (n == 0) return {};
  auto const* ss = std::get_if<SubsetSumKind>(&kind);
  auto const* ks = std::get_if<KnapsackKind>(&kind);
  if (ss || ks) {
    Amount capacity = ss ? ss->capacity : ks->capacity;
    if (static_cast<__int128>(n) * (capacity + 1) <= limits.dp_cells) {
      std::vector<ObjectId> ids;
      std::vector<Amount> weight;
      std::vector<Amount> profit;
      for (auto const& [id, obj] : instance.objects) {
        ids.push_back(id);
        weight.push_back(detail::weight_vector(kind, obj)[0]);
        profit.push_back(obj.profit);
      }
      return knapsack_dp(ids, weight, profit, capacity);
    }
  }
  if (n > limits.enumeration_n) {
    throw Error(ErrorCode::OracleLimitExceeded,
                std::to_string(n) + " objects exceed the enumeration cap " + std::to_string(limits.enumeration_n));
  }
  return enumerate_optimum(build_enumeration_model(kind, instance));
}

// Multiple knapsack ------------------------------------------------------------

/// One id-set per knapsack.
using Packing = std::vector<SolutionSet>;

inline SolutionSet packed_items(Packing const& packing) {
  SolutionSet all;
  for (auto const& s : packing) all.insert(s.begin(), s.end());
  return all;
}

inline Amount packing_profit(Packing const& packing, ObjectTable const& objects) {
  return profit_of(packed_items(packing), objects);
}

inline bool feasible_packing(MultipleKnapsackKind const& kind, InstanceState const& instance,
                             Packing const& packing) {
  if (packing.size() != kind.capacities.size()) return false;
  SolutionSet seen;
  for (std::size_t j = 0; j < packing.size(); ++j) {
    Amount load = 0;
    for (auto const& id : packing[j]) {
      if (!seen.insert(id).second) return false;
      auto w = weight_of(instance.at(id));
      if (!w) throw Error(ErrorCode::PayloadMismatch, "object '" + id + "' has no weight");
      load += *w;
    }
    if (load > kind.capacities[j]) return false;
  }
  return true;
}

struct PackingResult {
  Packing packing;
  Amount profit = 0;
};

/// Exact multiple-knapsack optimum by assignment search. Items are decided in
/// ascending id order, knapsacks tried in index order before skipping; the
/// first optimum met in that order is returned.
inline PackingResult opt_packing(MultipleKnapsackKind const& kind, InstanceState const& instance,
                                 OracleLimits const& limits = OracleLimits{}) {
  auto const m = kind.capacities.size();
  auto const n = instance.objects.size();
  if (n > limits.mkp_n || m > limits.mkp_m) {
    throw Error(ErrorCode::OracleLimitExceeded, "multiple knapsack oracle limited to n<=" +
                                                    std::to_string(limits.mkp_n) + ", m<=" +
                                                    std::to_string(limits.mkp_m));
  }
  std::vector<ObjectId> ids;
  std::vector<Amount> weight;
  std::vector<Amount> profit;
  for (auto const& [id, obj] : instance.objects) {
    auto w = weight_of(obj);
    if (!w) throw Error(ErrorCode::PayloadMismatch, "object '" + id + "' has no weight");
    ids.push_back(id);
    weight.push_back(*w);
    profit.push_back(obj.profit);
  }
  // Fractional bound over the pooled residual capacity, items by density.
  std::vector<std::size_t> by_density(n);
  std::iota(by_density.begin(), by_density.end(), std::size_t{0});
  std::ranges::sort(by_density, [&](std::size_t a, std::size_t b) {
    return static_cast<__int128>(profit[a]) * weight[b] > static_cast<__int128>(profit[b]) * weight[a];
  });

  std::vector<Amount> load(m, 0);
  std::vector<int> assign(n, -1);
  std::vector<int> best_assign(n, -1);
  Amount best = 0;

  auto bound = [&](std::size_t from) {
    Amount room = 0;
    Amount largest = 0;
    for (std::size_t j = 0; j < m; ++j) {
      room += kind.capacities[j] - load[j];
      largest = std::max(largest, kind.capacities[j] - load[j]);
    }
    double extra = 0;
    for (auto i : by_density) {
      if (i < from || weight[i] > largest) continue;
      if (weight[i] <= room) {
        room -= weight[i];
        extra += static_cast<double>(profit[i]);
      } else {
        extra += static_cast<double>(profit[i]) * static_cast<double>(room) / static_cast<double>(weight[i]);
        break;
      }
    }
    return extra;
  };

  auto dfs = [&](auto&& self, std::size_t k, Amount current) -> void {
    if (current > best) {
      best = current;
      best_assign = assign;
    }
    if (k == n) return;
    if (static_cast<double>(current) + bound(k) < static_cast<double>(best) + 0.5) return;
    for (std::size_t j = 0; j < m; ++j) {
      if (load[j] + weight[k] > kind.capacities[j]) continue;
      bool duplicate = false;
      for (std::size_t q = 0; q < j && !duplicate; ++q)
        duplicate = kind.capacities[q] == kind.capacities[j] && load[q] == load[j];
      if (duplicate) continue;
      load[j] += weight[k];
      assign[k] = static_cast<int>(j);
      self(self, k + 1, current + profit[k]);
      assign[k] = -1;
      load[j] -= weight[k];
    }
    self(self, k + 1, current);
  };
  dfs(dfs, 0, 0);

  PackingResult result;
  result.packing.assign(m, {});
  result.profit = best;
  for (std::size_t i = 0; i < n; ++i)
    if (best_assign[i] >= 0) result.packing[static_cast<std::size_t>(best_assign[i])].insert(ids[i]);
  return result;
}

// FPTAS ------------------------------------------------------------------------

/// Profit-scaling knapsack FPTAS: profit >= (1 - eps) * OPT. Items heavier
/// than the capacity are ignored. The scale factor is max(1, eps*pmax/n).
inline SolutionSet knapsack_fptas(InstanceState const& instance, Amount capacity, Rational const& eps) {
  require_unit_epsilon(eps);
  std::vector<ObjectId> ids;
  std::vector<Amount> weight;
  std::vector<Amount> profit;
  for (auto const& [id, obj] : instance.objects) {
    auto w = weight_of(obj);
    if (!w) throw Error(ErrorCode::PayloadMismatch, "object '" + id + "' has no weight");
    if (*w > capacity || obj.profit <= 0) continue;
    ids.push_back(id);
    weight.push_back(*w);
    profit.push_back(obj.profit);
  }
  auto const n = ids.size();
  if (n == 0) return {};
  Amount pmax = *std::ranges::max_element(profit);

  // p' = floor(p / K) with K = eps * pmax / n, unless K <= 1.
  auto const scale_num = static_cast<__int128>(eps.numerator()) * pmax;
  auto const scale_den = static_cast<__int128>(eps.denominator()) * static_cast<__int128>(n);
  bool const exact = scale_num <= scale_den;
  std::vector<Amount> scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = exact ? profit[i] : static_cast<Amount>(static_cast<__int128>(profit[i]) * scale_den / scale_num);
  }
  Amount total = std::accumulate(scaled.begin(), scaled.end(), Amount{0});
  auto const width = static_cast<std::size_t>(total) + 1;
  constexpr Amount kUnreachable = std::numeric_limits<Amount>::max();

  std::vector<Amount> min_weight(width, kUnreachable);
  std::vector<std::uint8_t> take(n * width, 0);
  min_weight[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto const p = scaled[i];
    if (p == 0) continue;
    for (Amount q = total; q >= p; --q) {
      auto prev = min_weight[static_cast<std::size_t>(q - p)];
      if (prev == kUnreachable) continue;
      if (prev + weight[i] < min_weight[static_cast<std::size_t>(q)]) {
        min_weight[static_cast<std::size_t>(q)] = prev + weight[i];
        take[i * width + static_cast<std::size_t>(q)] = 1;
      }
    }
  }
  Amount q = total;
  while (q > 0 && min_weight[static_cast<std::size_t>(q)] > capacity) --q;

  SolutionSet solution;
  for (std::size_t i = n; i-- > 0 && q > 0;) {
    if (take[i * width + static_cast<std::size_t>(q)]) {
      solution.insert(ids[i]);
      q -= scaled[i];
    }
  }
  return solution;
}

// Hereditary check -------------------------------------------------------------

/// True iff every subset of `s` satisfies `is_feasible`. Exhaustive up to 12
/// members, otherwise 4096 seeded random subsets.
template <typename Feasible>
bool verify_hereditary_with(Feasible&& is_feasible, SolutionSet const& s) {
  std::vector<ObjectId> members(s.begin(), s.end());
  auto const n = members.size();
  auto subset = [&](std::uint64_t mask) {
    SolutionSet sub;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) sub.insert(members[i]);
    return sub;
  };
  if (n <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      if (!is_feasible(subset(mask))) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 4096; ++trial) {
    SolutionSet sub;
    for (auto const& id : members)
      if (coin(rng)) sub.insert(id);
    if (!is_feasible(sub)) return false;
  }
  return true;
}

inline bool verify_hereditary(ProblemKind const& kind, InstanceState const& instance, SolutionSet const& s) {
  return verify_hereditary_with([&](SolutionSet const& sub) { return feasible(kind, instance, sub); }, s);
}

// Rated solvers ----------------------------------------------------------------

/// Offline algorithm with an approximation guarantee `rating`.
struct RatedSolver {
  std::string name;
  Rational rating{1};
  std::function<SolutionSet(ProblemKind const&, InstanceState const&)> solve;
};

inline RatedSolver exact_solver(OracleLimits limits = OracleLimits{}) {
  return {"exact", Rational(1),
          [limits](ProblemKind const& kind, InstanceState const& instance) {
            return opt_oracle(kind, instance, limits).solution;
          }};
}

inline RatedSolver fptas_solver(Rational eps) {
  require_unit_epsilon(eps);
  return {"fptas", Rational(1) - eps, [eps](ProblemKind const& kind, InstanceState const& instance) {
            Amount capacity = 0;
            if (auto const* k = std::get_if<KnapsackKind>(&kind)) capacity = k->capacity;
            else if (auto const* s = std::get_if<SubsetSumKind>(&kind)) capacity = s->capacity;
            else throw Error(ErrorCode::PayloadMismatch, "the FPTAS solves knapsack and subset sum only");
            return knapsack_fptas(instance, capacity, eps);
          }};
}

}  // namespace migrate

#endif  // MIGRATE_PROBLEMS_HPP
