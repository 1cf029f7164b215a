#ifndef MIGRATE_VARIANTS_HPP
#define MIGRATE_VARIANTS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "migrate/error.hpp"
#include "migrate/framework.hpp"
#include "migrate/model.hpp"
#include "migrate/problems.hpp"
#include "migrate/rational.hpp"

namespace migrate {

// Multiple knapsack ------------------------------------------------------------

struct PackingSolver {
  std::string name;
  Rational rating{1};
  std::function<Packing(MultipleKnapsackKind const&, InstanceState const&)> solve;
};

inline PackingSolver exact_packing_solver(OracleLimits limits = OracleLimits{}) {
  return {"exact", Rational(1), [limits](MultipleKnapsackKind const& kind, InstanceState const& instance) {
            return opt_packing(kind, instance, limits).packing;
          }};
}

struct MKState {
  Packing solution;
  Amount reference_profit = 0;
  Amount delta = 0;
  std::int64_t phase_start = 0;
  bool started = false;
  bool operator==(MKState const&) const = default;
};

/// Profit of every item whose assignment changed (entered, left, or switched
/// knapsack), each charged once. `exempt` enters for free.
inline Amount packing_migration_cost(Packing const& from, Packing const& to, ObjectTable const& lookup,
                                     std::optional<ObjectId> const& exempt) {
  auto assignment = [](Packing const& p) {
    std::map<ObjectId, std::size_t> where;
    for (std::size_t j = 0; j < p.size(); ++j)
      for (auto const& id : p[j]) where.emplace(id, j);
    return where;
  };
  auto a = assignment(from);
  auto b = assignment(to);
  Amount cost = 0;
  auto charge = [&](ObjectId const& id) {
    auto it = lookup.find(id);
    if (it == lookup.end()) throw Error(ErrorCode::UnknownId, "no object '" + id + "'");
    cost += it->second.profit;
  };
  for (auto const& [id, j] : a) {
    auto it = b.find(id);
    if (it == b.end() || it->second != j) charge(id);
  }
  for (auto const& [id, j] : b) {
    if (!a.contains(id) && !(exempt && *exempt == id)) charge(id);
  }
  return cost;
}

inline std::pair<MKState, StepResult> mk_step(MKState state, MultipleKnapsackKind const& kind,
                                              InstanceState const& instance, Event const& event, Rational const& eps,
                                              PackingSolver const& offline) {
  require_unit_epsilon(eps);
  auto const* arrival = std::get_if<Arrival>(&event.kind);
  if (arrival == nullptr) {
    throw Error(ErrorCode::UnsupportedEvent, "the multiple knapsack algorithm handles arrivals only");
  }
  if (state.solution.empty()) state.solution.assign(kind.capacities.size(), {});
  InstanceState after = apply_event(instance, event);

  StepResult result;
  result.potential = arrival->object.profit;
  state.delta += arrival->object.profit;
  if (!state.started || exceeds(state.delta, eps, state.reference_profit)) {
    Packing fresh = offline.solve(kind, after);
    result.repacked = true;
    result.cost = packing_migration_cost(state.solution, fresh, after.objects, arrival->object.id);
    state.reference_profit = packing_profit(fresh, after.objects);
    state.solution = std::move(fresh);
    state.delta = 0;
    state.phase_start = event.t;
    state.started = true;
  }
  return {std::move(state), result};
}

// Independent set under edge arrivals --------------------------------------------

using Edge = std::pair<ObjectId, ObjectId>;

inline Edge normalized_edge(ObjectId u, ObjectId v) {
  if (v < u) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

/// Fixed weighted vertex set with edges arriving one per step.
struct EdgeArrivalInstance {
  std::map<ObjectId, Amount> weights;
  std::set<Edge> edges;
  std::int64_t time = 0;

  bool operator==(EdgeArrivalInstance const&) const = default;

  Amount weight(ObjectId const& v) const {
    auto it = weights.find(v);
    if (it == weights.end()) throw Error(ErrorCode::UnknownVertex, "no vertex '" + v + "'");
    return it->second;
  }

  void add_edge(ObjectId const& u, ObjectId const& v) {
    weight(u);
    weight(v);
    if (u == v) throw Error(ErrorCode::DuplicateEdge, "self loop at '" + u + "'");
    if (!edges.insert(normalized_edge(u, v)).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + u + "-" + v + " already present");
    }
    ++time;
  }

  bool independent(SolutionSet const& s) const {
    for (auto const& [u, v] : edges)
      if (s.contains(u) && s.contains(v)) return false;
    for (auto const& id : s) weight(id);
    return true;
  }

  /// The graph as a weighted MIS instance; each edge is listed by its smaller
  /// endpoint.
  InstanceState as_mis_instance() const {
    InstanceState state;
    state.time = time;
    for (auto const& [id, w] : weights) state.objects.emplace(id, ChoosingObject{id, w, NeighborPayload{}});
    for (auto const& [u, v] : edges) {
      std::get<NeighborPayload>(state.objects.at(u).payload).neighbors.push_back(v);
    }
    return state;
  }
};

inline RatedSolver exact_mis_solver(OracleLimits limits = OracleLimits{}) {
  return exact_solver(limits);
}

inline Amount mis_opt(EdgeArrivalInstance const& graph, OracleLimits const& limits = OracleLimits{}) {
  return opt_oracle(GraphMisKind{true}, graph.as_mis_instance(), limits).profit;
}

struct ISState {
  SolutionSet solution;
  Amount reference_weight = 0;
  Amount delta = 0;
  std::int64_t phase_start = 0;
  bool operator==(ISState const&) const = default;
};

inline Amount vertex_weight_sum(SolutionSet const& s, EdgeArrivalInstance const& graph) {
  Amount total = 0;
  for (auto const& id : s) total += graph.weight(id);
  return total;
}

/// Initial solve on the edgeless graph. Initial assignments are free.
inline ISState is_init(EdgeArrivalInstance const& graph, RatedSolver const& offline) {
  ISState state;
  state.solution = offline.solve(GraphMisKind{true}, graph.as_mis_instance());
  state.reference_weight = vertex_weight_sum(state.solution, graph);
  state.phase_start = graph.time;
  return state;
}

inline std::pair<ISState, StepResult> is_edge_step(ISState state, EdgeArrivalInstance const& graph, Edge const& edge,
                                                   Rational const& eps, RatedSolver const& offline) {
  require_unit_epsilon(eps);
  EdgeArrivalInstance after = graph;
  after.add_edge(edge.first, edge.second);
  auto const& [u, v] = edge;
  Amount wu = after.weight(u);
  Amount wv = after.weight(v);

  // Forced removal of the lighter endpoint; equal weights drop the larger id.
  if (state.solution.contains(u) && state.solution.contains(v)) {
    bool drop_u = wu < wv || (wu == wv && u > v);
    state.solution.erase(drop_u ? u : v);
  }

  StepResult result;
  result.potential = std::min(wu, wv);
  state.delta += result.potential;
  if (exceeds(state.delta, eps, state.reference_weight)) {
    SolutionSet fresh = offline.solve(GraphMisKind{true}, after.as_mis_instance());
    result.repacked = true;
    result.cost = phi_cost(state.solution, fresh, after.as_mis_instance().objects, Metric::Profit);
    state.reference_weight = vertex_weight_sum(fresh, after);
    state.solution = std::move(fresh);
    state.delta = 0;
    state.phase_start = after.time;
  }
  return {std::move(state), result};
}

}  // namespace migrate

#endif  // MIGRATE_VARIANTS_HPP
