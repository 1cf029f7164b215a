#include <gtest/gtest.h>

#include "migrate/random_streams.hpp"
#include "migrate/variants.hpp"
#include "oracles.hpp"

using namespace migrate;

namespace {

ChoosingObject w(ObjectId id, Amount weight, Amount profit) { return {std::move(id), profit, WeightPayload{weight}}; }

template <typename F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(code);
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

EdgeArrivalInstance two_vertices() {
  EdgeArrivalInstance g;
  g.weights = {{"u", 5}, {"v", 3}};
  return g;
}

}  // namespace

TEST(MultipleKnapsack, RepacksOnceThresholdIsCrossed) {
  MultipleKnapsackKind kind{{20, 20}};
  InstanceState inst;
  inst.apply(make_arrival(1, w("big", 10, 10)));
  MKState state;
  state.solution = {{"big"}, {}};
  state.reference_profit = 10;
  state.started = true;
  Rational eps(1, 5);
  auto offline = exact_packing_solver();
  std::vector<bool> repacks;
  for (int k = 0; k < 3; ++k) {
    auto e = make_arrival(2 + k, w("s" + std::to_string(k), 1, 1));
    auto [next, r] = mk_step(state, kind, inst, e, eps, offline);
    state = next;
    inst.apply(e);
    repacks.push_back(r.repacked);
  }
  EXPECT_EQ(repacks, (std::vector<bool>{false, false, true}));
  EXPECT_EQ(state.reference_profit, 13);
  EXPECT_EQ(state.delta, 0);
}

TEST(MultipleKnapsack, FrozenOptimum) {
  MultipleKnapsackKind kind{{5, 5}};
  InstanceState inst;
  for (auto id : {"a", "b", "c"}) inst.apply(make_arrival(inst.time + 1, w(id, 5, 5)));
  EXPECT_EQ(opt_packing(kind, inst, OracleLimits{}).profit, 10);
}

TEST(MultipleKnapsack, DeparturesAreRejected) {
  MultipleKnapsackKind kind{{5}};
  InstanceState inst;
  inst.apply(make_arrival(1, w("a", 1, 1)));
  expect_code(ErrorCode::UnsupportedEvent,
              [&] { mk_step(MKState{}, kind, inst, make_departure(2, "a"), Rational(1, 10), exact_packing_solver()); });
}

TEST(MultipleKnapsack, MigrationCountsEachMovedItemOnce) {
  ObjectTable t;
  for (auto [id, p] : {std::pair{"a", 3}, {"b", 4}, {"c", 5}}) t.emplace(id, w(id, 1, p));
  // a switches knapsack, b leaves, c enters as the exempt arrival.
  EXPECT_EQ(packing_migration_cost({{"a", "b"}, {}}, {{}, {"a", "c"}}, t, ObjectId("c")), 7);
  EXPECT_EQ(packing_migration_cost({{"a", "b"}, {}}, {{}, {"a", "c"}}, t, std::nullopt), 12);
  EXPECT_EQ(packing_migration_cost({{"a"}, {"b"}}, {{"a"}, {"b"}}, t, std::nullopt), 0);
}

TEST(MultipleKnapsack, RandomStreamsStayFeasibleAndCompetitive) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto stream = random_mkp_stream(seed + 50, 2, 9);
    auto const& kind = std::get<MultipleKnapsackKind>(stream.problem);
    Rational eps(1, 5);
    auto offline = exact_packing_solver();
    InstanceState inst;
    MKState state;
    for (auto const& e : stream.events) {
      auto [next, r] = mk_step(state, kind, inst, e, eps, offline);
      state = next;
      inst.apply(e);
      ASSERT_TRUE(feasible_packing(kind, inst, state.solution));
      std::vector<oracle::Item> items;
      for (auto const& [id, o] : inst.objects) items.push_back({id, o.profit, {*weight_of(o)}});
      auto opt = oracle::multiple_knapsack(items, kind.capacities);
      EXPECT_TRUE(at_least(packing_profit(state.solution, inst.objects), 1 - eps, opt)) << "seed " << seed;
    }
  }
}

TEST(EdgeArrival, HoldsWithinThreshold) {
  auto g = two_vertices();
  auto state = is_init(g, exact_mis_solver());
  EXPECT_EQ(state.solution, (SolutionSet{"u", "v"}));
  EXPECT_EQ(state.reference_weight, 8);
  auto [next, r] = is_edge_step(state, g, {"u", "v"}, Rational(1, 2), exact_mis_solver());
  EXPECT_FALSE(r.repacked);
  EXPECT_EQ(r.potential, 3);
  EXPECT_EQ(next.solution, (SolutionSet{"u"}));
}

TEST(EdgeArrival, RepacksPastThreshold) {
  auto g = two_vertices();
  auto state = is_init(g, exact_mis_solver());
  auto [next, r] = is_edge_step(state, g, {"u", "v"}, Rational(1, 4), exact_mis_solver());
  EXPECT_TRUE(r.repacked);
  EXPECT_EQ(next.solution, (SolutionSet{"u"}));
  EXPECT_EQ(next.reference_weight, 5);
  EXPECT_EQ(r.cost, 0);
}

TEST(EdgeArrival, TieDropsLargerId) {
  EdgeArrivalInstance g;
  g.weights = {{"p", 4}, {"q", 4}};
  auto state = is_init(g, exact_mis_solver());
  auto [next, r] = is_edge_step(state, g, {"q", "p"}, Rational(9, 10), exact_mis_solver());
  EXPECT_EQ(next.solution, (SolutionSet{"p"}));
}

TEST(EdgeArrival, RejectsBadEdges) {
  auto g = two_vertices();
  expect_code(ErrorCode::UnknownVertex, [&] { g.add_edge("u", "z"); });
  expect_code(ErrorCode::DuplicateEdge, [&] { g.add_edge("u", "u"); });
  g.add_edge("v", "u");
  expect_code(ErrorCode::DuplicateEdge, [&] { g.add_edge("u", "v"); });
  EXPECT_EQ(normalized_edge("v", "u"), (Edge{"u", "v"}));
}

TEST(EdgeArrival, RandomGridsStayIndependentAndCompetitive) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto stream = random_grid_edge_stream(seed + 10, 12);
    EdgeArrivalInstance g;
    g.weights = stream.vertices;
    Rational eps(1, 4);
    auto offline = exact_mis_solver();
    auto state = is_init(g, offline);
    for (auto const& ev : stream.events) {
      Edge e{ev.u, ev.v};
      auto [next, r] = is_edge_step(state, g, e, eps, offline);
      state = next;
      g.add_edge(e.first, e.second);
      ASSERT_TRUE(g.independent(state.solution));
      std::vector<oracle::Item> items;
      for (auto const& [id, wt] : g.weights) items.push_back({id, wt, {}});
      std::set<std::pair<std::string, std::string>> edges;
      for (auto const& [a, b] : g.edges) {
        edges.insert({a, b});
        edges.insert({b, a});
      }
      auto opt = oracle::independent_set(items, edges).profit;
      EXPECT_TRUE(at_least(vertex_weight_sum(state.solution, g), 1 - eps, opt)) << "seed " << seed;
    }
  }
}
