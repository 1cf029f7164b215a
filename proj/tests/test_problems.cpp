#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "migrate/problems.hpp"
#include "oracles.hpp"

using namespace migrate;

namespace {

InstanceState instance_of(std::vector<ChoosingObject> const& objects) {
  InstanceState s;
  for (auto const& o : objects) s.objects.emplace(o.id, o);
  return s;
}

ChoosingObject sized(ObjectId id, Amount s) { return {std::move(id), s, SizePayload{s}}; }
ChoosingObject weighted(ObjectId id, Amount w, Amount p) { return {std::move(id), p, WeightPayload{w}}; }

std::vector<oracle::Item> items_of(InstanceState const& s) {
  std::vector<oracle::Item> out;
  for (auto const& [id, o] : s.objects) {
    oracle::Item it{id, o.profit, {}};
    if (auto w = weight_of(o)) it.weight = {*w};
    if (auto const* v = std::get_if<VectorPayload>(&o.payload)) it.weight = v->weights;
    out.push_back(it);
  }
  return out;
}

template <typename F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(code);
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Feasible, SubsetSumAndGraphExamples) {
  auto s = instance_of({sized("a", 3), sized("b", 5), sized("c", 7)});
  EXPECT_TRUE(feasible(SubsetSumKind{10}, s, {"a", "b"}));
  EXPECT_FALSE(feasible(SubsetSumKind{10}, s, {"a", "b", "c"}));

  auto g = instance_of({{"u", 1, NeighborPayload{}}, {"v", 1, NeighborPayload{{"u"}}}, {"w", 1, NeighborPayload{}}});
  EXPECT_FALSE(feasible(GraphMisKind{false}, g, {"u", "v"}));
  EXPECT_TRUE(feasible(GraphMisKind{false}, g, {"u", "w"}));
}

TEST(Feasible, UnitDisksConflictBelowDistanceTwo) {
  auto d = instance_of({{"p", 1, DiskPayload{Rational(0), Rational(0)}},
                        {"q", 1, DiskPayload{Rational(2), Rational(0)}},
                        {"r", 1, DiskPayload{Rational(1), Rational(1)}}});
  EXPECT_TRUE(feasible(UnitDiskKind{}, d, {"p", "q"}));  // touching is allowed
  EXPECT_FALSE(feasible(UnitDiskKind{}, d, {"p", "r"}));
}

TEST(Oracle, FrozenExamples) {
  auto s = instance_of({sized("a", 3), sized("b", 5), sized("c", 7)});
  auto r = opt_oracle(SubsetSumKind{10}, s);
  EXPECT_EQ(r.profit, 10);
  EXPECT_EQ(r.solution, (SolutionSet{"a", "c"}));

  auto tri = instance_of({{"x", 1, NeighborPayload{}}, {"y", 1, NeighborPayload{{"x"}}},
                          {"z", 1, NeighborPayload{{"x", "y"}}}});
  EXPECT_EQ(opt_oracle(GraphMisKind{false}, tri).profit, 1);

  auto d2 = instance_of({{"a", 4, VectorPayload{{3, 2}}}, {"b", 5, VectorPayload{{2, 3}}}});
  EXPECT_EQ(opt_oracle(VectorKnapsackKind{{4, 4}}, d2).profit, 5);
}

TEST(Oracle, MatchesBruteForceOnRandomKnapsacks) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    std::vector<ChoosingObject> objs;
    int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) {
      // Small profits force many ties, exercising the tie rule.
      objs.push_back(weighted("o" + std::to_string(i), 1 + static_cast<Amount>(rng() % 9), static_cast<Amount>(rng() % 6)));
    }
    Amount cap = 1 + static_cast<Amount>(rng() % 25);
    auto s = instance_of(objs);
    auto expect = oracle::knapsack(items_of(s), {cap});
    auto dp = opt_oracle(KnapsackKind{cap}, s);
    OracleLimits no_dp;
    no_dp.dp_cells = 0;
    auto enumerated = opt_oracle(KnapsackKind{cap}, s, no_dp);
    EXPECT_EQ(dp.profit, expect.profit);
    EXPECT_EQ(dp.solution, expect.ids) << "round " << round;
    EXPECT_EQ(enumerated.solution, expect.ids) << "round " << round;
    EXPECT_TRUE(feasible(KnapsackKind{cap}, s, dp.solution));
  }
}

TEST(Oracle, MatchesBruteForceOnVectorKnapsacksAndGraphs) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<ChoosingObject> vk;
    for (int i = 0; i < n; ++i) {
      vk.push_back({"o" + std::to_string(i), static_cast<Amount>(rng() % 10),
                    VectorPayload{{static_cast<Amount>(rng() % 6), static_cast<Amount>(rng() % 6)}}});
    }
    auto s = instance_of(vk);
    auto expect = oracle::knapsack(items_of(s), {8, 7});
    auto got = opt_oracle(VectorKnapsackKind{{8, 7}}, s);
    EXPECT_EQ(got.profit, expect.profit);
    EXPECT_EQ(got.solution, expect.ids);

    std::vector<ChoosingObject> nodes;
    std::set<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
      std::vector<ObjectId> nb;
      for (int j = 0; j < i; ++j) {
        if (rng() % 3 == 0) {
          nb.push_back("o" + std::to_string(j));
          edges.insert({"o" + std::to_string(i), "o" + std::to_string(j)});
          edges.insert({"o" + std::to_string(j), "o" + std::to_string(i)});
        }
      }
      nodes.push_back({"o" + std::to_string(i), 1 + static_cast<Amount>(rng() % 5), NeighborPayload{nb}});
    }
    auto g = instance_of(nodes);
    auto gexp = oracle::independent_set(items_of(g), edges);
    auto ggot = opt_oracle(GraphMisKind{true}, g);
    EXPECT_EQ(ggot.profit, gexp.profit);
    EXPECT_EQ(ggot.solution, gexp.ids);
  }
}

TEST(Oracle, BeatsRandomFeasibleSolutions) {
  std::mt19937_64 rng(13);
  std::vector<ChoosingObject> objs;
  for (int i = 0; i < 16; ++i) objs.push_back(sized("s" + std::to_string(i), 1 + static_cast<Amount>(rng() % 40)));
  auto s = instance_of(objs);
  SubsetSumKind kind{100};
  auto best = opt_oracle(kind, s);
  ASSERT_TRUE(feasible(kind, s, best.solution));
  for (int k = 0; k < 1000; ++k) {
    SolutionSet pick;
    for (auto const& o : objs)
      if (rng() % 3 == 0) pick.insert(o.id);
    if (feasible(kind, s, pick)) {
      EXPECT_LE(profit_of(pick, s.objects), best.profit);
    }
  }
}

TEST(Oracle, LimitsAreEnforced) {
  std::vector<ChoosingObject> nodes;
  for (int i = 0; i < 30; ++i) nodes.push_back({"n" + std::to_string(i), 1, NeighborPayload{}});
  expect_code(ErrorCode::OracleLimitExceeded, [&] { opt_oracle(GraphMisKind{false}, instance_of(nodes)); });

  auto limits = OracleLimits::parse("enum=40,dp=5,mkp_n=3,mkp_m=1");
  EXPECT_EQ(limits.enumeration_n, 40U);
  EXPECT_EQ(limits.dp_cells, 5);
  EXPECT_EQ(OracleLimits::parse("10").enumeration_n, 10U);
  expect_code(ErrorCode::ParseError, [] { OracleLimits::parse("bogus=1"); });

  ::setenv("MIGRATE_BENCH_ORACLE_LIMIT", "enum=30", 1);
  EXPECT_EQ(OracleLimits::from_env().enumeration_n, 30U);
  ::unsetenv("MIGRATE_BENCH_ORACLE_LIMIT");
  EXPECT_EQ(OracleLimits::from_env(), OracleLimits{});
}

TEST(MultipleKnapsack, FrozenAndBruteForce) {
  auto s = instance_of({weighted("a", 5, 5), weighted("b", 5, 5), weighted("c", 5, 5)});
  MultipleKnapsackKind kind{{5, 5}};
  auto r = opt_packing(kind, s);
  EXPECT_EQ(r.profit, 10);
  EXPECT_TRUE(feasible_packing(kind, s, r.packing));

  std::mt19937_64 rng(14);
  for (int round = 0; round < 150; ++round) {
    std::vector<ChoosingObject> objs;
    int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      objs.push_back(weighted("o" + std::to_string(i), 1 + static_cast<Amount>(rng() % 12), 1 + static_cast<Amount>(rng() % 10)));
    }
    std::vector<Amount> caps{5 + static_cast<Amount>(rng() % 15), 5 + static_cast<Amount>(rng() % 15)};
    if (round % 3 == 0) caps[1] = caps[0];
    auto inst = instance_of(objs);
    MultipleKnapsackKind k{caps};
    auto got = opt_packing(k, inst);
    EXPECT_EQ(got.profit, oracle::multiple_knapsack(items_of(inst), caps)) << "round " << round;
    EXPECT_TRUE(feasible_packing(k, inst, got.packing));
  }
}

TEST(MultipleKnapsack, OversizedItemsAreNeverPacked) {
  auto s = instance_of({weighted("big", 50, 100), weighted("a", 3, 1)});
  auto r = opt_packing(MultipleKnapsackKind{{10, 10}}, s);
  EXPECT_EQ(r.profit, 1);
  EXPECT_FALSE(feasible_packing(MultipleKnapsackKind{{10, 10}}, s, {{"big"}, {}}));
}

TEST(Fptas, FrozenExamples) {
  auto s = instance_of({weighted("a", 3, 9), weighted("b", 1, 1), weighted("c", 1, 1)});
  auto sol = knapsack_fptas(s, 3, Rational(1, 2));
  EXPECT_GE(2 * profit_of(sol, s.objects), 9);  // >= 4.5
  EXPECT_EQ(oracle::knapsack(items_of(s), {3}).profit, 9);

  auto single = instance_of({weighted("x", 2, 7)});
  EXPECT_EQ(knapsack_fptas(single, 5, Rational(1, 3)), (SolutionSet{"x"}));
  EXPECT_TRUE(knapsack_fptas(InstanceState{}, 5, Rational(1, 3)).empty());
  EXPECT_THROW(knapsack_fptas(single, 5, Rational(3, 2)), Error);
}

TEST(Fptas, MeetsGuaranteeOnRandomInstances) {
  std::mt19937_64 rng(15);
  for (int round = 0; round < 200; ++round) {
    std::vector<ChoosingObject> objs;
    int n = 1 + static_cast<int>(rng() % 14);
    for (int i = 0; i < n; ++i) {
      objs.push_back(weighted("o" + std::to_string(i), 1 + static_cast<Amount>(rng() % 30), 1 + static_cast<Amount>(rng() % 500)));
    }
    auto s = instance_of(objs);
    Amount cap = 10 + static_cast<Amount>(rng() % 60);
    Rational eps = round % 2 ? Rational(1, 10) : Rational(2, 5);
    auto sol = knapsack_fptas(s, cap, eps);
    ASSERT_TRUE(feasible(KnapsackKind{cap}, s, sol));
    auto opt = oracle::knapsack(items_of(s), {cap}).profit;
    EXPECT_TRUE(at_least(profit_of(sol, s.objects), 1 - eps, opt)) << "round " << round;
  }
}

TEST(Hereditary, DetectsViolations) {
  auto s = instance_of({weighted("a", 3, 1), weighted("b", 4, 1), weighted("c", 2, 1)});
  EXPECT_TRUE(verify_hereditary(KnapsackKind{9}, s, {"a", "b", "c"}));
  auto g = instance_of({{"u", 1, NeighborPayload{}}, {"v", 1, NeighborPayload{}}});
  EXPECT_TRUE(verify_hereditary(GraphMisKind{false}, g, {"u", "v"}));

  // Exact cover of {1,2}: {a,b} covers it, {a} alone does not.
  auto exact_cover = [](SolutionSet const& sub) { return sub.empty() || sub == SolutionSet{"a", "b"}; };
  EXPECT_FALSE(verify_hereditary_with(exact_cover, {"a", "b"}));
}

TEST(Hereditary, RemovalStabilityAcrossKinds) {
  std::mt19937_64 rng(16);
  for (int round = 0; round < 200; ++round) {
    std::vector<ChoosingObject> objs;
    for (int i = 0; i < 8; ++i) objs.push_back(weighted("o" + std::to_string(i), 1 + static_cast<Amount>(rng() % 9), 3));
    auto s = instance_of(objs);
    KnapsackKind kind{20};
    SolutionSet pick;
    for (auto const& o : objs)
      if (rng() % 2) pick.insert(o.id);
    if (!feasible(kind, s, pick)) continue;
    auto gone = objs[rng() % objs.size()].id;
    auto after = s;
    after.objects.erase(gone);
    pick.erase(gone);
    EXPECT_TRUE(feasible(kind, after, pick));
  }
}

TEST(Payload, ValidationPerKind) {
  InstanceState empty;
  expect_code(ErrorCode::PayloadMismatch, [&] { validate_object(SubsetSumKind{5}, {"a", 3, SizePayload{4}}, empty); });
  expect_code(ErrorCode::PayloadMismatch, [&] { validate_object(KnapsackKind{5}, {"a", 3, {}}, empty); });
  expect_code(ErrorCode::PayloadMismatch,
              [&] { validate_object(VectorKnapsackKind{{5, 5}}, {"a", 3, VectorPayload{{1}}}, empty); });
  expect_code(ErrorCode::PayloadMismatch,
              [&] { validate_object(GraphMisKind{false}, {"a", 1, NeighborPayload{{"ghost"}}}, empty); });
  expect_code(ErrorCode::PayloadMismatch, [&] { validate_object(GraphMisKind{false}, {"a", 2, NeighborPayload{}}, empty); });
  EXPECT_NO_THROW(validate_object(SubsetSumKind{5}, sized("a", 3), empty));
}

TEST(Kinds, JsonRoundTrip) {
  for (ProblemKind k : {ProblemKind{SubsetSumKind{8}}, ProblemKind{KnapsackKind{3}}, ProblemKind{VectorKnapsackKind{{2, 3}}},
                        ProblemKind{GraphMisKind{true}}, ProblemKind{UnitDiskKind{}},
                        ProblemKind{MultipleKnapsackKind{{5, 5}}}}) {
    EXPECT_EQ(kind_from_json(nlohmann::json::parse(kind_to_json(k).dump())), k);
  }
  EXPECT_EQ(kind_to_json(SubsetSumKind{8}).dump(), R"({"kind":"subsetsum","C":8})");
  expect_code(ErrorCode::ParseError, [] { kind_from_json(nlohmann::json{{"kind", "tsp"}}); });
  expect_code(ErrorCode::PayloadMismatch, [] { kind_from_json(nlohmann::json{{"kind", "subsetsum"}, {"C", 0}}); });
}
