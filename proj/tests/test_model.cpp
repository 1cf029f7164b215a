#include <random>

#include <gtest/gtest.h>

#include "migrate/model.hpp"

using namespace migrate;

namespace {

ChoosingObject item(ObjectId id, Amount p) { return {std::move(id), p, SizePayload{p}}; }

ObjectTable table(std::initializer_list<std::pair<char const*, Amount>> entries) {
  ObjectTable t;
  for (auto [id, p] : entries) t.emplace(id, item(id, p));
  return t;
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

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("1/10"), Rational(1, 10));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  expect_code(ErrorCode::ParseError, [] { parse_rational("0.1"); });
  expect_code(ErrorCode::ParseError, [] { parse_rational("1/0"); });
  expect_code(ErrorCode::ParseError, [] { parse_rational("a/b"); });
  EXPECT_EQ(to_string(Rational(15, 2)), "15/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(Rational, ThresholdComparisonsAreExact) {
  // 11 > 0.1 * 100, 10 is not.
  EXPECT_TRUE(exceeds(11, Rational(1, 10), 100));
  EXPECT_FALSE(exceeds(10, Rational(1, 10), 100));
  EXPECT_TRUE(at_least(10, Rational(1, 10), 100));
  expect_code(ErrorCode::InvalidEpsilon, [] { require_unit_epsilon(Rational(1)); });
  expect_code(ErrorCode::InvalidEpsilon, [] { require_unit_epsilon(Rational(0)); });
}

TEST(Instance, ApplyEventFoldsArrivalsAndDepartures) {
  InstanceState empty;
  auto one = apply_event(empty, make_arrival(1, item("a", 5)));
  EXPECT_TRUE(one.contains("a"));
  EXPECT_EQ(one.time, 1);
  EXPECT_TRUE(empty.objects.empty());  // value semantics
  auto none = apply_event(one, make_departure(2, "a"));
  EXPECT_TRUE(none.objects.empty());
}

TEST(Instance, RejectsInvalidEvents) {
  InstanceState s = apply_event(InstanceState{}, make_arrival(1, item("a", 5)));
  expect_code(ErrorCode::DuplicateArrival, [&] { apply_event(s, make_arrival(2, item("a", 5))); });
  expect_code(ErrorCode::UnknownDeparture, [&] { apply_event(s, make_departure(2, "b")); });
  expect_code(ErrorCode::TimeSkew, [&] { apply_event(s, make_departure(3, "a")); });
  expect_code(ErrorCode::PayloadMismatch, [&] { apply_event(s, make_arrival(2, {"n", -1, {}})); });
}

TEST(Potential, ProfitAndWeightMetrics) {
  InstanceState s;
  ChoosingObject heavy{"i", 1, WeightPayload{100}};
  EXPECT_EQ(event_potential(make_arrival(1, item("x", 7)), s, Metric::Profit), 7);
  EXPECT_EQ(event_potential(make_arrival(1, heavy), s, Metric::Weight), 100);
  s.apply(make_arrival(1, item("x", 7)));
  EXPECT_EQ(event_potential(make_departure(2, "x"), s, Metric::Profit), 7);
  expect_code(ErrorCode::MissingWeight,
              [&] { event_potential(make_arrival(2, {"y", 3, NeighborPayload{}}), s, Metric::Weight); });
}

TEST(Phi, SymmetricDifferenceExamples) {
  auto t = table({{"a", 3}, {"b", 5}, {"c", 2}});
  EXPECT_EQ(phi_cost({"a", "b"}, {"b", "c"}, t, Metric::Profit), 5);
  EXPECT_EQ(phi_cost({"a", "b"}, {"a", "b"}, t, Metric::Profit), 0);
  EXPECT_EQ(phi_cost({}, {"a", "b"}, t, Metric::Profit), 8);
  expect_code(ErrorCode::UnknownId, [&] { phi_cost({"z"}, {}, t, Metric::Profit); });
}

TEST(Phi, ExemptArrivalIsFreeOnlyWhenEntering) {
  auto t = table({{"a", 3}, {"b", 5}, {"c", 2}});
  EXPECT_EQ(migration_cost({"a"}, {"b", "c"}, t, Metric::Profit, ObjectId("c")), 8);
  EXPECT_EQ(migration_cost({"a"}, {"b"}, t, Metric::Profit, ObjectId("c")), 8);
  EXPECT_EQ(migration_cost({"a"}, {"b", "c"}, t, Metric::Profit, std::nullopt), 10);
}

TEST(Phi, MetricPropertiesOnRandomSets) {
  std::mt19937_64 rng(7);
  ObjectTable t;
  for (int i = 0; i < 10; ++i) t.emplace("o" + std::to_string(i), item("o" + std::to_string(i), 1 + i * 3));
  auto random_set = [&] {
    SolutionSet s;
    for (auto const& [id, _] : t)
      if (rng() % 2) s.insert(id);
    return s;
  };
  for (int k = 0; k < 500; ++k) {
    auto a = random_set(), b = random_set(), c = random_set();
    EXPECT_EQ(phi_cost(a, b, t, Metric::Profit), phi_cost(b, a, t, Metric::Profit));
    EXPECT_EQ(phi_cost(a, a, t, Metric::Profit), 0);
    EXPECT_LE(phi_cost(a, c, t, Metric::Profit), phi_cost(a, b, t, Metric::Profit) + phi_cost(b, c, t, Metric::Profit));
  }
}

TEST(Ledger, AmortizedFactor) {
  MigrationLedger ledger;
  ledger = ledger_record(ledger, 5, 0);
  ledger = ledger_record(ledger, 4, 0);
  ledger = ledger_record(ledger, 2, 8);
  EXPECT_EQ(ledger.gamma().value, Rational(8, 11));
  EXPECT_FALSE(ledger.gamma().undefined);

  MigrationLedger zero_cost;
  zero_cost.record(3, 0);
  EXPECT_EQ(zero_cost.gamma().value, Rational(0));

  MigrationLedger empty;
  EXPECT_TRUE(empty.gamma().undefined);
  EXPECT_EQ(empty.gamma().value, Rational(0));
}

TEST(Ledger, PhasesCloseAtRepacks) {
  MigrationLedger ledger(Metric::Profit, 0);
  ledger.record(4, 0);
  ledger.close_phase(1);
  ledger.record(2, 0);
  ledger.record(3, 6);
  ledger.close_phase(3);
  ASSERT_EQ(ledger.phases().size(), 2U);
  EXPECT_EQ(ledger.phases()[1], (PhaseRecord{1, 3, 5, 6}));
  EXPECT_EQ(ledger.open_phase_start(), 3);
  EXPECT_EQ(ledger.open_phase_potential(), 0);
}

TEST(Ledger, DepartureAndReturnCountTwice) {
  InstanceState s;
  MigrationLedger ledger;
  std::vector<Event> events{make_arrival(1, item("k", 2)), make_departure(2, "k"), make_arrival(3, item("k", 2))};
  for (auto const& e : events) {
    ledger.record(event_potential(e, s, Metric::Profit), 0);
    s.apply(e);
  }
  EXPECT_EQ(ledger.potential_cum(), 6);
}

TEST(Instance, ReplayIsDeterministic) {
  std::mt19937_64 rng(3);
  std::vector<Event> events;
  InstanceState s;
  for (int t = 1; t <= 200; ++t) {
    if (!s.objects.empty() && rng() % 3 == 0) {
      auto it = s.objects.begin();
      std::advance(it, static_cast<long>(rng() % s.objects.size()));
      events.push_back(make_departure(t, it->first));
    } else {
      events.push_back(make_arrival(t, item("n" + std::to_string(t), static_cast<Amount>(rng() % 20))));
    }
    s.apply(events.back());
  }
  InstanceState replay;
  for (auto const& e : events) replay.apply(e);
  EXPECT_EQ(replay, s);
}
