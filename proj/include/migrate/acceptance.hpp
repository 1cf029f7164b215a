#ifndef MIGRATE_ACCEPTANCE_HPP
#define MIGRATE_ACCEPTANCE_HPP

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "migrate/adversary.hpp"
#include "migrate/harness.hpp"
#include "migrate/random_streams.hpp"

namespace migrate {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  bool quick = false;  // a tenth of the random streams
  unsigned threads = 1;
};

namespace acceptance {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

inline std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline int scaled(int full, SuiteOptions const& o) { return o.quick ? std::max(1, full / 10) : full; }

/// Runs `make(seed)` for every seed and eps, checks `claims`, and counts
/// violating traces per claim name.
template <typename MakeStream>
std::pair<int, std::string> random_battery(int count, std::vector<Rational> const& epsilons, MakeStream&& make,
                                           std::string const& solver, std::function<Claims(Rational)> const& claims,
                                           SuiteOptions const& o) {
  std::vector<std::function<std::pair<int, std::string>()>> jobs;
  for (auto const& eps : epsilons) {
    for (int seed = 0; seed < count; ++seed) {
      jobs.push_back([&, eps, seed]() -> std::pair<int, std::string> {
        RunOptions opts;
        opts.epsilon = eps;
        opts.solver = solver;
        auto report = run_scenario(make(static_cast<std::uint64_t>(seed)), opts);
        auto v = verify_bounds(report, claims(eps));
        for (auto const& c : v.claims) {
          if (!c.passed) return {1, "seed " + std::to_string(seed) + " eps " + to_string(eps) + ": " + c.detail};
        }
        if (report.summary.opt_unavailable > 0) return {1, "oracle unavailable on seed " + std::to_string(seed)};
        return {0, ""};
      });
    }
  }
  auto results = run_parallel(jobs, o.threads);
  int violations = 0;
  std::string first;
  for (auto const& [bad, why] : results) {
    violations += bad;
    if (bad && first.empty()) first = why;
  }
  return {violations, first};
}

inline std::string battery_detail(int runs, int violations, std::string const& first) {
  std::string d = std::to_string(runs) + " traces, " + std::to_string(violations) + " violating";
  if (!first.empty()) d += "; first: " + first;
  return d;
}

inline CriterionResult framework_battery(int id, std::string name, bool migration, SuiteOptions const& o) {
  auto start = Clock::now();
  int count = scaled(1000, o);
  std::vector<Rational> eps{Rational(1, 10), Rational(1, 4)};
  auto claims = [migration](Rational e) {
    Claims c;
    if (migration) {
      c.phase_migration_bound = 2 / e + 1;
      c.total_migration_bound = c.phase_migration_bound;
    } else {
      c.ratio_bound = 1 - e;
    }
    return c;
  };
  auto [bad, first] = random_battery(count, eps, [](std::uint64_t s) { return Stream(random_subsetsum_stream(s)); },
                                     "exact", claims, o);
  double secs = since(start);
  bool ok = bad == 0 && (migration || secs < 60);
  return {id, std::move(name), ok, battery_detail(count * 2, bad, first) + ", " + num(secs) + " s", secs};
}

}  // namespace acceptance

inline CriterionResult criterion_1(SuiteOptions const& o = {}) {
  return acceptance::framework_battery(1, "framework competitiveness", false, o);
}

inline CriterionResult criterion_2(SuiteOptions const& o = {}) {
  return acceptance::framework_battery(2, "framework migration", true, o);
}

inline CriterionResult criterion_3(SuiteOptions const& o = {}) {
  auto start = acceptance::Clock::now();
  int count = acceptance::scaled(200, o);
  auto claims = [](Rational e) {
    Claims c;
    c.ratio_bound = 1 - e;
    return c;
  };
  auto [bad, first] = acceptance::random_battery(
      count, {Rational(1, 10), Rational(3, 10)}, [](std::uint64_t s) { return Stream(random_knapsack_stream(s + 100000)); },
      "fptas", claims, o);
  return {3, "FPTAS composition", bad == 0, acceptance::battery_detail(count * 2, bad, first),
          acceptance::since(start)};
}

inline CriterionResult criterion_4(SuiteOptions const& = {}) {
  auto start = acceptance::Clock::now();
  bool ok = true;
  std::string detail;
  Rational previous(-1);
  for (int T = 3; T <= 10; ++T) {
    auto scenario = gen_strict_static_subsetsum(T, true);  // oracle opt + uniqueness self-check
    RunOptions opts;
    opts.epsilon = scenario.expected.run.epsilon;
    auto report = run_scenario(scenario.stream, opts);
    auto closed = strict_static_closed_form(T);
    Claims alternation;
    alternation.opt_sequence = scenario.expected.claims.opt_sequence;
    alternation.gamma_at_least = closed;
    bool sub = verify_bounds(report, alternation).passed() && report.summary.repacks == T;
    bool exact = report.summary.final_gamma == closed;
    bool grows = closed > previous;
    previous = closed;
    ok = ok && sub && exact && grows;
    detail += "T=" + std::to_string(T) + " measured " + to_string(report.summary.final_gamma) + " vs " +
              to_string(closed) + (exact ? "" : " (mismatch)") + (sub ? "" : " (alternation broken)") +
              (grows ? "" : " (not growing)") + "; ";
  }
  int horizon = strict_static_horizon(Rational(1, 64));
  ok = ok && horizon == 5;
  detail += "T(1/64)=" + std::to_string(horizon);
  return {4, "strict-static lower bound", ok, detail, acceptance::since(start)};
}

inline CriterionResult criterion_5(SuiteOptions const& = {}) {
  auto start = acceptance::Clock::now();
  bool ok = true;
  std::string detail;
  for (auto [eps, want] : {std::pair{Rational(1, 5), Rational(5, 2)}, std::pair{Rational(1, 10), Rational(15, 2)}}) {
    auto scenario = gen_lax_static_subsetsum(eps);
    RunOptions opts;
    opts.epsilon = eps;
    auto report = run_scenario(scenario.stream, opts);
    bool hit = report.summary.final_gamma == want && !report.failure;
    ok = ok && hit;
    detail += "eps " + to_string(eps) + ": gamma " + to_string(report.summary.final_gamma) + " (want " +
              to_string(want) + "); ";
  }
  return {5, "lax-static lower bound", ok, detail, acceptance::since(start)};
}

inline CriterionResult criterion_6(SuiteOptions const& = {}) {
  auto start = acceptance::Clock::now();
  Rational eps(1, 10);
  std::int64_t N = 10000;
  auto scenario = gen_strict_dynamic_subsetsum(eps, N, false);
  RunOptions opts;
  opts.epsilon = eps;
  auto report = run_scenario(scenario.stream, opts);
  Amount C = 9;
  Rational target = strict_dynamic_closed_form(C, N);
  double measured = to_double(report.summary.final_gamma);
  double want = to_double(target);
  bool near = std::abs(measured - want) <= 0.01 * want;
  bool above = report.summary.final_gamma >= Rational(C - 1, 4);
  double secs = acceptance::since(start);
  bool ok = near && above && secs < 10 && !report.failure;
  return {6, "strict-dynamic lower bound", ok,
          "measured " + acceptance::num(measured) + " vs closed form " + acceptance::num(want) + " (" +
              (near ? "within" : "outside") + " 1%), >= 2: " + (above ? "yes" : "no") + ", " + acceptance::num(secs) +
              " s",
          secs};
}

inline CriterionResult criterion_7(SuiteOptions const& o = {}) {
  auto start = acceptance::Clock::now();
  int count = acceptance::scaled(200, o);
  auto claims = [](Rational e) {
    Claims c;
    c.ratio_bound = 1 - 2 * e;
    c.phase_migration_bound = 1 / (e * (1 - e)) + 1;
    return c;
  };
  auto [bad, first] = acceptance::random_battery(
      count, {Rational(1, 10), Rational(1, 4)}, [](std::uint64_t s) { return Stream(random_mkp_stream(s + 200000)); },
      "exact", claims, o);
  return {7, "multiple knapsack algorithm", bad == 0, acceptance::battery_detail(count * 2, bad, first),
          acceptance::since(start)};
}

inline CriterionResult criterion_8(SuiteOptions const& o = {}) {
  auto start = acceptance::Clock::now();
  int count = acceptance::scaled(200, o);
  auto claims = [](Rational e) {
    Claims c;
    c.ratio_bound = 1 - 2 * e;
    c.phase_migration_bound = 2 / ((1 - e) * e);
    return c;
  };
  // Independence is enforced by the runner, which fails the trace otherwise.
  auto [bad, first] = acceptance::random_battery(
      count, {Rational(1, 10), Rational(1, 4)},
      [](std::uint64_t s) { return Stream(random_grid_edge_stream(s + 300000)); }, "exact", claims, o);
  return {8, "independent set under edge arrivals", bad == 0, acceptance::battery_detail(count * 2, bad, first),
          acceptance::since(start)};
}

inline CriterionResult criterion_9(SuiteOptions const& = {}) {
  auto start = acceptance::Clock::now();
  bool ok = true;
  std::string detail;
  for (auto eps : {Rational(1, 6), Rational(1, 12)}) {
    auto scenario = gen_mis_weighted_path(eps, 1000);
    RunOptions opts;
    opts.epsilon = eps;
    auto report = run_scenario(scenario.stream, opts);
    double want = static_cast<double>(detail::mis_scale(eps) - 1);
    double got = to_double(report.summary.final_gamma);
    bool hit = std::abs(got - want) <= 0.05 * want && !report.failure;
    ok = ok && hit;
    detail += "eps " + to_string(eps) + ": gamma " + acceptance::num(got) + " vs " + acceptance::num(want) + "; ";
  }
  return {9, "weighted-path MIS lower bound", ok, detail, acceptance::since(start)};
}

inline CriterionResult criterion_10(SuiteOptions const& = {}) {
  auto start = acceptance::Clock::now();
  bool ok = true;
  std::string detail;
  for (Amount C : {100, 1000, 10000}) {
    auto scenario = gen_weight_migration_knapsack(C, 0);
    RunOptions opts;
    opts.epsilon = scenario.expected.run.epsilon;
    auto report = run_scenario(scenario.stream, opts);
    bool hit = report.summary.final_gamma == Rational(C) && report.meta.metric == Metric::Weight;
    ok = ok && hit;
    detail += "static C=" + std::to_string(C) + ": " + to_string(report.summary.final_gamma) + "; ";
  }
  {
    Amount C = 100;
    std::int64_t N = 10000;
    auto scenario = gen_weight_migration_knapsack(C, N, Metric::Weight, Rational(1, 10), false);
    RunOptions opts;
    opts.epsilon = scenario.expected.run.epsilon;
    auto report = run_scenario(scenario.stream, opts);
    double want = to_double(Rational(N * C, C + N));
    double got = to_double(report.summary.final_gamma);
    bool hit = std::abs(got - want) <= 0.01 * want;
    ok = ok && hit;
    detail += "dynamic: " + acceptance::num(got) + " vs " + acceptance::num(want);
  }
  return {10, "weight-migration witness", ok, detail, acceptance::since(start)};
}

inline CriterionResult criterion_11(SuiteOptions const& = {}) {
  auto start = acceptance::Clock::now();
  auto sized = [](char const* id, Amount s) { return ChoosingObject{id, s, SizePayload{s}}; };
  Rational beta(9, 10);
  auto verdict = validate_alternating(SubsetSumKind{9}, {sized("v1", 7), sized("v3", 2)}, {sized("v2", 8)},
                                      {sized("v1", 7)}, beta);
  auto scenario = gen_subsetsum_alternating_fixture(1000, beta);
  RunOptions opts;
  opts.epsilon = scenario.expected.run.epsilon;
  auto report = run_scenario(scenario.stream, opts);
  bool fixture = verdict.ok && verdict.c == 2 && verdict.bound == Rational(6, 5);
  bool above = report.summary.final_gamma >= verdict.bound && !report.failure;
  return {11, "alternating-instance lemma", fixture && above,
          std::string("fixture ") + (fixture ? "accepted" : "rejected") + " (c=" + std::to_string(verdict.c) +
              ", bound " + to_string(verdict.bound) + "), measured gamma " +
              acceptance::num(to_double(report.summary.final_gamma)),
          acceptance::since(start)};
}

inline CriterionResult criterion_12(SuiteOptions const& = {}) {
  auto start = acceptance::Clock::now();
  int mismatches = 0;
  std::string first;
  for (int k = 0; k < 100; ++k) {
    auto stream = Stream(random_subsetsum_stream(400000 + static_cast<std::uint64_t>(k)));
    Rational eps = k % 2 ? Rational(1, 4) : Rational(1, 10);
    RunOptions a;
    a.epsilon = eps;
    RunOptions b = a;
    b.algorithm = "combined";
    auto ra = run_scenario(stream, a);
    auto rb = run_scenario(stream, b);
    auto body = [](TraceReport const& r) {
      auto j = report_to_json(r);
      j.erase("meta");
      return j.dump() + report_to_csv(r);
    };
    if (body(ra) != body(rb)) {
      ++mismatches;
      if (first.empty()) first = "stream " + std::to_string(k);
    }
  }
  return {12, "combined/framework equivalence", mismatches == 0,
          "100 streams, " + std::to_string(mismatches) + " differing" + (first.empty() ? "" : "; first: " + first),
          acceptance::since(start)};
}

inline std::vector<std::function<CriterionResult(SuiteOptions const&)>> acceptance_criteria() {
  return {criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5,  criterion_6,
          criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12};
}

inline std::string format_result(CriterionResult const& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%7.2fs", r.seconds);
  std::string detail = r.detail;
  while (detail.ends_with("; ")) detail.resize(detail.size() - 2);
  return "criterion " + std::to_string(r.id) + (r.id < 10 ? "  " : " ") + (r.passed ? "PASS " : "FAIL ") + buf +
         "  " + r.name + ": " + detail;
}

}  // namespace migrate

#endif  // MIGRATE_ACCEPTANCE_HPP
