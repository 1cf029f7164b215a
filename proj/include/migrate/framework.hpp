#ifndef MIGRATE_FRAMEWORK_HPP
#define MIGRATE_FRAMEWORK_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "migrate/error.hpp"
#include "migrate/model.hpp"
#include "migrate/problems.hpp"
#include "migrate/rational.hpp"

namespace migrate {

struct FrameworkConfig {
  Rational epsilon{1, 10};
  RatedSolver solver;
  Metric metric = Metric::Profit;
  ProblemKind problem;
};

/// Lazy-hold state. `delta` always accumulates profit potential: the repack
/// threshold compares it against the held profit V whatever the ledger metric.
struct FrameworkState {
  SolutionSet solution;
  Amount reference_profit = 0;
  Amount delta = 0;
  std::int64_t phase_start = 0;
  bool started = false;
  // Ids that have arrived at least once; only a first arrival gets the free
  // initial assignment.
  std::set<ObjectId> arrived;

  bool operator==(FrameworkState const&) const = default;
};

struct StepResult {
  bool repacked = false;
  Amount cost = 0;
  Amount potential = 0;  // in the configured metric
  bool operator==(StepResult const&) const = default;
};

inline Rational effective_epsilon(Rational const& target) {
  require_unit_epsilon(target);
  return target / 2;
}

inline SolutionSet lazy_online_extend(InstanceState const& /*instance*/, Event const& event, SolutionSet s) {
  if (!event.is_arrival()) s.erase(event.id());
  return s;
}

namespace detail {

inline void require_held(SolutionSet const& s, InstanceState const& instance) {
  for (auto const& id : s) {
    if (!instance.contains(id)) throw Error(ErrorCode::StateDesync, "held object '" + id + "' is not present");
  }
}

inline Amount profit_potential(Event const& event, InstanceState const& before) {
  return event_potential(event, before, Metric::Profit);
}

/// Swap in `fresh` after the held solution was extended to `held`.
inline StepResult repack(FrameworkState& state, SolutionSet const& held, SolutionSet fresh,
                         InstanceState const& after, Event const& event, bool first_arrival, Metric metric) {
  std::optional<ObjectId> exempt;
  if (first_arrival) exempt = event.id();
  StepResult result;
  result.repacked = true;
  result.cost = migration_cost(held, fresh, after.objects, metric, exempt);
  state.reference_profit = profit_of(fresh, after.objects);
  state.solution = std::move(fresh);
  state.delta = 0;
  state.phase_start = event.t;
  state.started = true;
  return result;
}

}  // namespace detail

/// Solves a lax stream's declared initial instance. No cost, no potential.
inline FrameworkState framework_init(FrameworkConfig const& cfg, InstanceState const& initial) {
  require_unit_epsilon(cfg.epsilon);
  FrameworkState state;
  state.phase_start = initial.time;
  for (auto const& [id, obj] : initial.objects) state.arrived.insert(id);
  if (initial.objects.empty()) return state;
  state.solution = cfg.solver.solve(cfg.problem, initial);
  state.reference_profit = profit_of(state.solution, initial.objects);
  state.started = true;
  return state;
}

/// One step of the threshold framework: hold, drop departed members, and
/// repack once the accumulated potential strictly exceeds eps * V.
inline std::pair<FrameworkState, StepResult> framework_step(FrameworkState state, FrameworkConfig const& cfg,
                                                            InstanceState const& instance, Event const& event) {
  detail::require_held(state.solution, instance);
  InstanceState after = apply_event(instance, event);

  Amount potential = event_potential(event, instance, cfg.metric);
  state.delta += detail::profit_potential(event, instance);
  bool first_arrival = event.is_arrival() && state.arrived.insert(event.id()).second;
  if (!event.is_arrival()) state.solution.erase(event.id());

  StepResult result;
  if (!state.started || exceeds(state.delta, cfg.epsilon, state.reference_profit)) {
    SolutionSet held = state.solution;
    result = detail::repack(state, held, cfg.solver.solve(cfg.problem, after), after, event, first_arrival,
                            cfg.metric);
  }
  result.potential = potential;
  return {std::move(state), result};
}

// Generic two-algorithm framework --------------------------------------------

/// Online algorithm that can resume from any externally supplied solution.
struct FlexibleOnlineAlgorithm {
  std::string name;
  Rational maintaining_ratio{1};
  std::function<SolutionSet(InstanceState const&, Event const&, SolutionSet const&)> extend;
};

inline FlexibleOnlineAlgorithm lazy_online(Rational maintaining_ratio = Rational(1)) {
  return {"lazy", maintaining_ratio, [](InstanceState const& instance, Event const& event, SolutionSet const& s) {
            return lazy_online_extend(instance, event, s);
          }};
}

/// Decides whether the current step is a repacking time. Sees the state after
/// the online extension with this step's potential already added.
struct RepackDetector {
  std::string name;
  std::function<bool(FrameworkState const&)> fires;
};

inline RepackDetector threshold_detector(Rational eps) {
  require_unit_epsilon(eps);
  return {"threshold", [eps](FrameworkState const& s) { return exceeds(s.delta, eps, s.reference_profit); }};
}

inline RepackDetector every_step_detector() {
  return {"every-step", [](FrameworkState const&) { return true; }};
}

/// Never fires after the initial solve. Negative control for the verifier.
inline RepackDetector never_detector() {
  return {"never", [](FrameworkState const&) { return false; }};
}

/// Optional runtime check of the pair's compatibility: between repacking
/// times the held solution must stay alpha*beta-approximate.
struct CompatibilityMonitor {
  OracleLimits limits;
};

struct CombinedAlgorithm {
  RatedSolver offline;
  FlexibleOnlineAlgorithm online;
  RepackDetector detector;
  ProblemKind problem;
  Metric metric = Metric::Profit;
  std::optional<CompatibilityMonitor> monitor;
};

inline CombinedAlgorithm make_combined(FrameworkConfig const& cfg) {
  return {cfg.solver, lazy_online(), threshold_detector(cfg.epsilon), cfg.problem, cfg.metric, std::nullopt};
}

inline FrameworkState combined_init(CombinedAlgorithm const& alg, InstanceState const& initial) {
  FrameworkState state;
  state.phase_start = initial.time;
  for (auto const& [id, obj] : initial.objects) state.arrived.insert(id);
  if (initial.objects.empty()) return state;
  state.solution = alg.offline.solve(alg.problem, initial);
  state.reference_profit = profit_of(state.solution, initial.objects);
  state.started = true;
  return state;
}

inline std::pair<FrameworkState, StepResult> combined_step(CombinedAlgorithm const& alg, FrameworkState state,
                                                           InstanceState const& instance, Event const& event) {
  detail::require_held(state.solution, instance);
  InstanceState after = apply_event(instance, event);

  Amount potential = event_potential(event, instance, alg.metric);
  bool first_arrival = event.is_arrival() && state.arrived.insert(event.id()).second;
  state.solution = alg.online.extend(instance, event, state.solution);
  state.delta += detail::profit_potential(event, instance);

  StepResult result;
  if (!state.started || alg.detector.fires(state)) {
    SolutionSet held = state.solution;
    result = detail::repack(state, held, alg.offline.solve(alg.problem, after), after, event, first_arrival,
                            alg.metric);
  } else if (alg.monitor) {
    auto opt = opt_oracle(alg.problem, after, alg.monitor->limits).profit;
    auto held = profit_of(state.solution, after.objects);
    if (!at_least(held, alg.offline.rating * alg.online.maintaining_ratio, opt)) {
      throw Error(ErrorCode::IncompatiblePair, "detector '" + alg.detector.name + "' missed the repacking time at t=" +
                                                   std::to_string(event.t));
    }
  }
  result.potential = potential;
  return {std::move(state), result};
}

// Configuration helpers ----------------------------------------------------------

/// Framework configuration for a named solver. "fptas" runs both the solver
/// and the threshold at eps/2 so the composition is (1 - eps)-competitive.
inline FrameworkConfig make_framework_config(ProblemKind problem, Rational target_eps, std::string const& solver,
                                             Metric metric = Metric::Profit, OracleLimits limits = OracleLimits{}) {
  require_unit_epsilon(target_eps);
  FrameworkConfig cfg;
  cfg.problem = std::move(problem);
  cfg.metric = metric;
  if (solver == "exact") {
    cfg.epsilon = target_eps;
    cfg.solver = exact_solver(limits);
  } else if (solver == "fptas") {
    cfg.epsilon = effective_epsilon(target_eps);
    cfg.solver = fptas_solver(cfg.epsilon);
  } else {
    throw Error(ErrorCode::ParseError, "unknown solver '" + solver + "'");
  }
  return cfg;
}

}  // namespace migrate

#endif  // MIGRATE_FRAMEWORK_HPP
