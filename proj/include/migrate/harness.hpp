#ifndef MIGRATE_HARNESS_HPP
#define MIGRATE_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "migrate/claims.hpp"
#include "migrate/error.hpp"
#include "migrate/framework.hpp"
#include "migrate/model.hpp"
#include "migrate/problems.hpp"
#include "migrate/rational.hpp"
#include "migrate/stream.hpp"
#include "migrate/variants.hpp"

namespace migrate {

struct TraceRow {
  std::int64_t t = 0;
  std::string event;
  std::optional<Amount> opt;
  Amount alg = 0;
  std::optional<Rational> ratio;
  Amount delta_cum = 0;
  Amount cost_cum = 0;
  Rational gamma{0};
  bool gamma_undefined = true;
  std::int64_t phase = 0;
  bool repacked = false;
  Amount cost = 0;
  Amount potential = 0;

  bool operator==(TraceRow const&) const = default;
};

struct ScenarioMeta {
  nlohmann::ordered_json problem = nlohmann::ordered_json::object();
  std::string algorithm;
  std::string solver;
  Rational epsilon{0};
  Rational alpha{1};
  Metric metric = Metric::Profit;

  bool operator==(ScenarioMeta const&) const = default;
};

struct TraceSummary {
  std::optional<Rational> min_ratio;
  std::optional<Rational> max_phase_gamma;
  Rational final_gamma{0};
  bool final_gamma_undefined = true;
  std::int64_t opt_unavailable = 0;
  std::int64_t repacks = 0;

  bool operator==(TraceSummary const&) const = default;
};

struct TraceReport {
  ScenarioMeta meta;
  std::vector<TraceRow> rows;
  std::vector<PhaseRecord> phases;
  TraceSummary summary;
  std::optional<std::string> failure;

  bool operator==(TraceReport const&) const = default;
};

struct RunOptions {
  std::string algorithm = "choosing-framework";
  Rational epsilon{1, 10};
  std::string solver = "exact";
  OracleLimits limits = OracleLimits{};
  bool oracle = true;
  std::optional<Metric> metric;
};

// Trace assembly -------------------------------------------------------------------

namespace detail {

inline std::string describe(Event const& event) {
  return (event.is_arrival() ? "add " : "remove ") + event.id();
}

class TraceBuilder {
 public:
  TraceBuilder(ScenarioMeta meta, std::int64_t start) : ledger_(meta.metric, start) { report_.meta = std::move(meta); }

  void row(std::int64_t t, std::string event, std::optional<Amount> opt, Amount alg, StepResult const& step) {
    ledger_.record(step.potential, step.cost);
    if (step.repacked) ledger_.close_phase(t);
    TraceRow r;
    r.t = t;
    r.event = std::move(event);
    r.opt = opt;
    r.alg = alg;
    if (opt) r.ratio = *opt == 0 ? Rational(1) : Rational(alg, *opt);
    r.delta_cum = ledger_.potential_cum();
    r.cost_cum = ledger_.cost_cum();
    auto g = ledger_.gamma();
    r.gamma = g.value;
    r.gamma_undefined = g.undefined;
    r.phase = static_cast<std::int64_t>(ledger_.phases().size());
    r.repacked = step.repacked;
    r.cost = step.cost;
    r.potential = step.potential;
    report_.rows.push_back(std::move(r));
  }

  void fail(std::string const& why) { report_.failure = why; }

  TraceReport finish() {
    report_.phases = ledger_.phases();
    auto& s = report_.summary;
    for (auto const& r : report_.rows) {
      if (!r.opt) ++s.opt_unavailable;
      if (r.repacked) ++s.repacks;
      if (r.ratio && (!s.min_ratio || *r.ratio < *s.min_ratio)) s.min_ratio = r.ratio;
    }
    for (auto const& p : report_.phases) {
      if (p.potential == 0) continue;
      Rational g(p.cost, p.potential);
      if (!s.max_phase_gamma || g > *s.max_phase_gamma) s.max_phase_gamma = g;
    }
    auto g = ledger_.gamma();
    s.final_gamma = g.value;
    s.final_gamma_undefined = g.undefined;
    return std::move(report_);
  }

 private:
  MigrationLedger ledger_;
  TraceReport report_;
};

template <typename F>
std::optional<Amount> bounded_opt(bool enabled, F&& compute) {
  if (!enabled) return std::nullopt;
  try {
    return compute();
  } catch (Error const& e) {
    if (e.code() == ErrorCode::OracleLimitExceeded) return std::nullopt;
    throw;
  }
}

}  // namespace detail

// Choosing-problem runners -----------------------------------------------------------

/// Uniform face over framework_step and combined_step so both drive the same
/// trace code.
class ChoosingRunner {
 public:
  virtual ~ChoosingRunner() = default;
  virtual void init(InstanceState const& initial) = 0;
  virtual StepResult step(InstanceState const& before, Event const& event) = 0;
  virtual SolutionSet const& solution() const = 0;
};

class FrameworkRunner : public ChoosingRunner {
 public:
  explicit FrameworkRunner(FrameworkConfig cfg) : cfg_(std::move(cfg)) {}
  void init(InstanceState const& initial) override { state_ = framework_init(cfg_, initial); }
  StepResult step(InstanceState const& before, Event const& event) override {
    auto [next, result] = framework_step(std::move(state_), cfg_, before, event);
    state_ = std::move(next);
    return result;
  }
  SolutionSet const& solution() const override { return state_.solution; }
  FrameworkState const& state() const { return state_; }

 private:
  FrameworkConfig cfg_;
  FrameworkState state_;
};

class CombinedRunner : public ChoosingRunner {
 public:
  explicit CombinedRunner(CombinedAlgorithm alg) : alg_(std::move(alg)) {}
  void init(InstanceState const& initial) override { state_ = combined_init(alg_, initial); }
  StepResult step(InstanceState const& before, Event const& event) override {
    auto [next, result] = combined_step(alg_, std::move(state_), before, event);
    state_ = std::move(next);
    return result;
  }
  SolutionSet const& solution() const override { return state_.solution; }
  FrameworkState const& state() const { return state_; }

 private:
  CombinedAlgorithm alg_;
  FrameworkState state_;
};

inline std::unique_ptr<ChoosingRunner> make_runner(FrameworkConfig const& cfg, std::string const& algorithm) {
  if (algorithm == "choosing-framework") return std::make_unique<FrameworkRunner>(cfg);
  auto alg = make_combined(cfg);
  if (algorithm == "combined") return std::make_unique<CombinedRunner>(alg);
  if (algorithm == "frozen") {
    alg.detector = never_detector();
    return std::make_unique<CombinedRunner>(alg);
  }
  if (algorithm == "every-step") {
    alg.detector = every_step_detector();
    return std::make_unique<CombinedRunner>(alg);
  }
  throw Error(ErrorCode::ParseError, "unknown algorithm '" + algorithm + "'");
}

inline TraceReport run_choosing(ChoosingStream const& stream, ChoosingRunner& runner, ScenarioMeta meta,
                                RunOptions const& options) {
  InstanceState instance = stream.initial_state();
  detail::TraceBuilder trace(std::move(meta), instance.time);
  auto opt_of = [&](InstanceState const& state) {
    return detail::bounded_opt(options.oracle, [&] { return opt_oracle(stream.problem, state, options.limits).profit; });
  };
  try {
    validate_stream(stream);
    runner.init(instance);
    if (stream.lax) trace.row(instance.time, "init", opt_of(instance), profit_of(runner.solution(), instance.objects), {});
    for (auto const& event : stream.events) {
      auto result = runner.step(instance, event);
      instance.apply(event);
      trace.row(event.t, detail::describe(event), opt_of(instance), profit_of(runner.solution(), instance.objects),
                result);
    }
  } catch (Error const& e) {
    trace.fail(e.what());
  }
  return trace.finish();
}

inline TraceReport run_mk(ChoosingStream const& stream, RunOptions const& options) {
  auto const& kind = std::get<MultipleKnapsackKind>(stream.problem);
  ScenarioMeta meta{kind_to_json(stream.problem), "mk-online", "exact", options.epsilon, Rational(1),
                    Metric::Profit};
  InstanceState instance = stream.initial_state();
  detail::TraceBuilder trace(std::move(meta), instance.time);
  auto offline = exact_packing_solver(options.limits);
  MKState state;
  try {
    if (stream.lax) throw Error(ErrorCode::UnsupportedEvent, "the multiple knapsack algorithm runs strict streams");
    validate_stream(stream);
    for (auto const& event : stream.events) {
      auto [next, result] = mk_step(std::move(state), kind, instance, event, options.epsilon, offline);
      state = std::move(next);
      instance.apply(event);
      auto opt = detail::bounded_opt(options.oracle, [&] { return opt_packing(kind, instance, options.limits).profit; });
      trace.row(event.t, detail::describe(event), opt, packing_profit(state.solution, instance.objects), result);
    }
  } catch (Error const& e) {
    trace.fail(e.what());
  }
  return trace.finish();
}

inline TraceReport run_is_edges(EdgeStream const& stream, RunOptions const& options) {
  ScenarioMeta meta{{{"kind", "mis"}, {"weighted", true}}, "is-online", "exact", options.epsilon, Rational(1),
                    Metric::Profit};
  EdgeArrivalInstance graph = stream.initial_state();
  detail::TraceBuilder trace(std::move(meta), 0);
  auto offline = exact_mis_solver(options.limits);
  try {
    ISState state = is_init(graph, offline);
    for (auto const& e : stream.events) {
      if (e.t != graph.time + 1) {
        throw Error(ErrorCode::TimeSkew, "edge at t=" + std::to_string(e.t) + " after t=" + std::to_string(graph.time));
      }
      auto [next, result] = is_edge_step(std::move(state), graph, normalized_edge(e.u, e.v), options.epsilon, offline);
      state = std::move(next);
      graph.add_edge(e.u, e.v);
      if (!graph.independent(state.solution)) throw Error(ErrorCode::StateDesync, "held set is not independent");
      auto opt = detail::bounded_opt(options.oracle, [&] { return mis_opt(graph, options.limits); });
      trace.row(e.t, "edge " + e.u + "-" + e.v, opt, vertex_weight_sum(state.solution, graph), result);
    }
  } catch (Error const& e) {
    trace.fail(e.what());
  }
  return trace.finish();
}

/// Runs any stream with the algorithm named in `options`. Multiple knapsack
/// streams always use the packing algorithm and edge streams the
/// independent-set one.
inline TraceReport run_scenario(Stream const& stream, RunOptions const& options) {
  require_unit_epsilon(options.epsilon);
  if (auto const* es = std::get_if<EdgeStream>(&stream)) return run_is_edges(*es, options);
  auto const& cs = std::get<ChoosingStream>(stream);
  if (is_multiple_knapsack(cs.problem)) return run_mk(cs, options);
  Metric metric = options.metric.value_or(cs.metric);
  auto cfg = make_framework_config(cs.problem, options.epsilon, options.solver, metric, options.limits);
  auto runner = make_runner(cfg, options.algorithm);
  ScenarioMeta meta{kind_to_json(cs.problem), options.algorithm, options.solver, options.epsilon, cfg.solver.rating,
                    metric};
  return run_choosing(cs, *runner, std::move(meta), options);
}

/// Bound-check defaults for an algorithm: Thm-2 style ratio and migration
/// bounds for the framework, the appendix constants for the two variants.
inline Claims default_claims(ScenarioMeta const& meta) {
  Claims c;
  Rational eps = meta.epsilon;
  if (meta.algorithm == "mk-online") {
    c.ratio_bound = 1 - 2 * eps;
    c.phase_migration_bound = 1 / (eps * (1 - eps)) + 1;
  } else if (meta.algorithm == "is-online") {
    c.ratio_bound = 1 - 2 * eps;
    c.phase_migration_bound = 2 / ((1 - eps) * eps);
  } else {
    Rational run_eps = meta.solver == "fptas" ? eps / 2 : eps;
    c.ratio_bound = meta.solver == "fptas" ? 1 - eps : (1 - run_eps) * meta.alpha;
    if (meta.metric == Metric::Profit) {
      c.phase_migration_bound = 2 / (meta.alpha * run_eps) + 1;
      c.total_migration_bound = c.phase_migration_bound;
    }
  }
  return c;
}

// Verification -------------------------------------------------------------------------

struct ClaimResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<std::int64_t> first_violation;
};

struct VerificationResult {
  std::vector<ClaimResult> claims;
  bool passed() const {
    return std::ranges::all_of(claims, [](ClaimResult const& c) { return c.passed; });
  }
};

inline VerificationResult verify_bounds(TraceReport const& report, Claims const& claims) {
  VerificationResult out;
  auto add = [&](std::string name, bool ok, std::string detail, std::optional<std::int64_t> at = std::nullopt) {
    out.claims.push_back({std::move(name), ok, std::move(detail), at});
  };

  add("completed", !report.failure, report.failure.value_or("trace ran to the end"));

  {
    Amount pot = 0;
    Amount cost = 0;
    std::optional<std::int64_t> bad;
    for (auto const& r : report.rows) {
      pot += r.potential;
      cost += r.cost;
      auto g = amortized(cost, pot);
      if (r.delta_cum != pot || r.cost_cum != cost || r.gamma != g.value || r.gamma_undefined != g.undefined) {
        bad = r.t;
        break;
      }
    }
    add("consistency", !bad, bad ? "cumulative columns disagree with the rows" : "gamma recomputed from rows", bad);
  }

  if (claims.metric) {
    bool ok = report.meta.metric == *claims.metric;
    add("metric", ok,
        ok ? to_string(*claims.metric)
           : std::string(to_string(ErrorCode::WrongMetric)) + ": trace measured " + to_string(report.meta.metric) +
                 ", expected " + to_string(*claims.metric));
  }

  if (claims.ratio_bound) {
    std::optional<std::int64_t> bad;
    std::int64_t skipped = 0;
    for (auto const& r : report.rows) {
      if (!r.opt) {
        ++skipped;
        continue;
      }
      if (!at_least(r.alg, *claims.ratio_bound, *r.opt)) {
        bad = r.t;
        break;
      }
    }
    std::string detail = "alg >= " + to_string(*claims.ratio_bound) + " * opt";
    if (bad) detail += " violated at t=" + std::to_string(*bad);
    if (skipped) detail += " (" + std::to_string(skipped) + " rows without opt skipped)";
    add("ratio_bound", !bad, detail, bad);
  }

  if (claims.phase_migration_bound) {
    std::optional<std::int64_t> bad;
    for (auto const& p : report.phases) {
      if (exceeds(p.cost, *claims.phase_migration_bound, p.potential)) {
        bad = p.end;
        break;
      }
    }
    std::string detail = "phase cost <= " + to_string(*claims.phase_migration_bound) + " * phase potential";
    if (bad) detail += " violated by the phase ending at t=" + std::to_string(*bad);
    add("phase_migration_bound", !bad, detail, bad);
  }

  if (claims.total_migration_bound) {
    std::optional<std::int64_t> bad;
    for (auto const& r : report.rows) {
      if (exceeds(r.cost_cum, *claims.total_migration_bound, r.delta_cum)) {
        bad = r.t;
        break;
      }
    }
    std::string detail = "cost_cum <= " + to_string(*claims.total_migration_bound) + " * delta_cum";
    if (bad) detail += " violated at t=" + std::to_string(*bad);
    add("total_migration_bound", !bad, detail, bad);
  }

  auto const& final_gamma = report.summary.final_gamma;
  if (claims.expected_gamma) {
    Rational diff = final_gamma - *claims.expected_gamma;
    if (diff < 0) diff = -diff;
    bool ok = !report.summary.final_gamma_undefined && diff <= claims.gamma_tolerance * *claims.expected_gamma;
    add("expected_gamma", ok,
        "measured " + to_string(final_gamma) + " (" + std::to_string(to_double(final_gamma)) + "), expected " +
            to_string(*claims.expected_gamma) + " within relative " + to_string(claims.gamma_tolerance));
  }

  if (claims.gamma_at_least) {
    bool ok = !report.summary.final_gamma_undefined && final_gamma >= *claims.gamma_at_least;
    add("gamma_at_least", ok,
        "measured " + std::to_string(to_double(final_gamma)) + " >= " + to_string(*claims.gamma_at_least));
  }

  if (claims.opt_sequence) {
    auto const& seq = *claims.opt_sequence;
    std::optional<std::int64_t> bad;
    bool length_ok = seq.size() == report.rows.size();
    for (std::size_t i = 0; i < std::min(seq.size(), report.rows.size()); ++i) {
      if (report.rows[i].opt != seq[i]) {
        bad = report.rows[i].t;
        break;
      }
    }
    bool ok = length_ok && !bad;
    std::string detail = ok ? "opt matches at every row" : "opt sequence mismatch";
    if (bad) detail += " at t=" + std::to_string(*bad);
    if (!length_ok) detail += " (length " + std::to_string(report.rows.size()) + " vs " + std::to_string(seq.size()) + ")";
    add("opt_sequence", ok, detail, bad);
  }
  return out;
}

// Serialisation -------------------------------------------------------------------------

namespace detail {

inline nlohmann::ordered_json rational_or_null(std::optional<Rational> const& r) {
  return r ? nlohmann::ordered_json(to_string(*r)) : nlohmann::ordered_json(nullptr);
}

inline std::optional<Rational> read_rational(nlohmann::ordered_json const& j) {
  if (j.is_null()) return std::nullopt;
  return parse_rational(j.get<std::string>());
}

inline std::string fixed6(Rational const& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
  return buf;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(TraceReport const& report) {
  using J = nlohmann::ordered_json;
  J j;
  j["meta"] = {{"problem", report.meta.problem},
               {"algorithm", report.meta.algorithm},
               {"solver", report.meta.solver},
               {"epsilon", to_string(report.meta.epsilon)},
               {"alpha", to_string(report.meta.alpha)},
               {"metric", to_string(report.meta.metric)}};
  j["rows"] = J::array();
  for (auto const& r : report.rows) {
    J row;
    row["t"] = r.t;
    row["event"] = r.event;
    row["opt"] = r.opt ? J(*r.opt) : J(nullptr);
    row["alg"] = r.alg;
    row["ratio"] = detail::rational_or_null(r.ratio);
    row["delta_cum"] = r.delta_cum;
    row["cost_cum"] = r.cost_cum;
    row["gamma"] = to_string(r.gamma);
    row["gamma_undefined"] = r.gamma_undefined;
    row["phase"] = r.phase;
    row["repacked"] = r.repacked;
    row["cost"] = r.cost;
    row["potential"] = r.potential;
    j["rows"].push_back(std::move(row));
  }
  j["phases"] = J::array();
  for (auto const& p : report.phases) {
    j["phases"].push_back({{"start", p.start}, {"end", p.end}, {"potential", p.potential}, {"cost", p.cost}});
  }
  auto const& s = report.summary;
  j["summary"] = {{"min_ratio", detail::rational_or_null(s.min_ratio)},
                  {"max_phase_gamma", detail::rational_or_null(s.max_phase_gamma)},
                  {"final_gamma", to_string(s.final_gamma)},
                  {"final_gamma_undefined", s.final_gamma_undefined},
                  {"opt_unavailable", s.opt_unavailable},
                  {"repacks", s.repacks}};
  j["failure"] = report.failure ? J(*report.failure) : J(nullptr);
  return j;
}

inline TraceReport report_from_json(nlohmann::ordered_json const& j) {
  try {
    TraceReport report;
    auto const& m = j.at("meta");
    report.meta.problem = m.at("problem");
    report.meta.algorithm = m.at("algorithm").get<std::string>();
    report.meta.solver = m.at("solver").get<std::string>();
    report.meta.epsilon = parse_rational(m.at("epsilon").get<std::string>());
    report.meta.alpha = parse_rational(m.at("alpha").get<std::string>());
    report.meta.metric = metric_from_string(m.at("metric").get<std::string>());
    for (auto const& row : j.at("rows")) {
      TraceRow r;
      r.t = row.at("t").get<std::int64_t>();
      r.event = row.at("event").get<std::string>();
      if (!row.at("opt").is_null()) r.opt = row.at("opt").get<Amount>();
      r.alg = row.at("alg").get<Amount>();
      r.ratio = detail::read_rational(row.at("ratio"));
      r.delta_cum = row.at("delta_cum").get<Amount>();
      r.cost_cum = row.at("cost_cum").get<Amount>();
      r.gamma = parse_rational(row.at("gamma").get<std::string>());
      r.gamma_undefined = row.at("gamma_undefined").get<bool>();
      r.phase = row.at("phase").get<std::int64_t>();
      r.repacked = row.at("repacked").get<bool>();
      r.cost = row.at("cost").get<Amount>();
      r.potential = row.at("potential").get<Amount>();
      report.rows.push_back(std::move(r));
    }
    for (auto const& p : j.at("phases")) {
      report.phases.push_back({p.at("start").get<std::int64_t>(), p.at("end").get<std::int64_t>(),
                               p.at("potential").get<Amount>(), p.at("cost").get<Amount>()});
    }
    auto const& s = j.at("summary");
    report.summary.min_ratio = detail::read_rational(s.at("min_ratio"));
    report.summary.max_phase_gamma = detail::read_rational(s.at("max_phase_gamma"));
    report.summary.final_gamma = parse_rational(s.at("final_gamma").get<std::string>());
    report.summary.final_gamma_undefined = s.at("final_gamma_undefined").get<bool>();
    report.summary.opt_unavailable = s.at("opt_unavailable").get<std::int64_t>();
    report.summary.repacks = s.at("repacks").get<std::int64_t>();
    if (!j.at("failure").is_null()) report.failure = j.at("failure").get<std::string>();
    return report;
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
  }
}

inline std::string report_to_csv(TraceReport const& report) {
  std::ostringstream out;
  out << "t,event,opt,alg,ratio,delta_cum,cost_cum,gamma,phase\n";
  for (auto const& r : report.rows) {
    out << r.t << ',' << r.event << ',';
    if (r.opt) out << *r.opt;
    out << ',' << r.alg << ',';
    if (r.ratio) out << detail::fixed6(*r.ratio);
    out << ',' << r.delta_cum << ',' << r.cost_cum << ',' << detail::fixed6(r.gamma) << ',' << r.phase << '\n';
  }
  return out.str();
}

enum class ReportFormat { Csv, Json };

inline void export_report(TraceReport const& report, ReportFormat format, std::string const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot write '" + path + "'");
  if (format == ReportFormat::Csv) out << report_to_csv(report);
  else out << report_to_json(report).dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IOError, "write to '" + path + "' failed");
}

inline TraceReport load_report(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot open '" + path + "'");
  try {
    return report_from_json(nlohmann::ordered_json::parse(in));
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

// Parallel runner ---------------------------------------------------------------------

/// Runs independent jobs on up to `threads` workers; results keep job order.
template <typename T>
std::vector<T> run_parallel(std::vector<std::function<T()>> const& jobs, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::optional<T>> slots(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        slots[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<T> results;
  results.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    results.push_back(std::move(*slots[i]));
  }
  return results;
}

}  // namespace migrate

#endif  // MIGRATE_HARNESS_HPP
