#ifndef MIGRATE_CLI_HPP
#define MIGRATE_CLI_HPP

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "migrate/acceptance.hpp"
#include "migrate/adversary.hpp"
#include "migrate/claims.hpp"
#include "migrate/config.hpp"
#include "migrate/harness.hpp"
#include "migrate/random_streams.hpp"
#include "migrate/stream.hpp"

namespace migrate {

namespace cli {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct GenArgs {
  std::string construction;
  std::string epsilon = "1/10";
  std::int64_t N = 1000;
  int T = 5;
  Amount C = 100;
  std::string variant = "static";
  std::string metric = "weight";
  std::uint64_t seed = 0;
  std::string out = "stream.jsonl";
  std::string expected;
  bool no_check = false;
};

inline GeneratedScenario random_scenario(std::string const& name, std::uint64_t seed, Rational eps) {
  Stream stream;
  ScenarioMeta meta;
  meta.epsilon = eps;
  meta.algorithm = "choosing-framework";
  meta.solver = "exact";
  if (name == "random-subsetsum") {
    stream = random_subsetsum_stream(seed);
  } else if (name == "random-knapsack") {
    stream = random_knapsack_stream(seed);
  } else if (name == "random-mkp") {
    stream = random_mkp_stream(seed);
    meta.algorithm = "mk-online";
  } else {
    stream = random_grid_edge_stream(seed);
    meta.algorithm = "is-online";
  }
  ExpectedFile e;
  e.construction = name;
  e.params = {{"seed", seed}};
  e.run.epsilon = eps;
  e.claims = default_claims(meta);
  return {std::move(stream), std::move(e)};
}

inline GeneratedScenario generate(GenArgs const& a) {
  Rational eps = parse_rational(a.epsilon);
  bool check = !a.no_check;
  auto const& c = a.construction;
  if (c == "strict-static") return gen_strict_static_subsetsum(a.T, check);
  if (c == "lax-static") return gen_lax_static_subsetsum(eps, check);
  if (c == "strict-dynamic") return gen_strict_dynamic_subsetsum(eps, a.N, check);
  if (c == "mis-bipartite") return gen_mis_bipartite(eps, a.N, check);
  if (c == "mis-path") return gen_mis_weighted_path(eps, a.N, check);
  if (c == "weight-migration") {
    if (a.variant != "static" && a.variant != "dynamic") {
      throw Error(ErrorCode::ParseError, "variant must be static or dynamic");
    }
    return gen_weight_migration_knapsack(a.C, a.variant == "static" ? 0 : a.N, metric_from_string(a.metric), eps,
                                         check);
  }
  if (c == "alternating") return gen_subsetsum_alternating_fixture(a.N, 1 - eps, check);
  if (c.starts_with("random-")) return random_scenario(c, a.seed, eps);
  throw Error(ErrorCode::ParseError, "unknown construction '" + c + "'");
}

inline std::string sidecar_path(std::string const& out) {
  auto dir = std::filesystem::path(out).parent_path();
  return (dir / "expected.json").string();
}

inline void print_verification(VerificationResult const& v, std::ostream& out) {
  for (auto const& c : v.claims) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  out << (v.passed() ? "all claims hold\n" : "verification failed\n");
}

inline void print_summary(TraceReport const& r, std::ostream& out) {
  auto const& s = r.summary;
  out << r.meta.algorithm << " eps=" << to_string(r.meta.epsilon) << " metric=" << to_string(r.meta.metric)
      << " rows=" << r.rows.size() << " repacks=" << s.repacks << " final_gamma=" << to_string(s.final_gamma);
  if (s.final_gamma_undefined) out << " (undefined)";
  if (s.min_ratio) out << " min_ratio=" << to_string(*s.min_ratio);
  if (s.max_phase_gamma) out << " max_phase_gamma=" << to_string(*s.max_phase_gamma);
  if (s.opt_unavailable) out << " opt_unavailable=" << s.opt_unavailable;
  out << '\n';
  if (r.failure) out << "failure: " << *r.failure << '\n';
}

}  // namespace cli

/// Entry point of the command-line tool. Returns 0 on success, 1 when a
/// verification fails and 2 on usage or input errors.
inline int dispatch(int argc, char const* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Online choosing-problem simulator with migration accounting"};
  app.name("migrate_bench");
  app.require_subcommand(1);

  cli::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a lower-bound or random stream plus expected.json");
  gen_cmd->add_option("--construction", gen.construction,
                      "strict-static|lax-static|strict-dynamic|mis-bipartite|mis-path|weight-migration|alternating|"
                      "random-subsetsum|random-knapsack|random-mkp|random-grid")
      ->required();
  gen_cmd->add_option("--epsilon", gen.epsilon, "Epsilon as a rational string such as 1/10")->capture_default_str();
  gen_cmd->add_option("--N", gen.N, "Toggle cycles (events for weight-migration dynamic)")->capture_default_str();
  gen_cmd->add_option("--T", gen.T, "Horizon of the strict-static construction")->capture_default_str();
  gen_cmd->add_option("--C", gen.C, "Capacity of the weight-migration construction")->capture_default_str();
  gen_cmd->add_option("--variant", gen.variant, "static|dynamic (weight-migration)")->capture_default_str();
  gen_cmd->add_option("--metric", gen.metric, "Ledger metric for weight-migration")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for random-* constructions")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Stream output path")->capture_default_str();
  gen_cmd->add_option("--expected", gen.expected, "Sidecar path (default: expected.json next to --out)");
  gen_cmd->add_flag("--no-check", gen.no_check, "Skip the oracle self-check");

  RunConfig run;
  std::string run_config_path, run_save_config, run_epsilon = "1/10", run_metric, oracle_limit;
  bool no_oracle = false;
  auto* run_cmd = app.add_subcommand("run", "Run an algorithm over a stream and write a trace report");
  run_cmd->add_option("--stream", run.stream, "Stream file (JSONL)");
  run_cmd->add_option("--algorithm", run.algorithm, "choosing-framework|combined|frozen|every-step")
      ->capture_default_str();
  run_cmd->add_option("--epsilon", run_epsilon, "Epsilon as a rational string")->capture_default_str();
  run_cmd->add_option("--solver", run.solver, "exact|fptas")->capture_default_str();
  run_cmd->add_option("--metric", run_metric, "profit|weight (default: the stream's)");
  run_cmd->add_option("--seed", run.seed, "Recorded seed")->capture_default_str();
  run_cmd->add_option("--out", run.out, "JSON report path")->capture_default_str();
  run_cmd->add_option("--csv", run.csv, "Also write the CSV trace here");
  run_cmd->add_option("--config", run_config_path, "Read settings from a config file");
  run_cmd->add_option("--save-config", run_save_config, "Write the effective config here");
  run_cmd->add_option("--oracle-limit", oracle_limit, "Oracle caps, e.g. enum=24,dp=10000000");
  run_cmd->add_flag("--no-oracle", no_oracle, "Skip the OPT column");

  std::string verify_report, verify_expected;
  auto* verify_cmd = app.add_subcommand("verify", "Check a report against expected.json claims");
  verify_cmd->add_option("--report", verify_report, "Report JSON")->required();
  verify_cmd->add_option("--expected", verify_expected, "expected.json (default: the algorithm's own bounds)");

  std::string report_path, report_csv, report_json;
  auto* report_cmd = app.add_subcommand("report", "Summarise a report and export it");
  report_cmd->add_option("--report", report_path, "Report JSON")->required();
  report_cmd->add_option("--csv", report_csv, "CSV output path");
  report_cmd->add_option("--json", report_json, "JSON output path");

  SuiteOptions suite;
  std::vector<int> only;
  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance battery");
  suite_cmd->add_flag("--quick", suite.quick, "Use a tenth of the random streams");
  suite_cmd->add_option("--threads", suite.threads, "Worker threads")->capture_default_str();
  suite_cmd->add_option("--only", only, "Criterion numbers to run");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    if (*gen_cmd) {
      auto scenario = cli::generate(gen);
      save_stream(gen.out, scenario.stream);
      auto sidecar = gen.expected.empty() ? cli::sidecar_path(gen.out) : gen.expected;
      save_expected(sidecar, scenario.expected);
      out << "wrote " << gen.out << " and " << sidecar << '\n';
      return cli::kOk;
    }

    if (*run_cmd) {
      if (!run_config_path.empty()) {
        auto from_file = load_config(run_config_path);
        // Explicit flags win over the file.
        if (run_cmd->count("--stream")) from_file.stream = run.stream;
        if (run_cmd->count("--out")) from_file.out = run.out;
        if (run_cmd->count("--csv")) from_file.csv = run.csv;
        if (run_cmd->count("--algorithm")) from_file.algorithm = run.algorithm;
        if (run_cmd->count("--solver")) from_file.solver = run.solver;
        if (run_cmd->count("--seed")) from_file.seed = run.seed;
        if (run_cmd->count("--epsilon")) from_file.epsilon = parse_rational(run_epsilon);
        if (!run_metric.empty()) from_file.metric = metric_from_string(run_metric);
        run = from_file;
      } else {
        run.epsilon = parse_rational(run_epsilon);
        if (!run_metric.empty()) run.metric = metric_from_string(run_metric);
        run.limits = OracleLimits::from_env();
      }
      if (!oracle_limit.empty()) run.limits = OracleLimits::parse(oracle_limit, run.limits);
      run.validate();
      if (run.stream.empty()) throw Error(ErrorCode::ParseError, "run needs --stream");
      if (!run_save_config.empty()) save_config(run_save_config, run);

      auto stream = load_stream(run.stream);
      if (run.problem) {
        auto const* cs = std::get_if<ChoosingStream>(&stream);
        if (!cs || !(cs->problem == *run.problem)) {
          throw Error(ErrorCode::PayloadMismatch, "stream problem differs from the configured one");
        }
      }
      auto options = run.run_options();
      options.oracle = !no_oracle;
      auto report = run_scenario(stream, options);
      export_report(report, ReportFormat::Json, run.out);
      if (!run.csv.empty()) export_report(report, ReportFormat::Csv, run.csv);
      cli::print_summary(report, out);
      return report.failure ? cli::kVerifyFailed : cli::kOk;
    }

    if (*verify_cmd) {
      auto report = load_report(verify_report);
      Claims claims = verify_expected.empty() ? default_claims(report.meta) : load_expected(verify_expected).claims;
      auto v = verify_bounds(report, claims);
      cli::print_verification(v, out);
      return v.passed() ? cli::kOk : cli::kVerifyFailed;
    }

    if (*report_cmd) {
      auto report = load_report(report_path);
      cli::print_summary(report, out);
      if (!report_csv.empty()) export_report(report, ReportFormat::Csv, report_csv);
      if (!report_json.empty()) export_report(report, ReportFormat::Json, report_json);
      return cli::kOk;
    }

    if (*suite_cmd) {
      bool all = true;
      auto criteria = acceptance_criteria();
      for (std::size_t k = 0; k < criteria.size(); ++k) {
        int id = static_cast<int>(k) + 1;
        if (!only.empty() && std::ranges::find(only, id) == only.end()) continue;
        auto result = criteria[k](suite);
        all = all && result.passed;
        out << format_result(result) << std::endl;
      }
      out << (all ? "suite: all criteria pass\n" : "suite: some criteria fail\n");
      return all ? cli::kOk : cli::kVerifyFailed;
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  return cli::kUsage;
}

}  // namespace migrate

#endif  // MIGRATE_CLI_HPP
