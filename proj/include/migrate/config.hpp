#ifndef MIGRATE_CONFIG_HPP
#define MIGRATE_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "migrate/error.hpp"
#include "migrate/harness.hpp"
#include "migrate/problems.hpp"
#include "migrate/rational.hpp"
#include "migrate/stream.hpp"

namespace migrate {

struct RunConfig {
  std::optional<ProblemKind> problem;  // when set, the stream header must agree
  std::string algorithm = "choosing-framework";
  Rational epsilon{1, 10};
  std::string solver = "exact";
  std::optional<Metric> metric;
  std::uint64_t seed = 0;
  OracleLimits limits = OracleLimits{};
  std::string stream;
  std::string out = "report.json";
  std::string csv;

  bool operator==(RunConfig const&) const = default;

  void validate() const {
    require_unit_epsilon(epsilon);
    if (problem) validate_kind(*problem);
    static constexpr char const* algorithms[] = {"choosing-framework", "combined", "frozen", "every-step"};
    if (std::ranges::find(algorithms, algorithm) == std::end(algorithms)) {
      throw Error(ErrorCode::ParseError, "unknown algorithm '" + algorithm + "'");
    }
    if (solver != "exact" && solver != "fptas") throw Error(ErrorCode::ParseError, "unknown solver '" + solver + "'");
  }

  RunOptions run_options() const {
    RunOptions o;
    o.algorithm = algorithm;
    o.epsilon = epsilon;
    o.solver = solver;
    o.limits = limits;
    o.metric = metric;
    return o;
  }
};

inline nlohmann::ordered_json config_to_json(RunConfig const& c) {
  nlohmann::ordered_json j;
  if (c.problem) j["problem"] = kind_to_json(*c.problem);
  j["algorithm"] = c.algorithm;
  j["epsilon"] = to_string(c.epsilon);
  j["solver"] = c.solver;
  if (c.metric) j["metric"] = to_string(*c.metric);
  j["seed"] = c.seed;
  j["oracle_limits"] = {{"enum", c.limits.enumeration_n},
                        {"dp", c.limits.dp_cells},
                        {"mkp_n", c.limits.mkp_n},
                        {"mkp_m", c.limits.mkp_m}};
  j["stream"] = c.stream;
  j["out"] = c.out;
  j["csv"] = c.csv;
  return j;
}

inline RunConfig config_from_json(nlohmann::json const& j) {
  try {
    RunConfig c;
    if (j.contains("problem")) c.problem = kind_from_json(j.at("problem"));
    c.algorithm = j.value("algorithm", c.algorithm);
    if (j.contains("epsilon")) {
      if (!j.at("epsilon").is_string()) throw Error(ErrorCode::ParseError, "epsilon must be a rational string");
      c.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    }
    c.solver = j.value("solver", c.solver);
    if (j.contains("metric")) c.metric = metric_from_string(j.at("metric").get<std::string>());
    c.seed = j.value("seed", c.seed);
    if (j.contains("oracle_limits")) {
      auto const& l = j.at("oracle_limits");
      c.limits.enumeration_n = l.value("enum", c.limits.enumeration_n);
      c.limits.dp_cells = l.value("dp", c.limits.dp_cells);
      c.limits.mkp_n = l.value("mkp_n", c.limits.mkp_n);
      c.limits.mkp_m = l.value("mkp_m", c.limits.mkp_m);
    }
    c.stream = j.value("stream", c.stream);
    c.out = j.value("out", c.out);
    c.csv = j.value("csv", c.csv);
    c.validate();
    return c;
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
}

inline RunConfig load_config(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot open '" + path + "'");
  try {
    return config_from_json(nlohmann::json::parse(in));
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

inline void save_config(std::string const& path, RunConfig const& c) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IOError, "cannot write '" + path + "'");
  out << config_to_json(c).dump(2) << '\n';
}

}  // namespace migrate

#endif  // MIGRATE_CONFIG_HPP
