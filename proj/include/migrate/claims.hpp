#ifndef MIGRATE_CLAIMS_HPP
#define MIGRATE_CLAIMS_HPP

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "migrate/error.hpp"
#include "migrate/model.hpp"
#include "migrate/rational.hpp"
#include "migrate/stream.hpp"

namespace migrate {

/// Bounds a trace is checked against. Unset fields are not checked.
struct Claims {
  std::optional<Rational> ratio_bound;
  std::optional<Rational> phase_migration_bound;
  std::optional<Rational> total_migration_bound;
  std::optional<Rational> expected_gamma;
  Rational gamma_tolerance{0};  // relative; 0 demands equality
  std::optional<Rational> gamma_at_least;
  std::optional<std::vector<Amount>> opt_sequence;
  std::optional<Metric> metric;

  bool operator==(Claims const&) const = default;
};

/// How a generated stream is meant to be run.
struct RunSettings {
  std::string algorithm = "choosing-framework";
  Rational epsilon{1, 10};
  std::string solver = "exact";

  bool operator==(RunSettings const&) const = default;
};

/// Contents of an expected.json sidecar.
struct ExpectedFile {
  std::string construction;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  RunSettings run;
  Claims claims;
  nlohmann::ordered_json predictions = nlohmann::ordered_json::object();

  bool operator==(ExpectedFile const&) const = default;
};

namespace detail {

template <typename Json>
std::optional<Rational> optional_rational(Json const& j, char const* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  auto const& v = j.at(key);
  if (v.is_string()) return parse_rational(v.template get<std::string>());
  if (v.is_number_integer()) return Rational(v.template get<std::int64_t>());
  throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be a rational string");
}

}  // namespace detail

inline nlohmann::ordered_json claims_to_json(Claims const& c) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  auto put = [&](char const* key, std::optional<Rational> const& r) {
    if (r) j[key] = to_string(*r);
  };
  put("ratio_bound", c.ratio_bound);
  put("phase_migration_bound", c.phase_migration_bound);
  put("total_migration_bound", c.total_migration_bound);
  put("expected_gamma", c.expected_gamma);
  if (c.expected_gamma) j["gamma_tolerance"] = to_string(c.gamma_tolerance);
  put("gamma_at_least", c.gamma_at_least);
  if (c.opt_sequence) j["opt_sequence"] = *c.opt_sequence;
  if (c.metric) j["metric"] = to_string(*c.metric);
  return j;
}

template <typename Json>
Claims claims_from_json(Json const& j) {
  Claims c;
  c.ratio_bound = detail::optional_rational(j, "ratio_bound");
  c.phase_migration_bound = detail::optional_rational(j, "phase_migration_bound");
  c.total_migration_bound = detail::optional_rational(j, "total_migration_bound");
  c.expected_gamma = detail::optional_rational(j, "expected_gamma");
  c.gamma_tolerance = detail::optional_rational(j, "gamma_tolerance").value_or(Rational(0));
  c.gamma_at_least = detail::optional_rational(j, "gamma_at_least");
  if (j.contains("opt_sequence")) c.opt_sequence = j.at("opt_sequence").template get<std::vector<Amount>>();
  if (j.contains("metric")) c.metric = metric_from_string(j.at("metric").template get<std::string>());
  return c;
}

inline nlohmann::ordered_json expected_to_json(ExpectedFile const& e) {
  nlohmann::ordered_json j;
  j["construction"] = e.construction;
  j["params"] = e.params;
  j["run"] = {{"algorithm", e.run.algorithm}, {"epsilon", to_string(e.run.epsilon)}, {"solver", e.run.solver}};
  j["claims"] = claims_to_json(e.claims);
  j["predictions"] = e.predictions;
  return j;
}

inline ExpectedFile expected_from_json(nlohmann::ordered_json const& j) {
  try {
    ExpectedFile e;
    e.construction = j.value("construction", std::string());
    if (j.contains("params")) e.params = j.at("params");
    if (j.contains("run")) {
      auto const& r = j.at("run");
      e.run.algorithm = r.value("algorithm", e.run.algorithm);
      e.run.solver = r.value("solver", e.run.solver);
      e.run.epsilon = detail::optional_rational(r, "epsilon").value_or(e.run.epsilon);
    }
    if (j.contains("claims")) e.claims = claims_from_json(j.at("claims"));
    if (j.contains("predictions")) e.predictions = j.at("predictions");
    return e;
  } catch (nlohmann::json::exception const& ex) {
    throw Error(ErrorCode::ParseError, std::string("expected file: ") + ex.what());
  }
}

inline ExpectedFile load_expected(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot open '" + path + "'");
  try {
    return expected_from_json(nlohmann::ordered_json::parse(in));
  } catch (nlohmann::json::exception const& ex) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + ex.what());
  }
}

inline void save_expected(std::string const& path, ExpectedFile const& e) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IOError, "cannot write '" + path + "'");
  out << expected_to_json(e).dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IOError, "write to '" + path + "' failed");
}

}  // namespace migrate

#endif  // MIGRATE_CLAIMS_HPP
