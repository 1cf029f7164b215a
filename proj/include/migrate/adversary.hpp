#ifndef MIGRATE_ADVERSARY_HPP
#define MIGRATE_ADVERSARY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "migrate/claims.hpp"
#include "migrate/error.hpp"
#include "migrate/model.hpp"
#include "migrate/problems.hpp"
#include "migrate/rational.hpp"
#include "migrate/stream.hpp"

namespace migrate {

struct GeneratedScenario {
  Stream stream;
  ExpectedFile expected;
};

namespace detail {

inline ObjectId vid(std::int64_t k) { return "v" + std::to_string(k); }

inline ChoosingObject sized(ObjectId id, Amount size) { return {std::move(id), size, SizePayload{size}}; }

inline ChoosingObject node(ObjectId id, Amount profit, std::vector<ObjectId> neighbors = {}) {
  return {std::move(id), profit, NeighborPayload{std::move(neighbors)}};
}

/// floor(1/eps - 1), the capacity of the SubsetSum constructions.
inline Amount subsetsum_capacity(Rational const& eps) {
  require_unit_epsilon(eps);
  return (eps.denominator() - eps.numerator()) / eps.numerator();
}

/// 2 * ceil(1/(3 eps)), the scale of both MIS constructions.
inline Amount mis_scale(Rational const& eps) {
  require_unit_epsilon(eps);
  auto num = eps.denominator();
  auto den = 3 * eps.numerator();
  return 2 * ((num + den - 1) / den);
}

inline Claims framework_claims(Rational const& eps) {
  Claims c;
  c.ratio_bound = 1 - eps;
  c.phase_migration_bound = 2 / eps + 1;
  c.total_migration_bound = c.phase_migration_bound;
  return c;
}

inline nlohmann::ordered_json set_json(SolutionSet const& s) { return nlohmann::ordered_json(std::vector<ObjectId>(s.begin(), s.end())); }

/// Replays a choosing stream and compares the oracle's optimum with the
/// predicted sequence (one entry per trace row, lax init row included).
inline void self_check(ChoosingStream const& stream, std::vector<Amount> const& predicted, std::string const& name) {
  validate_stream(stream);
  InstanceState state = stream.initial_state();
  std::size_t row = 0;
  auto compare = [&](std::int64_t t) {
    auto opt = opt_oracle(stream.problem, state).profit;
    if (row >= predicted.size() || predicted[row] != opt) {
      throw Error(ErrorCode::StateDesync, name + " self-check: oracle opt " + std::to_string(opt) + " at t=" +
                                              std::to_string(t) + " disagrees with the closed form");
    }
    ++row;
  };
  if (stream.lax) compare(state.time);
  for (auto const& e : stream.events) {
    state.apply(e);
    compare(e.t);
  }
  if (row != predicted.size()) throw Error(ErrorCode::StateDesync, name + " self-check: sequence length mismatch");
}

}  // namespace detail

// Strict static SubsetSum -------------------------------------------------------------

inline std::int64_t strict_static_capacity(int T) { return std::int64_t{1} << T; }

inline Amount strict_static_size(int T, int t) {
  return t == 1 ? (Amount{1} << (T - 1)) : 3 * (Amount{1} << (T - t));
}

inline Amount strict_static_opt(int T, int t) { return (Amount{1} << T) - (Amount{1} << (T - t)); }

/// Items of the same parity as t: the unique optimum after t arrivals.
inline SolutionSet strict_static_solution(int t) {
  SolutionSet s;
  for (int k = t; k >= 1; k -= 2) s.insert(detail::vid(k));
  return s;
}

/// sum_{t<T} OPT_t / (s_1 + sum_{t>=2} s_t).
inline Rational strict_static_closed_form(int T) {
  Amount num = 0;
  for (int t = 1; t <= T - 1; ++t) num += strict_static_opt(T, t);
  Amount den = 0;
  for (int t = 1; t <= T; ++t) den += strict_static_size(T, t);
  return {num, den};
}

/// Largest T for which a (1 - eps)-competitive algorithm is forced through
/// the alternation: floor(log2((2 - a)/(1 - a)) - 1) with a = 1 - eps.
inline int strict_static_horizon(Rational const& eps) {
  require_unit_epsilon(eps);
  Rational x = (1 + eps) / eps;
  int k = 0;
  while (Rational(std::int64_t{1} << (k + 1)) <= x) ++k;
  return k - 1;
}

inline void require_T(int T) {
  if (T < 1 || T > 30) throw Error(ErrorCode::InvalidT, "T must lie in [1,30], got " + std::to_string(T));
}

inline ChoosingStream strict_static_stream(int T) {
  require_T(T);
  ChoosingStream s;
  s.problem = SubsetSumKind{strict_static_capacity(T)};
  for (int t = 1; t <= T; ++t) s.add(detail::sized(detail::vid(t), strict_static_size(T, t)));
  return s;
}

/// Migration factor of the forced alternation under this library's cost
/// rules (symmetric difference, first arrivals free).
inline Rational strict_static_forced_gamma(int T) {
  auto stream = strict_static_stream(T);
  ObjectTable objects;
  SolutionSet prev;
  Amount cost = 0;
  Amount potential = 0;
  for (int t = 1; t <= T; ++t) {
    auto const& obj = std::get<Arrival>(stream.events[t - 1].kind).object;
    objects.emplace(obj.id, obj);
    auto next = strict_static_solution(t);
    cost += migration_cost(prev, next, objects, Metric::Profit, obj.id);
    potential += obj.profit;
    prev = std::move(next);
  }
  return {cost, potential};
}

/// Number of optimal subsets of the first t items (exhaustive).
inline int strict_static_optimum_count(int T, int t) {
  Amount cap = strict_static_capacity(T);
  Amount best = -1;
  int count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    Amount total = 0;
    for (int k = 0; k < t; ++k)
      if ((mask >> k) & 1U) total += strict_static_size(T, k + 1);
    if (total > cap) continue;
    if (total > best) {
      best = total;
      count = 1;
    } else if (total == best) {
      ++count;
    }
  }
  return count;
}

inline GeneratedScenario gen_strict_static_subsetsum(int T, bool check = true) {
  auto stream = strict_static_stream(T);
  std::vector<Amount> opt;
  nlohmann::ordered_json forced = nlohmann::ordered_json::array();
  for (int t = 1; t <= T; ++t) {
    opt.push_back(strict_static_opt(T, t));
    forced.push_back(detail::set_json(strict_static_solution(t)));
  }
  if (check) {
    detail::self_check(stream, opt, "strict-static");
    if (T <= 16) {
      for (int t = 1; t <= T; ++t)
        if (strict_static_optimum_count(T, t) != 1) {
          throw Error(ErrorCode::StateDesync, "strict-static self-check: optimum not unique at t=" + std::to_string(t));
        }
    }
  }
  // Below the horizon's epsilon every step is a repacking time.
  Rational eps(1, std::int64_t{1} << std::min(T + 1, 62));
  ExpectedFile e;
  e.construction = "strict-static";
  e.params = {{"T", T}, {"C", strict_static_capacity(T)}};
  e.run.epsilon = eps;
  e.claims = detail::framework_claims(eps);
  e.claims.opt_sequence = opt;
  e.claims.gamma_at_least = strict_static_closed_form(T);
  e.claims.expected_gamma = strict_static_forced_gamma(T);
  e.predictions = {{"forced_solutions", forced},
                   {"closed_form_gamma", to_string(strict_static_closed_form(T))},
                   {"forced_trace_gamma", to_string(strict_static_forced_gamma(T))}};
  return {std::move(stream), std::move(e)};
}

// Lax static and strict dynamic SubsetSum ---------------------------------------------

inline Amount require_subsetsum_capacity(Rational const& eps) {
  Amount C = detail::subsetsum_capacity(eps);
  if (C < 4) {
    throw Error(ErrorCode::EpsilonTooLarge, "epsilon " + to_string(eps) + " gives C=" + std::to_string(C) + " < 4");
  }
  return C;
}

inline GeneratedScenario gen_lax_static_subsetsum(Rational const& eps, bool check = true) {
  Amount C = require_subsetsum_capacity(eps);
  ChoosingStream s;
  s.problem = SubsetSumKind{C};
  s.lax = true;
  s.initial = {detail::sized("v1", C - 2), detail::sized("v2", C - 1)};
  s.add(detail::sized("v3", 2));
  std::vector<Amount> opt{C - 1, C};
  if (check) detail::self_check(s, opt, "lax-static");

  ExpectedFile e;
  e.construction = "lax-static";
  e.params = {{"epsilon", to_string(eps)}, {"C", C}};
  e.run.epsilon = eps;
  e.claims = detail::framework_claims(eps);
  e.claims.opt_sequence = opt;
  e.claims.expected_gamma = Rational(2 * C - 3, 2);
  e.predictions = {{"forced_solutions", {{"v2"}, {"v1", "v3"}}},
                   {"closed_form_gamma", to_string(Rational(2 * C - 3, 2))}};
  return {std::move(s), std::move(e)};
}

/// (NC + N(C-1)) / (2C - 3 + 4N).
inline Rational strict_dynamic_closed_form(Amount C, std::int64_t N) {
  return {N * C + N * (C - 1), 2 * C - 3 + 4 * N};
}

inline GeneratedScenario gen_strict_dynamic_subsetsum(Rational const& eps, std::int64_t N, bool check = true) {
  Amount C = require_subsetsum_capacity(eps);
  if (N < 1) throw Error(ErrorCode::InvalidT, "N must be at least 1");
  ChoosingStream s;
  s.problem = SubsetSumKind{C};
  s.add(detail::sized("v1", C - 2));
  s.add(detail::sized("v2", C - 1));
  std::vector<Amount> opt{C - 2, C - 1};
  for (std::int64_t k = 0; k < N; ++k) {
    s.add(detail::sized("v3", 2));
    s.remove("v3");
    opt.push_back(C);
    opt.push_back(C - 1);
  }
  if (check) detail::self_check(s, opt, "strict-dynamic");

  ExpectedFile e;
  e.construction = "strict-dynamic";
  e.params = {{"epsilon", to_string(eps)}, {"C", C}, {"N", N}};
  e.run.epsilon = eps;
  e.claims = detail::framework_claims(eps);
  e.claims.opt_sequence = std::move(opt);
  e.claims.gamma_at_least = strict_dynamic_closed_form(C, N);
  e.predictions = {{"closed_form_gamma", to_string(strict_dynamic_closed_form(C, N))},
                   {"limit_gamma", to_string(Rational(2 * C - 1, 4))},
                   {"lower_bound", to_string(Rational(C - 1, 4))}};
  return {std::move(s), std::move(e)};
}

// Alternating instances -------------------------------------------------------------

struct AlternatingCheck {
  bool ok = false;
  Amount c = 0;
  Rational bound{0};
  std::string reason;
};

/// Checks the alternating-instances conditions for I1, I2 and I1' (a proper
/// subset of I1) at ratio beta. Feasibility of mixed sets is exhaustive for
/// up to 20 objects, pairwise beyond that (enough for hereditary kinds).
inline AlternatingCheck validate_alternating(ProblemKind const& kind, std::vector<ChoosingObject> const& i1,
                                             std::vector<ChoosingObject> const& i2,
                                             std::vector<ChoosingObject> const& i1_prime, Rational const& beta) {
  SolutionSet s1, s2, s1p;
  for (auto const& o : i1) s1.insert(o.id);
  for (auto const& o : i2) s2.insert(o.id);
  for (auto const& o : i1_prime) s1p.insert(o.id);
  bool subset = std::ranges::includes(s1, s1p) && s1p.size() < s1.size();
  if (!subset) throw Error(ErrorCode::NotSubset, "I1' must be a proper subset of I1");

  InstanceState all;
  for (auto const* group : {&i1, &i2})
    for (auto const& o : *group) {
      if (!all.objects.emplace(o.id, o).second) {
        throw Error(ErrorCode::DuplicateArrival, "'" + o.id + "' occurs in both instances");
      }
    }

  AlternatingCheck out;
  Amount p1 = profit_of(s1, all.objects);
  Amount p2 = profit_of(s2, all.objects);
  Amount p1p = profit_of(s1p, all.objects);
  out.c = p1 - p1p;
  out.bound = beta * p2 / (2 * (out.c + 1));

  auto fail = [&](std::string why) {
    out.ok = false;
    out.reason = std::move(why);
    return out;
  };
  for (auto const* s : {&s1, &s2, &s1p})
    if (!feasible(kind, all, *s)) return fail("a pure instance is infeasible");

  std::vector<ObjectId> ids(s1.begin(), s1.end());
  ids.insert(ids.end(), s2.begin(), s2.end());
  if (ids.size() <= 20) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
      SolutionSet mix;
      bool from1 = false, from2 = false;
      for (std::size_t k = 0; k < ids.size(); ++k) {
        if (!((mask >> k) & 1U)) continue;
        mix.insert(ids[k]);
        (k < s1.size() ? from1 : from2) = true;
      }
      if (from1 && from2 && feasible(kind, all, mix)) return fail("a mixed solution is feasible");
    }
  } else {
    for (auto const& a : s1)
      for (auto const& b : s2)
        if (feasible(kind, all, {a, b})) return fail("a mixed solution is feasible");
  }

  Rational lhs(p1p);
  Rational mid = beta * p2;
  Rational rhs = beta * beta * p1;
  if (!(lhs < mid && mid < rhs)) return fail("profit(I1') < b*profit(I2) < b^2*profit(I1) fails");
  out.ok = true;
  out.reason = "alternating";
  return out;
}

/// Arrives I1', then I2, then the rest of I1, and toggles that rest N times.
inline GeneratedScenario gen_alternating_toggle(ProblemKind const& kind, std::vector<ChoosingObject> const& i1_prime,
                                                std::vector<ChoosingObject> const& toggled,
                                                std::vector<ChoosingObject> const& i2, Rational const& beta,
                                                std::int64_t N, bool check = true) {
  std::vector<ChoosingObject> i1 = i1_prime;
  i1.insert(i1.end(), toggled.begin(), toggled.end());
  auto verdict = validate_alternating(kind, i1, i2, i1_prime, beta);
  if (!verdict.ok) throw Error(ErrorCode::EpsilonTooLarge, "not alternating at beta=" + to_string(beta) + ": " + verdict.reason);

  ChoosingStream s;
  s.problem = kind;
  for (auto const* group : {&i1_prime, &i2, &toggled})
    for (auto const& o : *group) s.add(o);
  for (std::int64_t k = 0; k < N; ++k) {
    for (auto const& o : toggled) s.remove(o.id);
    for (auto const& o : toggled) s.add(o);
  }
  if (check) validate_stream(s);
  Rational eps = 1 - beta;
  ExpectedFile e;
  e.construction = "alternating";
  e.params = {{"beta", to_string(beta)}, {"N", N}, {"c", verdict.c}};
  e.run.epsilon = eps;
  e.claims = detail::framework_claims(eps);
  e.claims.gamma_at_least = verdict.bound;
  e.predictions = {{"lemma_bound", to_string(verdict.bound)}};
  return {std::move(s), std::move(e)};
}

/// SubsetSum C=9: I1 = {7, 2}, I2 = {8}, I1' = {7}.
inline GeneratedScenario gen_subsetsum_alternating_fixture(std::int64_t N, Rational beta = Rational(9, 10),
                                                           bool check = true) {
  return gen_alternating_toggle(SubsetSumKind{9}, {detail::sized("v1", 7)}, {detail::sized("v3", 2)},
                                {detail::sized("v2", 8)}, beta, N, check);
}

// MIS constructions -----------------------------------------------------------------

inline Amount require_mis_scale(Rational const& eps) {
  Amount C = detail::mis_scale(eps);
  if (C < 4) throw Error(ErrorCode::EpsilonTooLarge, "epsilon " + to_string(eps) + " gives C=" + std::to_string(C) + " < 4");
  return C;
}

/// Complete bipartite V1 (C nodes) x V2 (C-1 nodes), toggling two V1 nodes.
inline GeneratedScenario gen_mis_bipartite(Rational const& eps, std::int64_t N, bool check = true) {
  Amount C = require_mis_scale(eps);
  std::vector<ChoosingObject> v1, v2;
  std::vector<ObjectId> v1_ids, v2_ids;
  for (Amount k = 1; k <= C; ++k) v1_ids.push_back(detail::vid(k));
  for (Amount k = C + 1; k <= 2 * C - 1; ++k) v2_ids.push_back(detail::vid(k));
  for (auto const& id : v1_ids) v1.push_back(detail::node(id, 1));
  for (auto const& id : v2_ids) v2.push_back(detail::node(id, 1, v1_ids));

  std::vector<ChoosingObject> v1_prime(v1.begin() + 2, v1.end());
  auto verdict = validate_alternating(GraphMisKind{false}, v1, v2, v1_prime, 1 - eps);
  if (!verdict.ok) {
    throw Error(ErrorCode::EpsilonTooLarge, "epsilon " + to_string(eps) + " breaks the alternating conditions");
  }

  ChoosingStream s;
  s.problem = GraphMisKind{false};
  std::vector<Amount> opt;
  for (Amount k = 1; k <= C; ++k) {
    s.add(v1[static_cast<std::size_t>(k - 1)]);
    opt.push_back(k);
  }
  for (auto const& o : v2) {
    s.add(o);
    opt.push_back(C);
  }
  for (std::int64_t k = 0; k < N; ++k) {
    s.remove("v1");
    s.remove("v2");
    s.add(detail::node("v1", 1, v2_ids));
    s.add(detail::node("v2", 1, v2_ids));
    for (Amount x : {C - 1, C - 1, C - 1, C}) opt.push_back(x);
  }
  if (check) detail::self_check(s, opt, "mis-bipartite");

  ExpectedFile e;
  e.construction = "mis-bipartite";
  e.params = {{"epsilon", to_string(eps)}, {"N", N}, {"C", C}, {"V1", C}, {"V2", C - 1}};
  e.run.epsilon = eps;
  e.claims = detail::framework_claims(eps);
  e.claims.opt_sequence = std::move(opt);
  e.claims.gamma_at_least = verdict.bound;
  e.predictions = {{"lemma_bound", to_string(verdict.bound)}, {"c", verdict.c}};
  return {std::move(s), std::move(e)};
}

/// Path v1 - v2 - v3 with weights C-2, C-1, 2, toggling v3.
inline GeneratedScenario gen_mis_weighted_path(Rational const& eps, std::int64_t N, bool check = true) {
  Amount C = require_mis_scale(eps);
  ChoosingStream s;
  s.problem = GraphMisKind{true};
  s.add(detail::node("v1", C - 2));
  s.add(detail::node("v2", C - 1, {"v1"}));
  s.add(detail::node("v3", 2, {"v2"}));
  std::vector<Amount> opt{C - 2, C - 1, C};
  for (std::int64_t k = 0; k < N; ++k) {
    s.remove("v3");
    s.add(detail::node("v3", 2, {"v2"}));
    opt.push_back(C - 1);
    opt.push_back(C);
  }
  if (check) detail::self_check(s, opt, "mis-path");

  ExpectedFile e;
  e.construction = "mis-path";
  e.params = {{"epsilon", to_string(eps)}, {"N", N}, {"C", C}};
  e.run.epsilon = eps;
  e.claims = detail::framework_claims(eps);
  e.claims.opt_sequence = std::move(opt);
  if (N >= 1000) {
    e.claims.expected_gamma = Rational(C - 1);
    e.claims.gamma_tolerance = Rational(5, 100);
  }
  e.predictions = {{"forced_solutions", {{"v2"}, {"v1", "v3"}}},
                   {"cycle_cost", 4 * C - 4},
                   {"cycle_potential", 4},
                   {"limit_gamma", C - 1}};
  return {std::move(s), std::move(e)};
}

// Weight migration -------------------------------------------------------------------

/// Knapsack of capacity C with i (weight C, profit 1) and j (weight 1,
/// profit 2). N = 0 gives the lax static instance; otherwise i arrives and j
/// is toggled N times (N counts single add/remove events).
inline GeneratedScenario gen_weight_migration_knapsack(Amount C, std::int64_t N, Metric metric = Metric::Weight,
                                                       Rational const& eps = Rational(1, 10), bool check = true) {
  if (metric != Metric::Weight) {
    throw Error(ErrorCode::WrongMetric, "the weight-migration construction measures weight, not profit");
  }
  if (C < 2) throw Error(ErrorCode::PayloadMismatch, "C must be at least 2");
  if (N < 0) throw Error(ErrorCode::InvalidT, "N must be non-negative");
  require_unit_epsilon(eps);
  ChoosingObject i{"v1", 1, WeightPayload{C}};
  ChoosingObject j{"v2", 2, WeightPayload{1}};
  ChoosingStream s;
  s.problem = KnapsackKind{C};
  s.metric = Metric::Weight;
  std::vector<Amount> opt;
  Rational gamma;
  if (N == 0) {
    s.lax = true;
    s.initial = {i};
    s.add(j);
    opt = {1, 2};
    gamma = Rational(C);
  } else {
    s.add(i);
    opt.push_back(1);
    for (std::int64_t k = 0; k < N; ++k) {
      if (k % 2 == 0) {
        s.add(j);
        opt.push_back(2);
      } else {
        s.remove(j.id);
        opt.push_back(1);
      }
    }
    gamma = Rational(N * C, C + N);
  }
  if (check) detail::self_check(s, opt, "weight-migration");

  ExpectedFile e;
  e.construction = "weight-migration";
  e.params = {{"C", C}, {"N", N}, {"variant", N == 0 ? "static" : "dynamic"}};
  e.run.epsilon = eps;
  e.claims.ratio_bound = 1 - eps;
  e.claims.metric = Metric::Weight;
  e.claims.opt_sequence = std::move(opt);
  e.claims.expected_gamma = gamma;
  e.claims.gamma_tolerance = N == 0 ? Rational(0) : Rational(1, 100);
  e.predictions = {{"closed_form_gamma", to_string(gamma)}};
  return {std::move(s), std::move(e)};
}

}  // namespace migrate

#endif  // MIGRATE_ADVERSARY_HPP
