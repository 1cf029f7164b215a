#ifndef MIGRATE_RATIONAL_HPP
#define MIGRATE_RATIONAL_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "migrate/error.hpp"

namespace migrate {

/// Exact ratio type used for epsilons, ratings, competitive ratios and
/// migration factors. Thresholds are never compared in floating point.
using Rational = boost::rational<std::int64_t>;

namespace detail {

inline std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto const* first = text.data();
  auto const* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses "a/b" or "a". Decimal notation is rejected on purpose: every
/// epsilon entering the system has to be exact.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_int(text, text));
  }
  auto num = detail::parse_int(text.substr(0, slash), text);
  auto den = detail::parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::string to_string(Rational const& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(Rational const& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// lhs > factor * base, evaluated exactly.
inline bool exceeds(std::int64_t lhs, Rational const& factor, std::int64_t base) {
  auto l = static_cast<__int128>(lhs) * factor.denominator();
  auto r = static_cast<__int128>(factor.numerator()) * base;
  return l > r;
}

/// lhs >= factor * base, evaluated exactly.
inline bool at_least(std::int64_t lhs, Rational const& factor, std::int64_t base) {
  auto l = static_cast<__int128>(lhs) * factor.denominator();
  auto r = static_cast<__int128>(factor.numerator()) * base;
  return l >= r;
}

/// Open unit interval check shared by every epsilon-taking entry point.
inline void require_unit_epsilon(Rational const& eps) {
  if (eps <= 0 || eps >= 1) {
    throw Error(ErrorCode::InvalidEpsilon, "epsilon must lie in (0,1), got " + to_string(eps));
  }
}

}  // namespace migrate

#endif  // MIGRATE_RATIONAL_HPP
