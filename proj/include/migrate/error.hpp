#ifndef MIGRATE_ERROR_HPP
#define MIGRATE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace migrate {

enum class ErrorCode {
  DuplicateArrival,
  UnknownDeparture,
  TimeSkew,
  MissingWeight,
  UnknownId,
  PayloadMismatch,
  OracleLimitExceeded,
  InvalidEpsilon,
  StateDesync,
  IncompatiblePair,
  UnknownVertex,
  DuplicateEdge,
  InvalidT,
  EpsilonTooLarge,
  NotSubset,
  WrongMetric,
  IOError,
  ParseError,
  UnsupportedEvent,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateArrival: return "DuplicateArrival";
    case ErrorCode::UnknownDeparture: return "UnknownDeparture";
    case ErrorCode::TimeSkew: return "TimeSkew";
    case ErrorCode::MissingWeight: return "MissingWeight";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::PayloadMismatch: return "PayloadMismatch";
    case ErrorCode::OracleLimitExceeded: return "OracleLimitExceeded";
    case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::StateDesync: return "StateDesync";
    case ErrorCode::IncompatiblePair: return "IncompatiblePair";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidT: return "InvalidT";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::WrongMetric: return "WrongMetric";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedEvent: return "UnsupportedEvent";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace migrate

#endif  // MIGRATE_ERROR_HPP
