#pragma once

#include <stdexcept>
#include <string>

namespace fractal {

enum class ErrorCode {
  EmptyBases,
  NonEquicardinal,
  ExchangeViolation,
  RankOutOfRange,
  SizeOverflow,
  OutOfRange,
  RankZero,
  OverlappingSets,
  DifferenceOne,
  WrongCardinality,
  NoBasesLeft,
  GroundSizeMismatch,
  BoundTooLarge,
  TooSmall,
  NotASolution,
  InvalidLinearClass,
  InvalidGraph,
  TooLarge,
  PremiseViolated,
  TooLargeForExact,
  TooLargeForFull,
  HypothesisViolated,
  OddSize,
  DegenerateSeries,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Every contract violation surfaces as this exception; `code()` is stable and
/// is what the CLI prints in its JSON diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fractal
