#include "fractal/error.hpp"

namespace fractal {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyBases: return "EmptyBases";
    case ErrorCode::NonEquicardinal: return "NonEquicardinal";
    case ErrorCode::ExchangeViolation: return "ExchangeViolation";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::DifferenceOne: return "DifferenceOne";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::NoBasesLeft: return "NoBasesLeft";
    case ErrorCode::GroundSizeMismatch: return "GroundSizeMismatch";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::InvalidLinearClass: return "InvalidLinearClass";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PremiseViolated: return "PremiseViolated";
    case ErrorCode::TooLargeForExact: return "TooLargeForExact";
    case ErrorCode::TooLargeForFull: return "TooLargeForFull";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::DegenerateSeries: return "DegenerateSeries";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fractal
