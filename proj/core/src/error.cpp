#include "knotguts/error.hpp"

namespace knotguts {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArcCount: return "ArcCount";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::MissingStrandCount: return "MissingStrandCount";
    case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorCode::ZeroExponent: return "ZeroExponent";
    case ErrorCode::LengthTooSmall: return "LengthTooSmall";
    case ErrorCode::IntegerSlope: return "IntegerSlope";
    case ErrorCode::InfiniteSlope: return "InfiniteSlope";
    case ErrorCode::MalformedRational: return "MalformedRational";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CrossingCapExceeded: return "CrossingCapExceeded";
    case ErrorCode::NotAdequate: return "NotAdequate";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotPrimeDiagram: return "NotPrimeDiagram";
    case ErrorCode::NotPositiveBraid: return "NotPositiveBraid";
    case ErrorCode::ExponentTooSmall: return "ExponentTooSmall";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

ErrorKind error_kind(ErrorCode code) {
  switch (code) {
    case ErrorCode::CrossingCapExceeded:
    case ErrorCode::NotAdequate:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::NotPrimeDiagram:
    case ErrorCode::NotPositiveBraid:
    case ErrorCode::ExponentTooSmall:
    case ErrorCode::HypothesisNotMet:
      return ErrorKind::Hypothesis;
    default:
      return ErrorKind::Input;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(message), code_(code), position_(position) {}

}  // namespace knotguts
