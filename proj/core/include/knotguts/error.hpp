#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knotguts {

enum class ErrorCode {
  EmptyInput,
  SyntaxError,
  ArcCount,
  InconsistentOrientation,
  MissingStrandCount,
  GeneratorOutOfRange,
  ZeroExponent,
  LengthTooSmall,
  IntegerSlope,
  InfiniteSlope,
  MalformedRational,
  NonPlanar,
  Disconnected,
  InvalidArgument,
  CrossingCapExceeded,
  NotAdequate,
  NotHomogeneous,
  NotPrimeDiagram,
  NotPositiveBraid,
  ExponentTooSmall,
  HypothesisNotMet,
  BadHeader,
  IoError,
};

// Broad class of an error, used by the command line tool to pick an exit status.
enum class ErrorKind { Input, Hypothesis };

std::string_view error_code_name(ErrorCode code);
ErrorKind error_kind(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace knotguts
