#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edgecut {

enum class ErrorCode {
  LoopRejected,
  VertexOutOfRange,
  NonPositiveMultiplicity,
  EmptyGraph,
  EmptyOrFullSet,
  SameVertex,
  Disconnected,
  TooSmall,
  TooLargeForExhaustive,
  NotDefined,
  NotSemiRegular,
  NotBipartite,
  NotHalfTransitive,
  TrivialSet,
  PreconditionViolated,
  InvalidParameters,
  OddLength,
  CouldNotConnect,
  ParseError,
  InvariantViolated,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace edgecut
