#include "edgecut/error.hpp"

namespace edgecut {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopRejected: return "LoopRejected";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::EmptyOrFullSet: return "EmptyOrFullSet";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::NotDefined: return "NotDefined";
    case ErrorCode::NotSemiRegular: return "NotSemiRegular";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotHalfTransitive: return "NotHalfTransitive";
    case ErrorCode::TrivialSet: return "TrivialSet";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::CouldNotConnect: return "CouldNotConnect";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

}  // namespace edgecut
