#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigma {

enum class ErrorCode {
  Domain,
  ForbiddenFacet,
  Disconnected,
  DuplicateFacet,
  BadLattice,
  NotBoundaryEdge,
  NonManifoldEdge,
  NotManifold,
  BoundaryVertex,
  Unrecognized,
  NotClosed,
  NotSublattice,
  OddChi,
  NonOrientable,
  EdgeUnmatched,
  NonGeneric,
  NonParallelogramFace,
  DegenerateQuad,
  InvalidWord,
  OverlappingCells,
  ParseError,
  VersionMismatch,
  IoError,
  Collision,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` identifies
// the condition, `what()` carries a human-readable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorCode::Domain, message) {}
};

}  // namespace sigma
