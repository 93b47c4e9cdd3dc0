#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conesep {

enum class ErrorKind {
  ZeroGenerator,
  DimensionMismatch,
  Empty,
  InvalidFacets,
  DimensionTooHigh,
  NotSolid,
  NotPointed,
  TrivialRegion,
  ZeroDirection,
  MaxIterations,
  DegenerateCone,
  Inconclusive,
  NotConvex,
  NotNested,
  NonPositiveRay,
  DimensionNot2D,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every engine failure; `kind()` identifies the
/// contract that was violated.
class ConeError : public std::runtime_error {
 public:
  ConeError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace conesep
