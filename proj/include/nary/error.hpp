#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nary {

enum class ErrorKind {
  SymmetryViolation,
  MixedParityEntry,
  NotPureOdd,
  NotPureEven,
  SpaceMismatch,
  DegreeMismatch,
  DegreeCapExceeded,
  WrongDegree,
  NotCommutative,
  NotInvariant,
  Degenerate,
  NotOdd,
  NotHodgeContext,
  NotLInfinity,
  NotSkew,
  ConvergenceFailure,
  DimensionTooSmall,
  NotOrthogonal,
  OddArity,
  SizeGuard,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the engine; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nary
