#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abels {

/// Named failure conditions. The name of each enumerator is what the CLI
/// prints, so keep them stable.
enum class ErrorKind {
  ZeroVector,
  NotMonotone,
  SumSignViolation,
  DegenerateDerivedVector,
  LengthMismatch,
  WrongBlockCount,
  NotPartitionOfV,
  SingularBasis,
  SingularMatrix,
  PrimeMismatch,
  ClassModelMismatch,
  NotInvolution,
  NotTriangular,
  EvenPrime,
  NotDiagonalizable,
  NotASimplex,
  EmptyComplex,
  NotSubcomplex,
  CapExceeded,
  TimeLimitExceeded,
  PrecisionExceeded,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace abels
