#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace omt {

enum class ErrorKind {
  InvalidSpec,
  NotALattice,
  NotBounded,
  OrthoViolation,
  CycleInCovers,
  NoOrtho,
  ParseError,
  EmptyRelation,
  EmptyRestriction,
  UnknownTimePoint,
  UnknownElement,
  Incompatible,
  TabulatedMiss,
  BudgetExceeded,
  NameCollision,
  NotAFailure,
  PreconditionUnmet,
  UnknownDemo,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is
/// stable and intended for programmatic dispatch.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace omt
