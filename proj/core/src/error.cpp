#include "omt/error.hpp"

namespace omt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::OrthoViolation: return "OrthoViolation";
    case ErrorKind::CycleInCovers: return "CycleInCovers";
    case ErrorKind::NoOrtho: return "NoOrtho";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyRelation: return "EmptyRelation";
    case ErrorKind::EmptyRestriction: return "EmptyRestriction";
    case ErrorKind::UnknownTimePoint: return "UnknownTimePoint";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::TabulatedMiss: return "TabulatedMiss";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::NotAFailure: return "NotAFailure";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::UnknownDemo: return "UnknownDemo";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace omt
