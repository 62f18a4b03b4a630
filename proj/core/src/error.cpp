#include "qortho/error.hpp"

namespace qortho {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Termination: return "TerminationError";
    case ErrorKind::Mode: return "ModeError";
    case ErrorKind::Admissibility: return "AdmissibilityError";
    case ErrorKind::ExcludedParameter: return "ExcludedParameterError";
    case ErrorKind::Degree: return "DegreeError";
    case ErrorKind::Convergence: return "ConvergenceError";
    case ErrorKind::Indeterminate: return "IndeterminateError";
    case ErrorKind::Degenerate: return "DegenerateError";
    case ErrorKind::Boundary: return "BoundaryError";
    case ErrorKind::Refinement: return "RefinementError";
    case ErrorKind::Config: return "ConfigError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace qortho
