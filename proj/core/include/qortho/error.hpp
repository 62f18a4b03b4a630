#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qortho {

enum class ErrorKind {
  Termination,        // a denominator Pochhammer vanishes before the series terminates
  Mode,               // variable mode or variable tag inconsistent with the request
  Admissibility,      // family or theorem parameter constraint violated
  ExcludedParameter,  // parameter sits on an excluded q-power lattice point
  Degree,             // degree out of the supported or available range
  Convergence,        // truncation / quadrature did not reach its tolerance
  Indeterminate,      // moment fell in the gap between zero and nonzero thresholds
  Degenerate,         // two compared roots coincide exactly
  Boundary,           // parameter on a region boundary excluded by the theorem
  Refinement,         // interval refinement budget exhausted
  Config,             // malformed user input
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qortho
