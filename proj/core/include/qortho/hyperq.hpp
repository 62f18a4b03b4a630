#pragma once

#include <variant>
#include <vector>

#include "qortho/qpoly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

/// Argument is c * z; the result is a polynomial in z.
struct ArgLinear {
  Rational c;
};
/// One numerator parameter is the variable x = q^{-z}; the argument is the
/// constant `arg`. The result is a polynomial in x.
struct ParamSlot {
  Rational arg;
};
/// One numerator parameter is z^{-1} and the argument is c * z. Uses
/// (z^{-1};q)_k (c z)^k = c^k prod_{i<k} (z - q^i), a polynomial in z.
struct InverseSlot {
  Rational c;
};

using VariableMode = std::variant<ArgLinear, ParamSlot, InverseSlot>;

/// Largest terminating degree the public API accepts.
inline constexpr int kMaxSeriesDegree = 32;

/// A terminating basic hypergeometric series r_phi_s whose first numerator
/// parameter is q^{-n}. `numerators` excludes both that slot and any variable
/// slot; r counts every numerator slot.
struct SeriesSpec {
  int n = 0;
  std::vector<Rational> numerators;
  std::vector<Rational> denominators;
  int r = 1;
  int s = 0;
  VariableMode mode = ArgLinear{Rational(1)};
  Rational q;

  /// Fills r and s from the parameter lists and the mode.
  static SeriesSpec make(int n, std::vector<Rational> numerators, std::vector<Rational> denominators,
                         VariableMode mode, Rational q);
};

Variable series_variable(const SeriesSpec& spec) noexcept;

/// Exact polynomial value of the series (degree <= n).
/// Throws Error(Termination) if a denominator Pochhammer vanishes for some
/// k <= n, Error(Mode) if r/s disagree with the parameter lists, and
/// Error(Degree) if n is outside [0, kMaxSeriesDegree].
QPoly build_series(const SeriesSpec& spec);

/// Direct floating-point summation of the series at a value of its variable
/// (x for ParamSlot, z otherwise).
double series_value_float(const SeriesSpec& spec, double v);

}  // namespace qortho
