#pragma once

#include <optional>

#include "qortho/families.hpp"
#include "qortho/qpoly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

enum class MeasureKind {
  ContinuousIntegral,  // q-Laguerre: z^delta / (-z;q)_inf on (0, inf)
  DiscreteSum,         // little q-Jacobi on x = q^j; q-Meixner on x = q^{-z}
  JacksonIntegral,     // Al-Salam-Carlitz I: q-integral of (qx, qx/a; q)_inf over (a, 1)
  RiemannIntegral,     // Al-Salam-Carlitz I weight integrated as an ordinary integral over (a, 1)
};

struct WeightSpec {
  FamilyId family;
  MeasureKind kind = MeasureKind::ContinuousIntegral;
  /// Polynomial multiplying the classical weight, in the family variable.
  std::optional<QPoly> prefactor;
};

/// The measure under which the family is orthogonal. Al-Salam-Carlitz I
/// uses the Jackson integral: the ordinary integral of the same weight over
/// (a, 1) does not orthogonalize the family.
WeightSpec natural_weight(const FamilyId& fam);

/// The classical weight carrying the target's prefactor, i.e. the weight
/// under which the target is quasi-orthogonal.
WeightSpec target_weight(const QuasiTargetId& target, const Rational& q);

struct MomentValue {
  double value = 0.0;
  /// Integral or sum of the absolute integrand; value / magnitude is the
  /// cancellation-relative size of the moment.
  double magnitude = 0.0;

  double normalized() const { return magnitude > 0.0 ? value / magnitude : 0.0; }
};

/// Integral or sum of var^t_power * prefactor * p against the weight, with
/// truncation and quadrature error below tol relative to the magnitude.
/// Throws Error(Admissibility) when the weight is not positive for the given
/// parameters, Error(Mode) on a variable mismatch, Error(Convergence) when a
/// truncation or quadrature cap is hit.
MomentValue moment_detail(const WeightSpec& weight, const QPoly& p, int t_power, const Rational& q,
                          double tol);

inline double moment(const WeightSpec& weight, const QPoly& p, int t_power, const Rational& q, double tol) {
  return moment_detail(weight, p, t_power, q, tol).value;
}

}  // namespace qortho
