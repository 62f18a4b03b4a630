#pragma once

#include <functional>

#include "qortho/qpoly.hpp"

namespace qortho {

/// Numerical integral together with the integral of |f| over the same nodes;
/// the latter is the scale against which cancellation is judged.
struct Integral {
  double value = 0.0;
  double magnitude = 0.0;
};

using Integrand = std::function<double(double)>;

/// Fixed 30-point Gauss-Legendre rule on [lo, hi].
Integral gauss_panel(const Integrand& f, double lo, double hi);

/// Composite Gauss-Legendre on [lo, hi], doubling the panel count until two
/// successive values agree to tol * magnitude. Throws Error(Convergence)
/// after 2^12 panels.
Integral integrate_interval(const Integrand& f, double lo, double hi, double tol);

/// Integral over (0, inf) of f, where f(z) ~ f0 * z^alpha as z -> 0 with
/// alpha > -1. Dyadic panels cover [2^-80, 1] and [1, inf) until the panel
/// contributions fall below tol * magnitude; the piece below 2^-80 uses the
/// leading power term. Throws Error(Convergence) if the right tail does not
/// decay within 2^400.
Integral integrate_half_line(const Integrand& f, double alpha, double f0, double tol);

/// Sign and natural log of |p(v)|, evaluated without overflow for large |v|.
struct LogAbs {
  int sign = 0;
  double log = 0.0;  // meaningless when sign == 0
};
LogAbs log_abs_eval(const QPoly& p, double v);

}  // namespace qortho
