#pragma once

#include "qortho/qpoly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

/// q-shifted factorial (a;q)_k = prod_{i<k} (1 - a q^i); k = 0 gives 1.
Rational qpoch(const Rational& a, const Rational& q, int k);

/// prod_{i<k} (1 - scale q^i var) as a degree-k polynomial.
/// scale = -1 gives (-z;q)_k.
QPoly qpoch_poly(const Rational& q, int k, const Rational& scale, Variable var = Variable::Z);

double qpoch_float(double a, double q, int k);

/// (a;q)_inf, truncated once a factor lies within 1e-17 of one.
double qpoch_inf(double a, double q);

}  // namespace qortho
