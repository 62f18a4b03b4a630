#include "qortho/qpoch.hpp"

#include <cmath>
#include <stdexcept>

namespace qortho {

Rational qpoch(const Rational& a, const Rational& q, int k) {
  if (k < 0) throw std::invalid_argument("qpoch: negative k");
  Rational acc(1);
  Rational aqi = a;
  for (int i = 0; i < k; ++i) {
    acc *= Rational(1) - aqi;
    aqi *= q;
  }
  return acc;
}

QPoly qpoch_poly(const Rational& q, int k, const Rational& scale, Variable var) {
  if (k < 0) throw std::invalid_argument("qpoch_poly: negative k");
  QPoly acc = QPoly::constant(Rational(1), var);
  Rational sqi = scale;
  for (int i = 0; i < k; ++i) {
    acc *= QPoly::linear(Rational(1), -sqi, var);
    sqi *= q;
  }
  return acc;
}

double qpoch_float(double a, double q, int k) {
  double acc = 1.0;
  double aqi = a;
  for (int i = 0; i < k; ++i) {
    acc *= 1.0 - aqi;
    aqi *= q;
  }
  return acc;
}

double qpoch_inf(double a, double q) {
  double acc = 1.0;
  double aqi = a;
  // |a q^i| shrinks geometrically; 4000 factors covers q up to ~0.99 at any
  // magnitude of a that fits in a double.
  for (int i = 0; i < 4000; ++i) {
    acc *= 1.0 - aqi;
    if (std::abs(aqi) < 1e-17) break;
    aqi *= q;
  }
  return acc;
}

}  // namespace qortho
