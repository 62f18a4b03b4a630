#include "qortho/hyperq.hpp"

#include <cmath>
#include <string>

#include "qortho/error.hpp"

namespace qortho {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool has_variable_slot(const VariableMode& mode) {
  return !std::holds_alternative<ArgLinear>(mode);
}

void validate(const SeriesSpec& spec) {
  if (spec.n < 0 || spec.n > kMaxSeriesDegree) {
    throw Error(ErrorKind::Degree, "series degree " + std::to_string(spec.n) + " outside [0, " +
                                       std::to_string(kMaxSeriesDegree) + "]");
  }
  const int expected_r = 1 + static_cast<int>(spec.numerators.size()) + (has_variable_slot(spec.mode) ? 1 : 0);
  const int expected_s = static_cast<int>(spec.denominators.size());
  if (spec.r != expected_r || spec.s != expected_s) {
    throw Error(ErrorKind::Mode, "series shape r=" + std::to_string(spec.r) + ", s=" + std::to_string(spec.s) +
                                     " does not match the parameter lists (r=" + std::to_string(expected_r) +
                                     ", s=" + std::to_string(expected_s) + ")");
  }
  if (spec.q.is_zero()) throw Error(ErrorKind::Mode, "q must be nonzero");
  // (beta;q)_k for k <= n involves factors 1 - beta q^i, i < n.
  for (const auto& beta : spec.denominators) {
    Rational bq = beta;
    for (int i = 0; i < spec.n; ++i) {
      if (bq.is_one()) {
        throw Error(ErrorKind::Termination, "denominator parameter " + beta.pretty() +
                                                " makes (beta;q)_k vanish at k=" + std::to_string(i + 1));
      }
      bq *= spec.q;
    }
  }
}

// Ratio T_k / T_{k-1} of the scalar part of term k (everything except the
// variable-dependent factors).
Rational term_ratio(const SeriesSpec& spec, const Rational& q_km1) {
  const Rational one(1);
  Rational num = one - spec.q.pow(-spec.n) * q_km1;
  for (const auto& a : spec.numerators) num *= one - a * q_km1;
  Rational den = one - q_km1 * spec.q;
  for (const auto& b : spec.denominators) den *= one - b * q_km1;
  // {(-1)^k q^{k(k-1)/2}}^{1+s-r}: the k-th ratio is (-q^{k-1})^{1+s-r}.
  const int e = 1 + spec.s - spec.r;
  return num * (-q_km1).pow(e) / den;
}

}  // namespace

SeriesSpec SeriesSpec::make(int n, std::vector<Rational> numerators, std::vector<Rational> denominators,
                            VariableMode mode, Rational q) {
  SeriesSpec spec;
  spec.n = n;
  spec.r = 1 + static_cast<int>(numerators.size()) + (has_variable_slot(mode) ? 1 : 0);
  spec.s = static_cast<int>(denominators.size());
  spec.numerators = std::move(numerators);
  spec.denominators = std::move(denominators);
  spec.mode = std::move(mode);
  spec.q = std::move(q);
  return spec;
}

Variable series_variable(const SeriesSpec& spec) noexcept {
  return std::holds_alternative<ParamSlot>(spec.mode) ? Variable::X : Variable::Z;
}

QPoly build_series(const SeriesSpec& spec) {
  validate(spec);
  const Variable var = series_variable(spec);
  QPoly result = QPoly::constant(Rational(1), var);

  Rational scalar(1);
  Rational q_km1(1);                                   // q^{k-1}
  QPoly slot = QPoly::constant(Rational(1), var);      // (x;q)_k or prod (z - q^i)
  Rational arg_power(1);

  for (int k = 1; k <= spec.n; ++k) {
    scalar *= term_ratio(spec, q_km1);
    if (scalar.is_zero()) break;  // a numerator Pochhammer hit zero; later terms vanish too

    QPoly term = std::visit(
        overloaded{
            [&](const ArgLinear& m) {
              arg_power *= m.c;
              return QPoly::monomial(scalar * arg_power, k, var);
            },
            [&](const ParamSlot& m) {
              arg_power *= m.arg;
              slot *= QPoly::linear(Rational(1), -q_km1, var);
              return slot * (scalar * arg_power);
            },
            [&](const InverseSlot& m) {
              arg_power *= m.c;
              slot *= QPoly::linear(-q_km1, Rational(1), var);
              return slot * (scalar * arg_power);
            },
        },
        spec.mode);
    result += term;
    q_km1 *= spec.q;
  }
  return result;
}

double series_value_float(const SeriesSpec& spec, double v) {
  validate(spec);
  const double q = spec.q.to_double();
  const int e = 1 + spec.s - spec.r;
  double sum = 1.0;
  double term = 1.0;
  double q_km1 = 1.0;
  const double q_mn = std::pow(q, -spec.n);
  for (int k = 1; k <= spec.n; ++k) {
    double num = 1.0 - q_mn * q_km1;
    for (const auto& a : spec.numerators) num *= 1.0 - a.to_double() * q_km1;
    double den = 1.0 - q_km1 * q;
    for (const auto& b : spec.denominators) den *= 1.0 - b.to_double() * q_km1;
    term *= num / den * std::pow(-q_km1, e);
    term *= std::visit(overloaded{
                           [&](const ArgLinear& m) { return m.c.to_double() * v; },
                           [&](const ParamSlot& m) { return m.arg.to_double() * (1.0 - v * q_km1); },
                           [&](const InverseSlot& m) { return m.c.to_double() * (v - q_km1); },
                       },
                       spec.mode);
    sum += term;
    q_km1 *= q;
  }
  return sum;
}

}  // namespace qortho
