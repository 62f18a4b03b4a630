#include "qortho/moments.hpp"

#include <cmath>
#include <string>

#include "qortho/error.hpp"
#include "qortho/qpoch.hpp"
#include "qortho/quadrature.hpp"

namespace qortho {

namespace {

constexpr int kMaxTerms = 20000;
constexpr int kQuietTerms = 30;

// Running sum that stops once kQuietTerms consecutive terms are negligible.
class TruncatedSum {
 public:
  explicit TruncatedSum(double tol) : tol_(tol) {}

  // Returns true when the sum has converged.
  bool add(double term) {
    sum_.value += term;
    sum_.magnitude += std::abs(term);
    if (std::abs(term) <= 1e-3 * tol_ * sum_.magnitude) {
      ++quiet_;
    } else {
      quiet_ = 0;
    }
    return sum_.magnitude > 0.0 ? quiet_ >= kQuietTerms : quiet_ >= 2 * kQuietTerms;
  }

  MomentValue result() const { return {sum_.value, sum_.magnitude}; }

 private:
  double tol_;
  Integral sum_;
  int quiet_ = 0;
};

[[noreturn]] void truncation_failed(const char* what) {
  throw Error(ErrorKind::Convergence, std::string(what) + " did not reach its tail bound within 20000 terms");
}

double log_qpoch_inf_neg(double z, double q) {
  // log (-z;q)_inf for z >= 0
  double acc = 0.0;
  for (double term = z; term > 1e-18; term *= q) acc += std::log1p(term);
  return acc;
}

// exp(log_scale) * g(v), without forming either factor separately.
double scaled_eval(const QPoly& g, double v, double log_scale) {
  const LogAbs la = log_abs_eval(g, v);
  if (la.sign == 0) return 0.0;
  return la.sign * std::exp(la.log + log_scale);
}

MomentValue laguerre_integral(const QLaguerre& f, const QPoly& g, int t_power, double q, double tol) {
  const double alpha = std::log(f.t.to_double()) / std::log(q);
  const auto integrand = [&](double z) {
    return scaled_eval(g, z, (alpha + t_power) * std::log(z) - log_qpoch_inf_neg(z, q));
  };
  const double f0 = t_power == 0 ? g.coeff(0).to_double() : 0.0;
  const Integral r = integrate_half_line(integrand, alpha + t_power, f0, tol);
  return {r.value, r.magnitude};
}

// The discrete weights and nodes are rational, so each term is formed
// exactly and rounded once; only the accumulation is in floating point.
MomentValue jacobi_sum(const LittleQJacobi& f, const QPoly& g, int t_power, const Rational& q, double tol) {
  const Rational one(1);
  TruncatedSum sum(tol);
  Rational w(1);
  Rational x(1);
  for (int j = 0; j < kMaxTerms; ++j) {
    if (sum.add((w * x.pow(t_power) * g(x)).to_double())) return sum.result();
    w *= (one - f.b * q * x) * f.a * q / (one - q * x);
    x *= q;
  }
  truncation_failed("little q-Jacobi sum");
}

MomentValue meixner_sum(const QMeixner& f, const QPoly& g, int t_power, const Rational& q, double tol) {
  const Rational one(1);
  TruncatedSum sum(tol);
  Rational w(1);
  Rational qz(1);  // q^z
  for (int z = 0; z < kMaxTerms; ++z) {
    const Rational x = qz.inverse();
    if (sum.add((w * x.pow(t_power) * g(x)).to_double())) return sum.result();
    const Rational qz1 = qz * q;
    w *= (one - f.b * qz1) * f.c * qz / ((one + f.b * f.c * qz1) * (one - qz1));
    qz = qz1;
  }
  truncation_failed("q-Meixner sum");
}

double asc_weight(double x, double a, double q) { return qpoch_inf(q * x, q) * qpoch_inf(q * x / a, q); }

MomentValue asc_jackson(const AlSalamCarlitzI& f, const QPoly& g, int t_power, const Rational& q, double tol) {
  const double a = f.a.to_double();
  const double qd = q.to_double();
  // Polynomial part exact at the rational nodes; the weight is transcendental.
  const auto h = [&](const Rational& x) {
    return (x.pow(t_power) * g(x)).to_double() * asc_weight(x.to_double(), a, qd);
  };
  TruncatedSum sum(tol);
  Rational qk(1);
  for (int k = 0; k < kMaxTerms; ++k) {
    const double scale = (1.0 - qd) * qk.to_double();
    sum.add(scale * h(qk));
    if (sum.add(-scale * a * h(f.a * qk))) return sum.result();
    qk *= q;
  }
  truncation_failed("Jackson integral");
}

MomentValue asc_riemann(const AlSalamCarlitzI& f, const QPoly& g, int t_power, double q, double tol) {
  const double a = f.a.to_double();
  const auto h = [&](double x) { return std::pow(x, t_power) * g.eval(x) * asc_weight(x, a, q); };
  const Integral r = integrate_interval(h, a, 1.0, tol);
  return {r.value, r.magnitude};
}

void require_kind(bool ok, const FamilyId& fam, const char* kind) {
  if (!ok) throw Error(ErrorKind::Mode, family_name(fam) + " has no " + kind + " measure");
}

}  // namespace

WeightSpec natural_weight(const FamilyId& fam) {
  if (std::holds_alternative<QLaguerre>(fam)) return {fam, MeasureKind::ContinuousIntegral, std::nullopt};
  if (std::holds_alternative<AlSalamCarlitzI>(fam)) return {fam, MeasureKind::JacksonIntegral, std::nullopt};
  return {fam, MeasureKind::DiscreteSum, std::nullopt};
}

WeightSpec target_weight(const QuasiTargetId& target, const Rational& q) {
  WeightSpec w = natural_weight(underlying_family(target));
  if (!std::holds_alternative<VarPhiASC>(target)) w.prefactor = weight_prefactor(target, q);
  return w;
}

MomentValue moment_detail(const WeightSpec& weight, const QPoly& p, int t_power, const Rational& q, double tol) {
  if (t_power < 0) throw Error(ErrorKind::Degree, "negative moment power");
  if (!(tol > 0.0)) throw Error(ErrorKind::Config, "moment tolerance must be positive");
  const FamilyId& fam = weight.family;
  require_orthogonal(fam, q);
  const Variable var = family_variable(fam);
  if (!p.is_constant() && p.variable() != var) {
    throw Error(ErrorKind::Mode, "polynomial variable does not match " + family_name(fam));
  }
  QPoly g = p.with_variable(var);
  if (weight.prefactor) {
    if (!weight.prefactor->is_constant() && weight.prefactor->variable() != var) {
      throw Error(ErrorKind::Mode, "prefactor variable does not match " + family_name(fam));
    }
    g *= weight.prefactor->with_variable(var);
  }
  const double qd = q.to_double();

  switch (weight.kind) {
    case MeasureKind::ContinuousIntegral:
      require_kind(std::holds_alternative<QLaguerre>(fam), fam, "continuous");
      return laguerre_integral(std::get<QLaguerre>(fam), g, t_power, qd, tol);
    case MeasureKind::DiscreteSum:
      if (const auto* f = std::get_if<LittleQJacobi>(&fam)) return jacobi_sum(*f, g, t_power, q, tol);
      if (const auto* f = std::get_if<QMeixner>(&fam)) return meixner_sum(*f, g, t_power, q, tol);
      require_kind(false, fam, "discrete");
      break;
    case MeasureKind::JacksonIntegral:
      require_kind(std::holds_alternative<AlSalamCarlitzI>(fam), fam, "Jackson");
      return asc_jackson(std::get<AlSalamCarlitzI>(fam), g, t_power, q, tol);
    case MeasureKind::RiemannIntegral:
      require_kind(std::holds_alternative<AlSalamCarlitzI>(fam), fam, "Riemann");
      return asc_riemann(std::get<AlSalamCarlitzI>(fam), g, t_power, qd, tol);
  }
  throw Error(ErrorKind::Mode, "unknown measure kind");
}

}  // namespace qortho
