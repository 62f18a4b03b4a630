#include "qortho/quadrature.hpp"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "qortho/error.hpp"

namespace qortho {

namespace {

using Rule = boost::math::quadrature::gauss<double, 30>;

constexpr int kMaxHalvings = 12;
constexpr int kSmallPanels = 80;
constexpr int kMaxLargePanels = 400;
constexpr int kQuietPanels = 4;

}  // namespace

Integral gauss_panel(const Integrand& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  Integral out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    // 30 points: no node at the centre.
    const double a = f(mid + half * x[i]);
    const double b = f(mid - half * x[i]);
    out.value += w[i] * (a + b);
    out.magnitude += w[i] * (std::abs(a) + std::abs(b));
  }
  out.value *= half;
  out.magnitude *= half;
  return out;
}

Integral integrate_interval(const Integrand& f, double lo, double hi, double tol) {
  Integral prev = gauss_panel(f, lo, hi);
  for (int level = 1; level <= kMaxHalvings; ++level) {
    const int panels = 1 << level;
    const double width = (hi - lo) / panels;
    Integral cur;
    for (int i = 0; i < panels; ++i) {
      const Integral p = gauss_panel(f, lo + i * width, lo + (i + 1) * width);
      cur.value += p.value;
      cur.magnitude += p.magnitude;
    }
    if (std::abs(cur.value - prev.value) <= tol * cur.magnitude) return cur;
    prev = cur;
  }
  throw Error(ErrorKind::Convergence, "composite Gauss-Legendre did not settle within 4096 panels");
}

Integral integrate_half_line(const Integrand& f, double alpha, double f0, double tol) {
  if (!(alpha > -1.0)) throw Error(ErrorKind::Convergence, "integrand not integrable at 0 (alpha <= -1)");
  Integral out;
  const double eps = std::ldexp(1.0, -kSmallPanels);
  const double head = f0 * std::pow(eps, alpha + 1.0) / (alpha + 1.0);
  out.value += head;
  out.magnitude += std::abs(head);
  for (int m = kSmallPanels; m >= 1; --m) {
    const Integral p = gauss_panel(f, std::ldexp(1.0, -m), std::ldexp(1.0, -m + 1));
    out.value += p.value;
    out.magnitude += p.magnitude;
  }
  int quiet = 0;
  double prev_panel = std::numeric_limits<double>::infinity();
  for (int m = 0; m < kMaxLargePanels; ++m) {
    const Integral p = gauss_panel(f, std::ldexp(1.0, m), std::ldexp(1.0, m + 1));
    out.value += p.value;
    out.magnitude += p.magnitude;
    const bool decaying = p.magnitude <= prev_panel;
    prev_panel = p.magnitude;
    if (decaying && p.magnitude <= 1e-3 * tol * out.magnitude) {
      if (++quiet >= kQuietPanels) return out;
    } else {
      quiet = 0;
    }
  }
  throw Error(ErrorKind::Convergence, "half-line integrand did not decay within 2^400");
}

LogAbs log_abs_eval(const QPoly& p, double v) {
  if (p.is_zero()) return {};
  const auto c = p.coeffs();
  const int deg = p.degree();
  double s = 0.0;
  double scale = 0.0;
  if (std::abs(v) <= 1.0) {
    for (int i = deg; i >= 0; --i) s = s * v + c[i].to_double();
  } else {
    // Horner in 1/v on the reversed coefficients: p(v) = v^deg * sum c_i v^{i-deg}.
    const double inv = 1.0 / v;
    for (int i = 0; i <= deg; ++i) s = s * inv + c[i].to_double();
    scale = deg * std::log(std::abs(v));
    if (deg % 2 == 1 && v < 0) s = -s;
  }
  if (s == 0.0) return {};
  return {s > 0 ? 1 : -1, std::log(std::abs(s)) + scale};
}

}  // namespace qortho
