#include "qortho/qpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "qortho/error.hpp"

namespace qortho {

std::string_view to_string(Variable v) noexcept { return v == Variable::Z ? "z" : "x"; }

QPoly::QPoly(std::vector<Rational> coeffs, Variable var) : coeffs_(std::move(coeffs)), var_(var) {
  trim();
}

QPoly QPoly::constant(const Rational& c, Variable var) { return QPoly({c}, var); }

QPoly QPoly::monomial(const Rational& c, int degree, Variable var) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v), var);
}

QPoly QPoly::linear(const Rational& c0, const Rational& c1, Variable var) {
  return QPoly({c0, c1}, var);
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational QPoly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational QPoly::operator()(const Rational& point) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= point;
    acc += *it;
  }
  return acc;
}

double QPoly::eval(double point) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + it->to_double();
  return acc;
}

int QPoly::sign_at(const Rational& point) const { return (*this)(point).sign(); }

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return QPoly(std::move(d), var_);
}

QPoly QPoly::dilate(const Rational& s) const {
  std::vector<Rational> d = coeffs_;
  Rational power(1);
  for (auto& c : d) {
    c *= power;
    power *= s;
  }
  return QPoly(std::move(d), var_);
}

QPoly QPoly::monic() const {
  if (is_zero()) throw std::domain_error("QPoly::monic of zero polynomial");
  QPoly r = *this;
  r *= leading().inverse();
  return r;
}

QPoly QPoly::with_variable(Variable var) const {
  QPoly r = *this;
  r.var_ = var;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  require_same_variable(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  require_same_variable(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  require_same_variable(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

QPoly operator-(const QPoly& a) {
  QPoly r = a;
  r *= Rational(-1);
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag.pretty();
      continue;
    }
    if (!mag.is_one()) os << mag.pretty() << "*";
    os << qortho::to_string(var_);
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<std::string> QPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void QPoly::require_same_variable(const QPoly& o) {
  // Constants are variable-agnostic; mixing z and x in anything else is a
  // modelling error.
  if (var_ == o.var_ || o.is_constant()) return;
  if (!is_constant()) throw Error(ErrorKind::Mode, "cannot combine polynomials in different variables");
  var_ = o.var_;
}

std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  const Variable var = num.is_constant() ? den.variable() : num.variable();
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  const Rational inv_lead = den.leading().inverse();
  std::vector<Rational> quo(rem.size() >= static_cast<std::size_t>(dd) + 1 ? rem.size() - dd : 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (f.is_zero()) continue;
    quo[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * den.coeff(j);
  }
  return {QPoly(std::move(quo), var), QPoly(std::move(rem), var)};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

QPoly poly_add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly poly_mul(const QPoly& a, const QPoly& b) { return a * b; }
Rational poly_eval(const QPoly& p, const Rational& point) { return p(point); }
QPoly poly_dilate(const QPoly& p, const Rational& s) { return p.dilate(s); }

}  // namespace qortho
