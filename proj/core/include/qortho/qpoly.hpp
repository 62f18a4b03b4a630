#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qortho/rational.hpp"

namespace qortho {

/// Which variable a polynomial is written in: z itself, or x = q^{-z}
/// (the q-Meixner lattice variable).
enum class Variable { Z, X };

std::string_view to_string(Variable v) noexcept;

/// Degree reported for the zero polynomial (stands in for -infinity).
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[i] multiplies var^i; the top coefficient is nonzero unless the
/// polynomial is identically zero (empty coefficient list).
class QPoly {
 public:
  explicit QPoly(Variable var = Variable::Z) : var_(var) {}
  QPoly(std::vector<Rational> coeffs, Variable var = Variable::Z);

  static QPoly constant(const Rational& c, Variable var = Variable::Z);
  static QPoly monomial(const Rational& c, int degree, Variable var = Variable::Z);
  /// c0 + c1 * var
  static QPoly linear(const Rational& c0, const Rational& c1, Variable var = Variable::Z);

  Variable variable() const noexcept { return var_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// Zero for indices outside [0, degree].
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& point) const;
  double eval(double point) const;
  /// Sign of p(point), exactly.
  int sign_at(const Rational& point) const;

  QPoly derivative() const;
  /// p(s * var)
  QPoly dilate(const Rational& s) const;
  /// Leading coefficient scaled to one; throws std::domain_error on zero.
  QPoly monic() const;
  QPoly with_variable(Variable var) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
  friend QPoly operator-(const QPoly& a);

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;
  /// Coefficients as "num/den" strings, lowest power first.
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  void require_same_variable(const QPoly& o);

  std::vector<Rational> coeffs_;
  Variable var_ = Variable::Z;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);
/// Monic greatest common divisor (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
Rational poly_eval(const QPoly& p, const Rational& point);
QPoly poly_dilate(const QPoly& p, const Rational& s);

}  // namespace qortho
