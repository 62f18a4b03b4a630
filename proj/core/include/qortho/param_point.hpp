#pragma once

#include <map>
#include <optional>
#include <string>

#include "qortho/rational.hpp"

namespace qortho {

/// The base q together with named parameters stored as exact q-powers
/// (t = q^delta, u = q^gamma, a, b, c, ...) and integer shifts (n, k, j).
/// Real-exponent range conditions become exact inequalities on these
/// values, e.g. gamma > 0 <=> u < 1.
class ParamPoint {
 public:
  /// Throws Error(Admissibility) unless 0 < q < 1.
  explicit ParamPoint(Rational q);

  const Rational& q() const noexcept { return q_; }

  ParamPoint with(const std::string& name, Rational value) const;
  ParamPoint with_shift(const std::string& name, int value) const;

  bool has(const std::string& name) const { return values_.count(name) != 0; }
  /// Throws Error(Config) if the parameter is missing.
  const Rational& value(const std::string& name) const;
  std::optional<Rational> find(const std::string& name) const;
  int shift(const std::string& name) const;

  const std::map<std::string, Rational>& values() const noexcept { return values_; }
  const std::map<std::string, int>& shifts() const noexcept { return shifts_; }

  /// "q=1/2;t=1/2;u=3" style key, deterministic (sorted by name).
  std::string key() const;

 private:
  Rational q_;
  std::map<std::string, Rational> values_;
  std::map<std::string, int> shifts_;
};

/// True when v = q^{-m} for some integer m in [lo, hi]. This is the exact
/// form of "exponent in {-lo, ..., -hi}" membership tests.
bool on_inverse_lattice(const Rational& v, const Rational& q, int lo, int hi);

}  // namespace qortho
