#include "qortho/param_point.hpp"

#include "qortho/error.hpp"

namespace qortho {

ParamPoint::ParamPoint(Rational q) : q_(std::move(q)) {
  if (q_.sign() <= 0 || q_ >= Rational(1)) {
    throw Error(ErrorKind::Admissibility, "q must lie in (0,1), got " + q_.pretty());
  }
}

ParamPoint ParamPoint::with(const std::string& name, Rational value) const {
  ParamPoint p = *this;
  p.values_[name] = std::move(value);
  return p;
}

ParamPoint ParamPoint::with_shift(const std::string& name, int value) const {
  ParamPoint p = *this;
  p.shifts_[name] = value;
  return p;
}

const Rational& ParamPoint::value(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw Error(ErrorKind::Config, "missing parameter '" + name + "'");
  return it->second;
}

std::optional<Rational> ParamPoint::find(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

int ParamPoint::shift(const std::string& name) const {
  auto it = shifts_.find(name);
  if (it == shifts_.end()) throw Error(ErrorKind::Config, "missing shift '" + name + "'");
  return it->second;
}

std::string ParamPoint::key() const {
  std::string out = "q=" + q_.pretty();
  for (const auto& [name, v] : values_) out += ";" + name + "=" + v.pretty();
  for (const auto& [name, v] : shifts_) out += ";" + name + "=" + std::to_string(v);
  return out;
}

bool on_inverse_lattice(const Rational& v, const Rational& q, int lo, int hi) {
  Rational p = q.pow(-lo);
  const Rational inv_q = q.inverse();
  for (int m = lo; m <= hi; ++m) {
    if (v == p) return true;
    p *= inv_q;
  }
  return false;
}

}  // namespace qortho
