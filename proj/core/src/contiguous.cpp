#include "qortho/contiguous.hpp"

#include <array>

#include "qortho/error.hpp"

namespace qortho {

namespace {

Rational checked_div(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw Error(ErrorKind::ExcludedParameter, std::string(what) + " has a vanishing denominator");
  return num / den;
}

QPoly laguerre(const Rational& t, int n, const Rational& q) { return classical_poly(QLaguerre{t}, n, q); }
QPoly jacobi(const Rational& a, const Rational& b, int n, const Rational& q) {
  return classical_poly(LittleQJacobi{a, b}, n, q);
}

void require_degree(RelationId id, int n) {
  if (n < relation_min_degree(id)) {
    throw Error(ErrorKind::Degree, std::string(relation_name(id)) + " needs n >= " +
                                       std::to_string(relation_min_degree(id)));
  }
}

}  // namespace

SplitCoeffs contiguous_split(int n, const Rational& alpha2, const Rational& q) {
  if (n < 0) throw Error(ErrorKind::Degree, "negative degree");
  if (alpha2.is_one()) throw Error(ErrorKind::ExcludedParameter, "split needs A != 1");
  const Rational qn = q.pow(n);
  const Rational qmn = q.pow(-n);
  const Rational den = Rational(1) - alpha2;
  return {qn * alpha2 * (Rational(1) - qmn) / den, qn * (qmn - alpha2) / den};
}

Rational LadderExpansion::sum() const {
  Rational acc(0);
  for (const auto& c : coeffs) acc += c;
  return acc;
}

LadderExpansion descend_expand(int n, int k, const Rational& alpha2, const Rational& q) {
  if (k < 0 || k > n) throw Error(ErrorKind::Degree, "descend needs 0 <= k <= n");
  LadderExpansion ex{n, k, {Rational(1)}};
  ex.coeffs.reserve(k + 1);
  for (int s = 0; s < k; ++s) {
    const Rational beta = alpha2 * q.pow(-s);
    if (beta.is_one()) {
      throw Error(ErrorKind::ExcludedParameter, "descend needs A != q^" + std::to_string(s));
    }
    std::vector<Rational> next(ex.coeffs.size() + 1, Rational(0));
    for (std::size_t j = 0; j < ex.coeffs.size(); ++j) {
      const SplitCoeffs sc = contiguous_split(n - static_cast<int>(j), beta, q);
      next[j + 1] += ex.coeffs[j] * sc.a;
      next[j] += ex.coeffs[j] * sc.b;
    }
    ex.coeffs = std::move(next);
  }
  return ex;
}

QPoly reconstruct_descend(const SeriesSpec& top, const LadderExpansion& ex) {
  if (top.numerators.empty()) throw Error(ErrorKind::Mode, "descend template needs a split numerator");
  SeriesSpec spec = top;
  spec.numerators[0] = top.numerators[0] * top.q.pow(-ex.shift);
  QPoly acc(series_variable(top));
  for (int j = 0; j <= ex.order(); ++j) {
    spec.n = ex.n - j;
    acc += build_series(spec) * ex.coeffs[j];
  }
  return acc;
}

QPoly verify_identity(const QPoly& lhs, const QPoly& rhs) { return lhs - rhs; }

LadderExpansion laguerre_ladder(int n, int j, const Rational& q) {
  if (j < 0 || n < 0) throw Error(ErrorKind::Degree, "ladder needs n, j >= 0");
  LadderExpansion ex{n, j, {Rational(1)}};
  for (int s = 0; s < j; ++s) {
    std::vector<Rational> next(ex.coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < ex.coeffs.size(); ++i) {
      const int m = n - static_cast<int>(i);
      if (m < 0) continue;
      const Rational c = ex.coeffs[i] * q.pow(-m);
      next[i] += c;
      if (m >= 1) next[i + 1] -= c;
    }
    ex.coeffs = std::move(next);
  }
  // Entries past degree 0 are structurally zero; keep exactly j + 1 slots.
  return ex;
}

QPoly reconstruct_laguerre_ladder(const LadderExpansion& ex, const Rational& t, const Rational& q) {
  const Rational shifted = t * q.pow(ex.shift);
  QPoly acc;
  for (int i = 0; i <= ex.order() && ex.n - i >= 0; ++i) acc += laguerre(shifted, ex.n - i, q) * ex.coeffs[i];
  return acc;
}

MultiplierStep multiplier_step(const FamilyId& fam, int m, const Rational& q) {
  const Rational qm1 = q.pow(m + 1);
  if (const auto* f = std::get_if<QLaguerre>(&fam)) {
    const Rational den = f->t * qm1;
    return {checked_div(qm1 - Rational(1), den, "q-Laguerre multiplier"),
            checked_div(Rational(1), den, "q-Laguerre multiplier")};
  }
  if (const auto* f = std::get_if<LittleQJacobi>(&fam)) {
    const Rational den = f->a * f->b * q.pow(2 * m + 2) - Rational(1);
    return {checked_div(f->b * qm1 * (f->a * qm1 - Rational(1)), den, "little q-Jacobi multiplier"),
            checked_div(f->b * qm1 - Rational(1), den, "little q-Jacobi multiplier")};
  }
  if (const auto* f = std::get_if<QMeixner>(&fam)) {
    return {f->c * (f->b * qm1 - Rational(1)) / qm1, (qm1 + f->c) / qm1};
  }
  throw Error(ErrorKind::Mode, "Al-Salam-Carlitz I has no multiplier relation");
}

QPoly multiplier_factor(const FamilyId& fam, const Rational& q) {
  if (std::holds_alternative<QLaguerre>(fam)) return QPoly::linear(Rational(1), Rational(1));
  if (const auto* f = std::get_if<LittleQJacobi>(&fam)) return QPoly::linear(Rational(1), -f->b * q);
  if (const auto* f = std::get_if<QMeixner>(&fam)) return QPoly::linear(f->b * f->c, Rational(1), Variable::X);
  throw Error(ErrorKind::Mode, "Al-Salam-Carlitz I has no multiplier relation");
}

std::string_view relation_name(RelationId id) noexcept {
  switch (id) {
    case RelationId::LaguerreMultiplier: return "laguerre-multiplier";
    case RelationId::LaguerreDilation: return "laguerre-dilation";
    case RelationId::JacobiMultiplier: return "jacobi-multiplier";
    case RelationId::JacobiParameterLowering: return "jacobi-parameter-lowering";
    case RelationId::MeixnerMultiplier: return "meixner-multiplier";
    case RelationId::LaguerreParameterShift: return "laguerre-parameter-shift";
    case RelationId::DoubleSplit: return "double-split";
  }
  return "unknown";
}

RelationId parse_relation(std::string_view name) {
  for (RelationId id : kAllRelations) {
    if (relation_name(id) == name) return id;
  }
  throw Error(ErrorKind::Config, "unknown relation '" + std::string(name) + "'");
}

std::vector<std::string> relation_parameters(RelationId id) {
  switch (id) {
    case RelationId::LaguerreMultiplier:
    case RelationId::LaguerreDilation:
    case RelationId::LaguerreParameterShift: return {"t"};
    case RelationId::JacobiMultiplier:
    case RelationId::JacobiParameterLowering: return {"a", "b"};
    case RelationId::MeixnerMultiplier: return {"b", "c"};
    case RelationId::DoubleSplit: return {"t", "u"};
  }
  return {};
}

int relation_min_degree(RelationId id) noexcept {
  switch (id) {
    case RelationId::LaguerreMultiplier:
    case RelationId::JacobiMultiplier:
    case RelationId::MeixnerMultiplier: return 0;
    default: return 1;
  }
}

RelationCheck relation_residual(RelationId id, int n, const ParamPoint& point) {
  require_degree(id, n);
  const Rational& q = point.q();
  const Rational one(1);
  QPoly lhs;
  QPoly rhs;
  switch (id) {
    case RelationId::LaguerreMultiplier: {
      const Rational& t = point.value("t");
      require_orthogonal(QLaguerre{t}, q);
      const MultiplierStep st = multiplier_step(QLaguerre{t}, n, q);
      lhs = multiplier_factor(QLaguerre{t}, q) * laguerre(t, n, q).dilate(q);
      rhs = laguerre(t, n + 1, q) * st.alpha + laguerre(t, n, q) * st.beta;
      break;
    }
    case RelationId::LaguerreDilation: {
      const Rational& t = point.value("t");
      require_orthogonal(QLaguerre{t}, q);
      const Rational qmn = q.pow(-n);
      lhs = laguerre(t, n, q);
      rhs = laguerre(t, n, q).dilate(q) * qmn - laguerre(t, n - 1, q).dilate(q) * ((one - t * q.pow(n)) * qmn);
      break;
    }
    case RelationId::JacobiMultiplier: {
      const Rational& a = point.value("a");
      const Rational& b = point.value("b");
      const LittleQJacobi fam{a, b};
      require_orthogonal(fam, q);
      const MultiplierStep st = multiplier_step(fam, n, q);
      lhs = multiplier_factor(fam, q) * jacobi(a, b * q, n, q);
      rhs = jacobi(a, b, n + 1, q) * st.alpha + jacobi(a, b, n, q) * st.beta;
      break;
    }
    case RelationId::JacobiParameterLowering: {
      const Rational& a = point.value("a");
      const Rational& b = point.value("b");
      require_orthogonal(LittleQJacobi{a, b}, q);
      const Rational den = one - a * b * q.pow(2 * n + 1);
      const Rational c0 = checked_div(one - a * b * q.pow(n + 1), den, "parameter lowering");
      const Rational c1 = checked_div(a * b * q.pow(n + 1) * (one - q.pow(n)), den, "parameter lowering");
      lhs = jacobi(a, b, n, q);
      rhs = jacobi(a, b * q, n, q) * c0 + jacobi(a, b * q, n - 1, q) * c1;
      break;
    }
    case RelationId::MeixnerMultiplier: {
      const QMeixner fam{point.value("b"), point.value("c")};
      require_orthogonal(fam, q);
      const MultiplierStep st = multiplier_step(fam, n, q);
      lhs = multiplier_factor(fam, q) * classical_poly(QMeixner{fam.b, fam.c / q}, n, q);
      rhs = classical_poly(fam, n + 1, q) * st.alpha + classical_poly(fam, n, q) * st.beta;
      break;
    }
    case RelationId::LaguerreParameterShift: {
      const Rational& t = point.value("t");
      require_orthogonal(QLaguerre{t}, q);
      const Rational qmn = q.pow(-n);
      lhs = laguerre(t / q, n, q);
      rhs = (laguerre(t, n, q) - laguerre(t, n - 1, q)) * qmn;
      break;
    }
    case RelationId::DoubleSplit: {
      const Rational& t = point.value("t");
      const Rational& u = point.value("u");
      const PhiSmall target{2, t, u};
      require_target_parameters(target, n, q);
      if (u * q == q.pow(-n)) throw Error(ErrorKind::ExcludedParameter, "double split needs u q != q^-n");
      const Rational qmn = q.pow(-n);
      const Rational d0 = qmn - u;
      const Rational d1 = qmn - u * q;
      const Rational lead = q.pow(-2 * n) * (one - u) * (one - u * q) / (d0 * d1);
      const std::array<Rational, 3> c = {
          one,
          u * (one + q) * (one - qmn) / d1,
          u * u * (one - qmn) * (one - q.pow(1 - n)) / (d0 * d1),
      };
      SeriesSpec spec = quasi_spec(target, n, q);
      lhs = build_series(spec) * lead;
      spec.numerators[0] = u;
      rhs = QPoly();
      for (int i = 0; i < 3 && i <= n; ++i) {
        spec.n = n - i;
        rhs += build_series(spec) * c[i];
      }
      break;
    }
  }
  return {lhs, rhs, verify_identity(lhs, rhs)};
}

}  // namespace qortho
