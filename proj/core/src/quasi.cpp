#include "qortho/quasi.hpp"

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

// Basis polynomials reached after s multiplier steps: P^{(s)}_m.
struct Level {
  FamilyId family;
  Rational dilation;

  QPoly poly(int m, const Rational& q) const { return classical_poly(family, m, q).dilate(dilation); }
};

Level level_of(const QuasiTargetId& target, int s, const Rational& q) {
  return std::visit(overloaded{
                        [&](const PhiSmall& t) { return Level{QLaguerre{t.t}, q.pow(s)}; },
                        [&](const PhiBig& t) { return Level{LittleQJacobi{t.a, t.b * q.pow(s)}, Rational(1)}; },
                        [&](const VarphiMeixner& t) { return Level{QMeixner{t.b, t.c * q.pow(-s)}, Rational(1)}; },
                        [&](const VarPhiASC& t) { return Level{AlSalamCarlitzI{t.a}, Rational(1)}; },
                    },
                    target);
}

// factor_s with factor_s * P^{(s)}_m = alpha P^{(s-1)}_{m+1} + beta P^{(s-1)}_m.
QPoly level_factor(const QuasiTargetId& target, int s, const Rational& q) {
  const Level below = level_of(target, s - 1, q);
  return multiplier_factor(below.family, q).dilate(below.dilation);
}

// (prod_{s<=j} factor_s) P^{(j)}_{n-j} over P^{(0)}_{n-j+i}, i = 0..j.
std::vector<Rational> lift_to_base(const QuasiTargetId& target, int n, int j, const Rational& q) {
  std::vector<Rational> e{Rational(1)};
  const int base = n - j;
  for (int s = j; s >= 1; --s) {
    const FamilyId below = level_of(target, s - 1, q).family;
    std::vector<Rational> next(e.size() + 1, Rational(0));
    for (std::size_t i = 0; i < e.size(); ++i) {
      const MultiplierStep st = multiplier_step(below, base + static_cast<int>(i), q);
      next[i + 1] += e[i] * st.alpha;
      next[i] += e[i] * st.beta;
    }
    e = std::move(next);
  }
  return e;
}

}  // namespace

int BasisExpansion::lowest_degree() const {
  for (int m = 0; m < static_cast<int>(coeffs.size()); ++m) {
    if (!coeffs[m].is_zero()) return m;
  }
  return n + 1;
}

bool BasisExpansion::vanishes_below(int degree) const {
  if (!residual.is_zero() || degree < 0 || degree >= static_cast<int>(coeffs.size())) return false;
  return lowest_degree() == degree && coeffs[degree].degree() == 0;
}

BasisExpansion expand_in_basis(const QPoly& target, const FamilyId& fam, const Rational& q, int max_terms) {
  if (target.is_zero()) throw Error(ErrorKind::Degree, "cannot expand the zero polynomial");
  const int n = target.degree();
  if (n > kMaxSeriesDegree) throw Error(ErrorKind::Degree, "target degree exceeds the supported basis range");
  const Variable var = family_variable(fam);
  if (!target.is_constant() && target.variable() != var) {
    throw Error(ErrorKind::Mode, "target variable does not match " + family_name(fam));
  }
  const int low = max_terms < 0 ? 0 : std::max(0, n - max_terms + 1);
  BasisExpansion ex{fam, n, std::vector<QPoly>(n + 1, QPoly(var)), target.with_variable(var)};
  for (int m = n; m >= low; --m) {
    const Rational c = ex.residual.coeff(m);
    if (c.is_zero()) continue;
    const QPoly basis = classical_poly(fam, m, q);
    if (basis.degree() != m) throw Error(ErrorKind::Degree, "basis polynomial degenerates at degree " + std::to_string(m));
    const Rational coef = c / basis.leading();
    ex.coeffs[m] = QPoly::constant(coef, var);
    ex.residual -= basis * coef;
  }
  return ex;
}

bool PrefactoredExpansion::degree_law_holds() const {
  const bool constant_only = std::holds_alternative<VarPhiASC>(target);
  for (int i = 0; i <= k; ++i) {
    if (structured[i].degree() != (constant_only ? 0 : k - i)) return false;
  }
  return true;
}

bool PrefactoredExpansion::certified() const {
  for (const auto& a : descend.coeffs) {
    if (a.is_zero()) return false;
  }
  return structured_residual.is_zero() && constant.vanishes_below(n - k);
}

PrefactoredExpansion prefactored_expand(const QuasiTargetId& target, int n, const Rational& q) {
  const int k = target_order(target);
  if (k < 0 || (k > 0 && k > n - 1)) throw Error(ErrorKind::Degree, "prefactored expansion needs 1 <= k <= n-1");
  const QPoly phi = quasi_poly(target, n, q);
  const FamilyId fam = underlying_family(target);
  const Variable var = family_variable(fam);

  PrefactoredExpansion out;
  out.target = target;
  out.n = n;
  out.k = k;
  out.prefactor = weight_prefactor(target, q).with_variable(var);
  out.product = out.prefactor * phi;
  out.descend = descend_expand(n, k, target_u(target) * q.pow(k - 1), q);

  // c_j turns the j-th collapsed basis series into the normalized P^{(j)}_{n-j}.
  std::vector<Rational> c(k + 1);
  for (int j = 0; j <= k; ++j) c[j] = classical_prefactor(level_of(target, j, q).family, n - j, q).inverse();

  out.structured.assign(k + 1, QPoly(var));
  if (std::holds_alternative<VarPhiASC>(target)) {
    for (int i = 0; i <= k; ++i) out.structured[i] = QPoly::constant(out.descend.coeffs[i] * c[i], var);
  } else {
    // tail[j] = prod_{s=j+1}^k factor_s
    std::vector<QPoly> tail(k + 1, QPoly::constant(Rational(1), var));
    for (int j = k - 1; j >= 0; --j) tail[j] = tail[j + 1] * level_factor(target, j + 1, q);
    for (int j = 0; j <= k; ++j) {
      const std::vector<Rational> e = lift_to_base(target, n, j, q);
      const Rational scale = out.descend.coeffs[j] * c[j];
      for (int i = 0; i <= j; ++i) {
        // e[j - i] sits on P_{n-j+(j-i)} = P_{n-i}
        out.structured[i] += tail[j] * (scale * e[j - i]);
      }
    }
  }

  const Level base = level_of(target, 0, q);
  QPoly assembled(var);
  for (int i = 0; i <= k; ++i) assembled += out.structured[i] * base.poly(n - i, q);
  out.structured_residual = verify_identity(assembled, out.product);
  out.constant = expand_in_basis(out.product, fam, q);
  return out;
}

std::string_view to_string(MomentVerdict v) noexcept {
  switch (v) {
    case MomentVerdict::Zero: return "zero";
    case MomentVerdict::Nonzero: return "nonzero";
    case MomentVerdict::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

MomentVerdict classify_moment(double normalized, const Tolerances& tol) noexcept {
  const double v = std::abs(normalized);
  if (v < tol.zero) return MomentVerdict::Zero;
  if (v > tol.nonzero) return MomentVerdict::Nonzero;
  return MomentVerdict::Indeterminate;
}

int laguerre_range_index(const Rational& t, const Rational& q) {
  if (t.sign() <= 0) throw Error(ErrorKind::Admissibility, "q-Laguerre needs t = q^delta > 0");
  if (t < Rational(1)) return 0;
  for (int j = 0; j <= kMaxSeriesDegree; ++j) {
    const Rational lo = q.pow(-j);
    if (t == lo) throw Error(ErrorKind::Boundary, "t = q^-" + std::to_string(j) + " sits on a range boundary");
    if (t < q.pow(-j - 1)) return j;
  }
  throw Error(ErrorKind::Degree, "t lies beyond the supported ladder range");
}

WeightSpec order_weight(const OrderTarget& target, const Rational& q) {
  return std::visit(overloaded{
                        [&](const QuasiTargetId& t) { return target_weight(t, q); },
                        [&](const FamilyId& f) { return natural_weight(f); },
                        [&](const LaguerreBelowRange& l) {
                          const int j = laguerre_range_index(l.t, q);
                          return natural_weight(QLaguerre{l.t * q.pow(j)});
                        },
                    },
                    target);
}

QPoly order_poly(const OrderTarget& target, int n, const Rational& q) {
  return std::visit(overloaded{
                        [&](const QuasiTargetId& t) { return quasi_poly(t, n, q); },
                        [&](const FamilyId& f) { return classical_poly(f, n, q); },
                        [&](const LaguerreBelowRange& l) { return classical_poly(QLaguerre{l.t}, n, q); },
                    },
                    target);
}

namespace {

int structural_order(const OrderTarget& target, int n, const Rational& q) {
  return std::visit(overloaded{
                        [&](const QuasiTargetId& t) {
                          const PrefactoredExpansion ex = prefactored_expand(t, n, q);
                          if (!ex.constant.residual.is_zero() || !ex.structured_residual.is_zero()) return -1;
                          return n - ex.constant.lowest_degree();
                        },
                        [&](const FamilyId&) { return 0; },
                        [&](const LaguerreBelowRange& l) {
                          const int j = laguerre_range_index(l.t, q);
                          const LadderExpansion ladder = laguerre_ladder(n, j, q);
                          const QPoly lhs = classical_poly(QLaguerre{l.t}, n, q);
                          if (!verify_identity(lhs, reconstruct_laguerre_ladder(ladder, l.t, q)).is_zero()) return -1;
                          int order = 0;
                          for (int i = 0; i <= ladder.order(); ++i) {
                            if (!ladder.coeffs[i].is_zero()) order = i;
                          }
                          return order;
                        },
                    },
                    target);
}

}  // namespace

OrderResult detect_order(const OrderTarget& target, int n, const Rational& q, const Tolerances& tol) {
  OrderResult out;
  out.weight = order_weight(target, q);
  const QPoly p = order_poly(target, n, q);
  out.structural_order = structural_order(target, n, q);
  for (int t = 0; t <= n; ++t) {
    const MomentValue mv = moment_detail(out.weight, p, t, q, tol.quadrature);
    MomentRow row{t, mv.value, mv.magnitude, mv.normalized(), MomentVerdict::Indeterminate};
    row.verdict = classify_moment(row.normalized, tol);
    out.moments.push_back(row);
    if (row.verdict == MomentVerdict::Indeterminate) {
      throw Error(ErrorKind::Indeterminate, "moment t=" + std::to_string(t) + " normalized " +
                                                std::to_string(row.normalized) + " lies in the tolerance gap");
    }
    if (row.verdict == MomentVerdict::Nonzero) {
      out.order = n - t;
      return out;
    }
  }
  throw Error(ErrorKind::Degree, "no nonzero moment up to t = n");
}

}  // namespace qortho
