#include "qortho/families.hpp"

#include "qortho/error.hpp"
#include "qortho/param_point.hpp"
#include "qortho/qpoch.hpp"

namespace qortho {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Admissibility, what);
}

// Constraints needed to build the polynomials at all (weights may need more).
void require_constructible(const FamilyId& fam, int n, const Rational& q) {
  const Rational one(1);
  std::visit(overloaded{
                 [&](const QLaguerre& f) {
                   require(n < 1 || !on_inverse_lattice(f.t, q, 1, n), "q-Laguerre needs (tq;q)_n != 0, got t=" + f.t.pretty());
                 },
                 [&](const LittleQJacobi& f) {
                   require((f.a * q).sign() > 0 && f.a * q < one, "little q-Jacobi needs 0 < aq < 1");
                   require(f.b * q < one, "little q-Jacobi needs bq < 1");
                 },
                 [&](const QMeixner& f) {
                   require((f.b * q).sign() > 0 && f.b * q < one, "q-Meixner needs 0 < bq < 1");
                   require(f.c.sign() > 0, "q-Meixner needs c > 0");
                 },
                 [&](const AlSalamCarlitzI& f) { require(f.a.sign() < 0, "Al-Salam-Carlitz I needs a < 0"); },
             },
             fam);
}

}  // namespace

std::string family_name(const FamilyId& fam) {
  return std::visit(overloaded{
                        [](const QLaguerre&) { return std::string("q-Laguerre"); },
                        [](const LittleQJacobi&) { return std::string("little q-Jacobi"); },
                        [](const QMeixner&) { return std::string("q-Meixner"); },
                        [](const AlSalamCarlitzI&) { return std::string("Al-Salam-Carlitz I"); },
                    },
                    fam);
}

std::string family_key(const FamilyId& fam) {
  return std::visit(overloaded{
                        [](const QLaguerre& f) { return "laguerre(t=" + f.t.pretty() + ")"; },
                        [](const LittleQJacobi& f) { return "jacobi(a=" + f.a.pretty() + ",b=" + f.b.pretty() + ")"; },
                        [](const QMeixner& f) { return "meixner(b=" + f.b.pretty() + ",c=" + f.c.pretty() + ")"; },
                        [](const AlSalamCarlitzI& f) { return "asc(a=" + f.a.pretty() + ")"; },
                    },
                    fam);
}

Variable family_variable(const FamilyId& fam) noexcept {
  return std::holds_alternative<QMeixner>(fam) ? Variable::X : Variable::Z;
}

void require_orthogonal(const FamilyId& fam, const Rational& q) {
  if (const auto* f = std::get_if<QLaguerre>(&fam)) {
    require(f->t.sign() > 0 && f->t < q.inverse(), "q-Laguerre orthogonality needs delta > -1 (0 < t < 1/q), got t=" +
                                                      f->t.pretty());
    return;
  }
  require_constructible(fam, 0, q);
}

SeriesSpec classical_spec(const FamilyId& fam, int n, const Rational& q) {
  return std::visit(
      overloaded{
          [&](const QLaguerre& f) {
            return SeriesSpec::make(n, {}, {f.t * q}, ArgLinear{-q.pow(n + 1) * f.t}, q);
          },
          [&](const LittleQJacobi& f) {
            return SeriesSpec::make(n, {f.a * f.b * q.pow(n + 1)}, {f.a * q}, ArgLinear{q}, q);
          },
          [&](const QMeixner& f) {
            return SeriesSpec::make(n, {}, {f.b * q}, ParamSlot{-q.pow(n + 1) / f.c}, q);
          },
          [&](const AlSalamCarlitzI& f) {
            return SeriesSpec::make(n, {}, {Rational(0)}, InverseSlot{q / f.a}, q);
          },
      },
      fam);
}

Rational classical_prefactor(const FamilyId& fam, int n, const Rational& q) {
  if (const auto* f = std::get_if<QLaguerre>(&fam)) return qpoch(f->t * q, q, n) / qpoch(q, q, n);
  if (const auto* f = std::get_if<AlSalamCarlitzI>(&fam)) return (-f->a).pow(n) * q.pow(n * (n - 1) / 2);
  return Rational(1);
}

QPoly classical_poly(const FamilyId& fam, int n, const Rational& q) {
  if (n < 0) throw Error(ErrorKind::Degree, "negative degree");
  require_constructible(fam, n, q);
  return build_series(classical_spec(fam, n, q)) * classical_prefactor(fam, n, q);
}

std::string target_name(const QuasiTargetId& target) {
  return std::visit(overloaded{
                        [](const PhiSmall&) { return std::string("phi-small"); },
                        [](const PhiBig&) { return std::string("phi-big"); },
                        [](const VarphiMeixner&) { return std::string("varphi-meixner"); },
                        [](const VarPhiASC&) { return std::string("varphi-asc"); },
                    },
                    target);
}

std::string target_key(const QuasiTargetId& target) {
  return std::visit(
      overloaded{
          [](const PhiSmall& t) {
            return "phi-small(k=" + std::to_string(t.k) + ",t=" + t.t.pretty() + ",u=" + t.u.pretty() + ")";
          },
          [](const PhiBig& t) {
            return "phi-big(k=" + std::to_string(t.k) + ",a=" + t.a.pretty() + ",b=" + t.b.pretty() +
                   ",u=" + t.u.pretty() + ")";
          },
          [](const VarphiMeixner& t) {
            return "varphi-meixner(k=" + std::to_string(t.k) + ",b=" + t.b.pretty() + ",c=" + t.c.pretty() +
                   ",u=" + t.u.pretty() + ")";
          },
          [](const VarPhiASC& t) {
            return "varphi-asc(k=" + std::to_string(t.k) + ",a=" + t.a.pretty() + ",u=" + t.u.pretty() + ")";
          },
      },
      target);
}

int target_order(const QuasiTargetId& target) noexcept {
  return std::visit([](const auto& t) { return t.k; }, target);
}

Rational target_u(const QuasiTargetId& target) {
  return std::visit([](const auto& t) { return t.u; }, target);
}

FamilyId underlying_family(const QuasiTargetId& target) {
  return std::visit(overloaded{
                        [](const PhiSmall& t) -> FamilyId { return QLaguerre{t.t}; },
                        [](const PhiBig& t) -> FamilyId { return LittleQJacobi{t.a, t.b}; },
                        [](const VarphiMeixner& t) -> FamilyId { return QMeixner{t.b, t.c}; },
                        [](const VarPhiASC& t) -> FamilyId { return AlSalamCarlitzI{t.a}; },
                    },
                    target);
}

void require_target_parameters(const QuasiTargetId& target, int n, const Rational& q) {
  const int k = target_order(target);
  if (k < 0) throw Error(ErrorKind::Degree, "negative order k");
  const Rational u = target_u(target);
  if (u.is_zero()) throw Error(ErrorKind::ExcludedParameter, "u = q^gamma must be nonzero");
  if (on_inverse_lattice(u, q, 0, n)) {
    throw Error(ErrorKind::ExcludedParameter, "u=" + u.pretty() + " lies in {1, q^-1, ..., q^-n}");
  }
  if (on_inverse_lattice(u * q.pow(k), q, 0, n)) {
    throw Error(ErrorKind::ExcludedParameter, "u q^k=" + (u * q.pow(k)).pretty() + " lies in {1, q^-1, ..., q^-n}");
  }
}

SeriesSpec quasi_spec(const QuasiTargetId& target, int n, const Rational& q) {
  return std::visit(
      overloaded{
          [&](const PhiSmall& t) {
            return SeriesSpec::make(n, {t.u * q.pow(t.k)}, {t.t * q, t.u}, ArgLinear{-q.pow(n + 1) * t.t}, q);
          },
          [&](const PhiBig& t) {
            return SeriesSpec::make(n, {t.u * q.pow(t.k), t.a * t.b * q.pow(n + 1)}, {t.a * q, t.u}, ArgLinear{q},
                                    q);
          },
          [&](const VarphiMeixner& t) {
            return SeriesSpec::make(n, {t.u * q.pow(t.k)}, {t.b * q, t.u}, ParamSlot{-q.pow(n + 1) / t.c}, q);
          },
          [&](const VarPhiASC& t) {
            return SeriesSpec::make(n, {t.u * q.pow(t.k)}, {Rational(0), t.u}, InverseSlot{q / t.a}, q);
          },
      },
      target);
}

QPoly quasi_poly(const QuasiTargetId& target, int n, const Rational& q) {
  if (n < 0) throw Error(ErrorKind::Degree, "negative degree");
  require_target_parameters(target, n, q);
  require_constructible(underlying_family(target), n, q);
  return build_series(quasi_spec(target, n, q));
}

QPoly weight_prefactor(const QuasiTargetId& target, const Rational& q) {
  return std::visit(overloaded{
                        [&](const PhiSmall& t) { return qpoch_poly(q, t.k, Rational(-1)); },
                        [&](const PhiBig& t) { return qpoch_poly(q, t.k, t.b * q); },
                        [&](const VarphiMeixner& t) {
                          QPoly acc = QPoly::constant(Rational(1), Variable::X);
                          for (int i = 0; i < t.k; ++i) {
                            acc *= QPoly::linear(t.b * t.c * q.pow(1 - t.k + i), Rational(1), Variable::X);
                          }
                          return acc;
                        },
                        [&](const VarPhiASC&) { return QPoly::constant(Rational(1)); },
                    },
                    target);
}

Monic monic(const FamilyId& fam, int n, const Rational& q, const Rational& dilation) {
  const QPoly p = classical_poly(fam, n, q).dilate(dilation);
  if (p.is_zero()) throw Error(ErrorKind::Degree, "dilation collapsed the polynomial to zero");
  return Monic{p.leading(), p.monic()};
}

}  // namespace qortho
