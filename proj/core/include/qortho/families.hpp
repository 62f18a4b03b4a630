#pragma once

#include <string>
#include <variant>

#include "qortho/hyperq.hpp"
#include "qortho/qpoly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

// Classical q-orthogonal families. Every parameter is an exact q-power value.

/// q-Laguerre L_n^{(delta)}(z;q) with t = q^delta.
struct QLaguerre {
  Rational t;
};
/// Little q-Jacobi p_n(z;a,b|q).
struct LittleQJacobi {
  Rational a;
  Rational b;
};
/// q-Meixner M_n(x;b,c;q), written in x = q^{-z}.
struct QMeixner {
  Rational b;
  Rational c;
};
/// Al-Salam-Carlitz I U_n^{(a)}(z;q).
struct AlSalamCarlitzI {
  Rational a;
};

using FamilyId = std::variant<QLaguerre, LittleQJacobi, QMeixner, AlSalamCarlitzI>;

std::string family_name(const FamilyId& fam);
std::string family_key(const FamilyId& fam);
Variable family_variable(const FamilyId& fam) noexcept;

/// Parameter constraints under which the family is orthogonal with respect
/// to its positive weight. Throws Error(Admissibility) naming the violated
/// constraint. q-Laguerre requires delta > -1, i.e. t < q^{-1}.
void require_orthogonal(const FamilyId& fam, const Rational& q);

/// The hypergeometric part of the n-th classical polynomial.
SeriesSpec classical_spec(const FamilyId& fam, int n, const Rational& q);
/// Scalar normalization in front of the series: (tq;q)_n/(q;q)_n for
/// q-Laguerre, (-a)^n q^{n(n-1)/2} for Al-Salam-Carlitz I, 1 otherwise.
Rational classical_prefactor(const FamilyId& fam, int n, const Rational& q);

/// Exact n-th polynomial of the family. Little q-Jacobi needs 0 < aq < 1 and
/// bq < 1, q-Meixner 0 < bq < 1 and c > 0, Al-Salam-Carlitz I a < 0; any
/// q-Laguerre t with nonvanishing (tq;q)_n is accepted so that the
/// quasi-orthogonal range delta < -1 can be built.
QPoly classical_poly(const FamilyId& fam, int n, const Rational& q);

// Quasi-orthogonal targets. u = q^gamma; the numerator/denominator pair
// (u q^k, u) is what separates each target from its classical family.

/// 2phi2(q^{-n}, u q^k; t q, u; q, -q^{n+1} t z)
struct PhiSmall {
  int k = 1;
  Rational t;
  Rational u;
};
/// 3phi2(q^{-n}, u q^k, a b q^{n+1}; a q, u; q, q z)
struct PhiBig {
  int k = 1;
  Rational a;
  Rational b;
  Rational u;
};
/// 3phi2(q^{-n}, u q^k, x; b q, u; q, -q^{n+1}/c), x = q^{-z}
struct VarphiMeixner {
  int k = 1;
  Rational b;
  Rational c;
  Rational u;
};
/// 3phi2(q^{-n}, u q^k, z^{-1}; 0, u; q, q z / a)
struct VarPhiASC {
  int k = 1;
  Rational a;
  Rational u;
};

using QuasiTargetId = std::variant<PhiSmall, PhiBig, VarphiMeixner, VarPhiASC>;

std::string target_name(const QuasiTargetId& target);
std::string target_key(const QuasiTargetId& target);
int target_order(const QuasiTargetId& target) noexcept;
Rational target_u(const QuasiTargetId& target);
FamilyId underlying_family(const QuasiTargetId& target);

/// Throws Error(ExcludedParameter) when u or u q^k lies in
/// {1, q^{-1}, ..., q^{-n}}.
void require_target_parameters(const QuasiTargetId& target, int n, const Rational& q);

SeriesSpec quasi_spec(const QuasiTargetId& target, int n, const Rational& q);

/// Exact degree-n target polynomial. k = 0 is accepted and yields the
/// classical series without its scalar prefactor.
QPoly quasi_poly(const QuasiTargetId& target, int n, const Rational& q);

/// The polynomial factor turning the target's weight into the classical
/// weight: (-z;q)_k, (z b q;q)_k, prod_{i<k} (x + b c q^{1-k+i}), or 1.
QPoly weight_prefactor(const QuasiTargetId& target, const Rational& q);

struct Monic {
  Rational leading;  // leading coefficient of the dilated polynomial
  QPoly poly;        // leading coefficient exactly one
};

/// Monic normalization of P_n(dilation * var).
Monic monic(const FamilyId& fam, int n, const Rational& q, const Rational& dilation = Rational(1));

}  // namespace qortho
