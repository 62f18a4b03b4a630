#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qortho/families.hpp"
#include "qortho/hyperq.hpp"
#include "qortho/param_point.hpp"
#include "qortho/qpoly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

/// Coefficients of the one-step split
///   phi(q^{-n}, A q) = a * phi(q^{-n+1}, A) + b * phi(q^{-n}, A)
/// with every other parameter and the argument held fixed.
struct SplitCoeffs {
  Rational a;  // degree-lowered term
  Rational b;  // same-degree term
};

/// a = q^n A (1 - q^{-n}) / (1 - A), b = q^n (q^{-n} - A) / (1 - A).
/// Throws Error(ExcludedParameter) when A = 1.
SplitCoeffs contiguous_split(int n, const Rational& alpha2, const Rational& q);

/// coeffs[j] multiplies the degree n - j member of a basis sharing one
/// parameter shift; what `shift` means depends on the producing operation.
struct LadderExpansion {
  int n = 0;
  int shift = 0;
  std::vector<Rational> coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Rational sum() const;
};

/// k-fold split of phi(q^{-n}, A q) down to phi(q^{-n+j}, A q^{1-k}),
/// j = 0..k. For the quasi targets A = u q^{k-1}, so the bottom slot equals
/// the denominator u and the basis series collapse to classical ones.
/// shift = k. Requires 0 <= k <= n; throws Error(ExcludedParameter) when
/// A q^{-s} = 1 for some s < k.
LadderExpansion descend_expand(int n, int k, const Rational& alpha2, const Rational& q);

/// Sum of coeffs[j] * (top with degree n - j and numerators[0] lowered
/// by q^{shift}). top.numerators[0] must hold the raised value A q.
QPoly reconstruct_descend(const SeriesSpec& top, const LadderExpansion& ex);

/// Residual certificate: lhs - rhs. Zero means the identity holds exactly.
QPoly verify_identity(const QPoly& lhs, const QPoly& rhs);

/// Coefficients of L_n^{(delta)} over L_{n-i}^{(delta+j)}, i = 0..j, same
/// argument, from iterating L_m^{(d)} = q^{-m} (L_m^{(d+1)} - L_{m-1}^{(d+1)}).
/// shift = j. Independent of delta.
LadderExpansion laguerre_ladder(int n, int j, const Rational& q);

/// Sum of coeffs[i] * L_{n-i}^{(delta+shift)}(z), with t = q^delta.
QPoly reconstruct_laguerre_ladder(const LadderExpansion& ex, const Rational& t, const Rational& q);

/// Coefficients of the three-term multiplier relations
///   factor * P_m(lowered) = alpha * P_{m+1} + beta * P_m
/// where, for the given family instance P,
///   q-Laguerre:        factor 1 + z,         lowered P_m(zq)
///   little q-Jacobi:   factor 1 - z b q,     lowered p_m(z; a, bq)
///   q-Meixner:         factor x + b c,       lowered M_m(x; b, c/q)
/// Al-Salam-Carlitz I has no such relation (Error(Mode)).
struct MultiplierStep {
  Rational alpha;
  Rational beta;
};
MultiplierStep multiplier_step(const FamilyId& fam, int m, const Rational& q);
QPoly multiplier_factor(const FamilyId& fam, const Rational& q);

enum class RelationId {
  LaguerreMultiplier,       // (1+z) L_n(zq) in L_{n+1}, L_n
  LaguerreDilation,         // L_n(z) in L_n(zq), L_{n-1}(zq)
  JacobiMultiplier,         // (1 - zqb) p_n(z;a,bq) in p_{n+1}, p_n
  JacobiParameterLowering,  // p_n(z;a,b) in p_n(z;a,bq), p_{n-1}(z;a,bq)
  MeixnerMultiplier,        // (bc + x) M_n(x;b,c/q) in M_{n+1}, M_n
  LaguerreParameterShift,   // L_n^{(delta-1)} in L_n^{(delta)}, L_{n-1}^{(delta)}
  DoubleSplit,              // two-step split of 2phi2(q^{-n}, u q^2; t q, u)
};

inline constexpr RelationId kAllRelations[] = {
    RelationId::LaguerreMultiplier,     RelationId::LaguerreDilation,
    RelationId::JacobiMultiplier,       RelationId::JacobiParameterLowering,
    RelationId::MeixnerMultiplier,      RelationId::LaguerreParameterShift,
    RelationId::DoubleSplit,
};

std::string_view relation_name(RelationId id) noexcept;
/// Throws Error(Config) for unknown names.
RelationId parse_relation(std::string_view name);
/// Parameter names the relation reads from a ParamPoint.
std::vector<std::string> relation_parameters(RelationId id);
/// Smallest degree for which the relation is stated.
int relation_min_degree(RelationId id) noexcept;

struct RelationCheck {
  QPoly lhs;
  QPoly rhs;
  QPoly residual;
};

/// Assembles both sides of the relation exactly at degree n.
/// Throws Error(Admissibility) when the family constraints fail,
/// Error(ExcludedParameter) when a coefficient denominator vanishes,
/// Error(Degree) below relation_min_degree.
RelationCheck relation_residual(RelationId id, int n, const ParamPoint& point);

}  // namespace qortho
