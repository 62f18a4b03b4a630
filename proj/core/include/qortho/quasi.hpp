#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qortho/contiguous.hpp"
#include "qortho/families.hpp"
#include "qortho/moments.hpp"
#include "qortho/qpoly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

/// p = sum_m coeffs[m] * P_m + residual over a classical basis P_m.
struct BasisExpansion {
  FamilyId basis;
  int n = 0;                  // degree of the expanded polynomial
  std::vector<QPoly> coeffs;  // indexed by basis degree, size n + 1
  QPoly residual;

  /// Lowest basis degree with a nonzero coefficient; n + 1 if none.
  int lowest_degree() const;
  /// Zero residual, coefficients vanishing below `degree`, and a nonzero
  /// constant at `degree`.
  bool vanishes_below(int degree) const;
};

/// Expands target over P_n, P_{n-1}, ..., P_{n-max_terms+1} of the family by
/// descending-degree elimination; the residual holds whatever the truncated
/// basis cannot absorb. max_terms < 0 means the full basis down to P_0.
/// Throws Error(Degree) if the target degree exceeds kMaxSeriesDegree,
/// Error(Mode) on a variable mismatch.
BasisExpansion expand_in_basis(const QPoly& target, const FamilyId& fam, const Rational& q, int max_terms = -1);

/// Both certificates for prefactor * target:
///  - structured: sum_{i<=k} g_{k-i} P_{n-i} assembled from the descend
///    coefficients and iterated multiplier relations, with deg g_{k-i} <= k-i;
///  - constant: the unique expansion over the full basis (degree n + k),
///    which must vanish below degree n - k.
struct PrefactoredExpansion {
  QuasiTargetId target;
  int n = 0;
  int k = 0;
  QPoly prefactor;
  QPoly product;                // prefactor * target
  LadderExpansion descend;      // target = sum_j A_j (basis series of degree n - j)
  std::vector<QPoly> structured;  // structured[i] multiplies P_{n-i}
  QPoly structured_residual;
  BasisExpansion constant;

  /// deg structured[i] == k - i for every i (exact degree law); the
  /// Al-Salam-Carlitz target has no prefactor and only constants.
  bool degree_law_holds() const;
  bool certified() const;
};

/// Throws as quasi_poly; Error(Degree) unless 1 <= k <= n - 1 (k = 0 is
/// accepted and yields the trivial certificate).
PrefactoredExpansion prefactored_expand(const QuasiTargetId& target, int n, const Rational& q);

struct Tolerances {
  double zero = 1e-12;     // |normalized moment| below this is Zero
  double nonzero = 1e-8;   // above this is Nonzero; between is Indeterminate
  double quadrature = 1e-14;
};

enum class MomentVerdict { Zero, Nonzero, Indeterminate };
std::string_view to_string(MomentVerdict v) noexcept;

struct MomentRow {
  int t_power = 0;
  double value = 0.0;
  double magnitude = 0.0;
  double normalized = 0.0;
  MomentVerdict verdict = MomentVerdict::Indeterminate;
};

MomentVerdict classify_moment(double normalized, const Tolerances& tol) noexcept;

/// A q-Laguerre polynomial with t = q^delta outside the orthogonal range:
/// q^{-j} < t < q^{-j-1} for some j >= 1.
struct LaguerreBelowRange {
  Rational t;
};

using OrderTarget = std::variant<QuasiTargetId, FamilyId, LaguerreBelowRange>;

/// j with q^{-j} < t < q^{-j-1}; Error(Boundary) when t = q^{-j} exactly,
/// Error(Admissibility) for t <= 0.
int laguerre_range_index(const Rational& t, const Rational& q);

struct OrderResult {
  int order = -1;             // from the moments
  int structural_order = -1;  // from the exact expansion
  std::vector<MomentRow> moments;
  WeightSpec weight;
  bool agree() const noexcept { return order == structural_order; }
};

/// Moment rows t = 0, 1, ... against the weight the theory prescribes for
/// the target, stopping at the first Nonzero row; order = n - t.
/// Throws Error(Indeterminate) when a row lands in the tolerance gap.
OrderResult detect_order(const OrderTarget& target, int n, const Rational& q, const Tolerances& tol = {});

/// The weight and polynomial detect_order uses.
WeightSpec order_weight(const OrderTarget& target, const Rational& q);
QPoly order_poly(const OrderTarget& target, int n, const Rational& q);

}  // namespace qortho
