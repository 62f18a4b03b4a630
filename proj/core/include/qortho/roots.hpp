#pragma once

#include <cstddef>
#include <vector>

#include "qortho/qpoly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

/// One real root: either strictly inside (lower, upper), or exactly
/// lower == upper when the root is rational and was hit during bisection.
struct IsolatedRoot {
  Rational lower;
  Rational upper;
  double value = 0.0;  // lies in [lower, upper]

  bool exact() const { return lower == upper; }
};

/// Ordered real roots of a polynomial with disjoint isolating intervals,
/// each refined to width below 2^-53 * max(1, |root|).
struct RootSet {
  QPoly poly;
  QPoly squarefree;  // poly / gcd(poly, poly')
  bool simple = false;
  std::vector<IsolatedRoot> roots;

  std::size_t size() const noexcept { return roots.size(); }
  std::vector<double> values() const;
  /// Roots strictly below zero, decided exactly.
  int negatives() const;
  /// Roots strictly inside (lo, hi), decided exactly.
  int count_in(const Rational& lo, const Rational& hi) const;
};

/// Sturm-sequence isolation over the rationals. Throws Error(Degree) for
/// the zero polynomial.
RootSet isolate_roots(const QPoly& p);

/// gcd(p, p') is constant.
bool is_square_free(const QPoly& p);

/// Sign of (root - x): -1, 0 or 1, decided exactly.
int compare_root(const RootSet& set, std::size_t i, const Rational& x);

/// Sign of (a.roots[i] - b.roots[j]). Both intervals are refined on
/// copies until they separate. Throws Error(Degenerate) if the two roots
/// coincide exactly and Error(Refinement) after 256 bisections.
int compare_roots(const RootSet& a, std::size_t i, const RootSet& b, std::size_t j);

/// Number of sign changes of the Sturm sequence at x (zeros skipped).
int sturm_variations(const std::vector<QPoly>& chain, const Rational& x);
std::vector<QPoly> sturm_chain(const QPoly& p);

}  // namespace qortho
