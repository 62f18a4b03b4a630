#include "qortho/roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qortho/error.hpp"

namespace qortho {

namespace {

constexpr int kMaxComparisonSteps = 256;

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) * Rational(1, 2); }

// |lc| normalization keeps signs and shrinks coefficients.
QPoly normalized(const QPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading().abs().inverse();
}

Rational cauchy_bound(const QPoly& p) {
  const auto c = p.coeffs();
  const Rational lead = p.leading().abs();
  Rational m(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, c[i].abs() / lead);
  // Round up to an integer so the starting endpoints stay short.
  const mpz_class ceil_m = (m.raw().get_num() + m.raw().get_den() - 1) / m.raw().get_den();
  return Rational(mpq_class(ceil_m + 2));
}

// Shrinks the interval by one bisection; returns false if it became exact.
bool bisect(IsolatedRoot& r, const QPoly& sf) {
  if (r.exact()) return false;
  const Rational mid = midpoint(r.lower, r.upper);
  const int sm = sf.sign_at(mid);
  if (sm == 0) {
    r.lower = r.upper = mid;
    return false;
  }
  if (sm == sf.sign_at(r.lower)) {
    r.lower = mid;
  } else {
    r.upper = mid;
  }
  return true;
}

void refine_to_precision(IsolatedRoot& r, const QPoly& sf) {
  for (;;) {
    if (r.exact()) break;
    const double scale = std::max({1.0, std::abs(r.lower.to_double()), std::abs(r.upper.to_double())});
    if ((r.upper - r.lower).to_double() < std::ldexp(scale, -53)) break;
    bisect(r, sf);
  }
  r.value = r.exact() ? r.lower.to_double() : midpoint(r.lower, r.upper).to_double();
  // Keep the float inside the interval after rounding.
  r.value = std::clamp(r.value, r.lower.to_double(), r.upper.to_double());
}

// A split point in (lo, hi) that is not a root of sf.
Rational split_point(const Rational& lo, const Rational& hi, const QPoly& sf) {
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      const Rational p = lo + (hi - lo) * Rational(num, den);
      if (sf.sign_at(p) != 0) return p;
    }
  }
}

}  // namespace

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{normalized(p)};
  if (p.degree() <= 0) return chain;
  chain.push_back(normalized(p.derivative()));
  while (chain.back().degree() > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(normalized(-r));
  }
  return chain;
}

int sturm_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& s : chain) {
    const int v = s.sign_at(x);
    if (v == 0) continue;
    if (prev != 0 && v != prev) ++changes;
    prev = v;
  }
  return changes;
}

bool is_square_free(const QPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

RootSet isolate_roots(const QPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::Degree, "cannot isolate roots of the zero polynomial");
  RootSet out;
  out.poly = p;
  if (p.degree() == 0) {
    out.squarefree = p;
    out.simple = true;
    return out;
  }
  const QPoly g = gcd(p, p.derivative());
  out.squarefree = normalized(divmod(p, g).first);
  out.simple = g.degree() == 0;
  const QPoly& sf = out.squarefree;
  const std::vector<QPoly> chain = sturm_chain(sf);

  const Rational bound = cauchy_bound(sf);
  struct Span {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Span> work{{-bound, bound, sturm_variations(chain, -bound), sturm_variations(chain, bound)}};
  while (!work.empty()) {
    Span s = work.back();
    work.pop_back();
    const int count = s.vlo - s.vhi;
    if (count == 0) continue;
    if (count == 1) {
      IsolatedRoot r{s.lo, s.hi, 0.0};
      refine_to_precision(r, sf);
      out.roots.push_back(r);
      continue;
    }
    const Rational mid = split_point(s.lo, s.hi, sf);
    const int vm = sturm_variations(chain, mid);
    work.push_back({mid, s.hi, vm, s.vhi});
    work.push_back({s.lo, mid, s.vlo, vm});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lower < b.lower; });
  return out;
}

std::vector<double> RootSet::values() const {
  std::vector<double> v;
  v.reserve(roots.size());
  for (const auto& r : roots) v.push_back(r.value);
  return v;
}

int compare_root(const RootSet& set, std::size_t i, const Rational& x) {
  const IsolatedRoot& r = set.roots.at(i);
  if (r.exact()) return r.lower < x ? -1 : (r.lower > x ? 1 : 0);
  if (x <= r.lower) return 1;
  if (x >= r.upper) return -1;
  const int sx = set.squarefree.sign_at(x);
  if (sx == 0) return 0;
  // Same sign as at the lower end: no sign change in (lower, x].
  return sx == set.squarefree.sign_at(r.lower) ? 1 : -1;
}

int RootSet::negatives() const {
  int n = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (compare_root(*this, i, Rational(0)) < 0) ++n;
  }
  return n;
}

int RootSet::count_in(const Rational& lo, const Rational& hi) const {
  int n = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (compare_root(*this, i, lo) > 0 && compare_root(*this, i, hi) < 0) ++n;
  }
  return n;
}

int compare_roots(const RootSet& a, std::size_t i, const RootSet& b, std::size_t j) {
  IsolatedRoot ra = a.roots.at(i);
  IsolatedRoot rb = b.roots.at(j);
  const auto separated = [&]() -> int {
    if (ra.upper < rb.lower || (ra.upper == rb.lower && !(ra.exact() && rb.exact()))) return -1;
    if (rb.upper < ra.lower || (rb.upper == ra.lower && !(ra.exact() && rb.exact()))) return 1;
    return 0;
  };
  // A root shared by both polynomials inside both intervals is root i of a
  // and root j of b at once, and no refinement would separate them.
  const QPoly g = gcd(a.squarefree, b.squarefree);
  if (g.degree() >= 1 && separated() == 0) {
    const RootSet common = isolate_roots(g);
    const auto inside = [&](std::size_t c, const IsolatedRoot& r) {
      if (r.exact()) return compare_root(common, c, r.lower) == 0;
      return compare_root(common, c, r.lower) > 0 && compare_root(common, c, r.upper) < 0;
    };
    for (std::size_t c = 0; c < common.size(); ++c) {
      if (inside(c, ra) && inside(c, rb)) {
        throw Error(ErrorKind::Degenerate, "compared roots coincide near " + std::to_string(ra.value));
      }
    }
  }
  for (int step = 0; step < kMaxComparisonSteps; ++step) {
    if (const int s = separated(); s != 0) return s;
    if (ra.exact() && rb.exact()) {
      if (ra.lower == rb.lower) throw Error(ErrorKind::Degenerate, "compared roots coincide exactly");
      return ra.lower < rb.lower ? -1 : 1;
    }
    bisect(ra, a.squarefree);
    bisect(rb, b.squarefree);
  }
  throw Error(ErrorKind::Refinement, "root comparison did not separate within 256 bisections");
}

}  // namespace qortho
