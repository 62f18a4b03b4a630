#include "qortho/classify.hpp"

#include "qortho/error.hpp"
#include "qortho/families.hpp"

namespace qortho {

namespace {

struct Context {
  ZeroClassification out;

  void claim(std::string name, std::string predicted, std::string observed, bool pass) {
    out.claims.push_back({std::move(name), std::move(predicted), std::move(observed), pass});
  }

  const RootSet& reference(std::string label, const QPoly& p) {
    out.references.emplace_back(std::move(label), isolate_roots(p));
    return out.references.back().second;
  }

  void finish() {
    out.pass = !out.claims.empty();
    for (const auto& c : out.claims) {
      out.pass = out.pass && c.pass;
      if (!out.predicted_case.empty()) {
        out.predicted_case += ";";
        out.observed_case += ";";
      }
      out.predicted_case += c.predicted;
      out.observed_case += c.observed;
    }
  }
};

void require_n(int n, int lo) {
  if (n < lo) throw Error(ErrorKind::Degree, "theorem needs n >= " + std::to_string(lo));
}

void boundary_if(bool on, const std::string& what) {
  if (on) throw Error(ErrorKind::Boundary, what);
}

void outside_if(bool out, const std::string& what) {
  if (out) throw Error(ErrorKind::Admissibility, what);
}

void excluded_lattice(const Rational& u, const Rational& q, int hi) {
  if (on_inverse_lattice(u, q, 0, hi)) {
    throw Error(ErrorKind::ExcludedParameter, "u=" + u.pretty() + " lies in {1, ..., q^-" + std::to_string(hi) + "}");
  }
}

int count_zero_roots(const RootSet& s) {
  int c = 0;
  for (std::size_t i = 0; i < s.size(); ++i) c += compare_root(s, i, Rational(0)) == 0;
  return c;
}

int count_positive(const RootSet& s) {
  int c = 0;
  for (std::size_t i = 0; i < s.size(); ++i) c += compare_root(s, i, Rational(0)) > 0;
  return c;
}

void real_simple(Context& ctx, int n) {
  const RootSet& z = ctx.out.zeros;
  const bool ok = static_cast<int>(z.size()) == n && z.simple;
  ctx.claim("real-simple", std::to_string(n) + " simple real zeros",
            std::to_string(z.size()) + " real zeros" + (z.simple ? ", simple" : ", repeated"), ok);
}

void positive_count(Context& ctx, int at_least) {
  const int pos = count_positive(ctx.out.zeros);
  ctx.claim("positive-count", ">=" + std::to_string(at_least) + " positive", std::to_string(pos) + " positive",
            pos >= at_least);
}

void at_most_two_negative(Context& ctx) {
  const int neg = ctx.out.zeros.negatives();
  ctx.claim("negatives", "<=2 negative", std::to_string(neg) + " negative", neg <= 2);
}

void two_set(Context& ctx, const std::string& name, const RootSet& a, const RootSet& b, Pattern expected) {
  InterlaceVerdict v = interlace(a, b, expected);
  ctx.claim(name, std::string(to_string(expected)), std::string(to_string(v.pattern)), v.holds());
  ctx.out.interlacing.push_back(std::move(v));
}

// Tries both three-set shapes and reports whichever holds.
void three_set(Context& ctx, const RootSet& z, const RootSet& x, const RootSet& xp, Pattern expected) {
  const Pattern other = expected == Pattern::CaseC_i ? Pattern::CaseC_ii : Pattern::CaseC_i;
  InterlaceVerdict v = interlace(z, x, xp, expected);
  Pattern seen = v.pattern;
  if (!v.holds() && interlace(z, x, xp, other).holds()) seen = other;
  ctx.claim("interlacing", std::string(to_string(expected)), std::string(to_string(seen)), v.holds());
  ctx.out.interlacing.push_back(std::move(v));
}

std::string laguerre_location(const RootSet& z, int n) {
  if (static_cast<int>(z.size()) != n) return "not-all-real";
  if (count_zero_roots(z) != 0) return "zero-root";
  const int neg = z.negatives();
  if (neg == 0) return "all-positive";
  if (neg == 1) return "one-negative";
  return std::to_string(neg) + "-negative";
}

std::string jacobi_location(const RootSet& z, int n) {
  if (static_cast<int>(z.size()) != n) return "not-all-real";
  const int neg = z.negatives();
  const int unit = z.count_in(Rational(0), Rational(1));
  if (neg == 1 && unit == n - 1) return "negative-then-unit";
  if (unit == n) return "all-unit";
  return "negative=" + std::to_string(neg) + ",unit=" + std::to_string(unit);
}

void laguerre_order1(Context& ctx, int n, const ParamPoint& pt) {
  require_n(n, 2);
  const Rational& q = pt.q();
  const Rational& t = pt.value("t");
  const Rational& u = pt.value("u");
  require_orthogonal(QLaguerre{t}, q);
  const Rational qmn = q.pow(-n);
  boundary_if(u == Rational(1) || u == qmn, "u sits on a region boundary {1, q^-n}");
  excluded_lattice(u, q, n + 1);

  ctx.out.zeros = isolate_roots(quasi_poly(PhiSmall{1, t, u}, n, q));
  const RootSet& x = ctx.reference("X", monic(QLaguerre{t}, n, q, q).poly);
  const RootSet& xp = ctx.reference("X'", monic(QLaguerre{t}, n - 1, q, q).poly);

  real_simple(ctx, n);
  const bool all_positive = u < Rational(1) || u > qmn;
  const std::string loc = laguerre_location(ctx.out.zeros, n);
  const std::string predicted = all_positive ? "all-positive" : "one-negative";
  ctx.claim("location", predicted, loc, loc == predicted);
  positive_count(ctx, n - 1);
  three_set(ctx, ctx.out.zeros, x, xp, u > qmn ? Pattern::CaseC_i : Pattern::CaseC_ii);
}

void laguerre_order2(Context& ctx, int n, const ParamPoint& pt) {
  require_n(n, 2);
  const Rational& q = pt.q();
  const Rational& t = pt.value("t");
  const Rational& u = pt.value("u");
  require_orthogonal(QLaguerre{t}, q);
  boundary_if(u == q.pow(-n) || u == q.pow(-n - 1), "u sits on a region boundary {q^-n, q^-n-1}");
  outside_if(!(u > q.pow(-n) && u < q.pow(-n - 1)), "u outside (q^-n, q^-n-1)");

  ctx.out.zeros = isolate_roots(quasi_poly(PhiSmall{2, t, u}, n, q));
  const RootSet& xp = ctx.reference("X'", monic(QLaguerre{t}, n - 1, q, q * q).poly);
  real_simple(ctx, n);
  at_most_two_negative(ctx);
  positive_count(ctx, n - 2);
  two_set(ctx, "interlacing", ctx.out.zeros, xp, Pattern::AlternateDegreeDrop);
}

void jacobi_order1(Context& ctx, int n, const ParamPoint& pt) {
  require_n(n, 2);
  const Rational& q = pt.q();
  const Rational& a = pt.value("a");
  const Rational& b = pt.value("b");
  const Rational& u = pt.value("u");
  require_orthogonal(LittleQJacobi{a, b}, q);
  const Rational one(1);
  const Rational qmn = q.pow(-n);
  const Rational qn1 = q.pow(n - 1);
  const Rational abq = a * b * q.pow(n + 1);
  boundary_if(u == one || u == qmn || u == qn1, "u sits on a region boundary {1, q^-n, q^(n-1)}");
  boundary_if(b.sign() > 0 && u == abq, "u sits on the boundary a b q^(n+1)");
  excluded_lattice(u, q, n + 1);

  ctx.out.zeros = isolate_roots(quasi_poly(PhiBig{1, a, b, u}, n, q));
  const LittleQJacobi shifted{a, b * q};
  const RootSet& x = ctx.reference("X", monic(shifted, n, q).poly);
  const RootSet& xp = ctx.reference("X'", monic(shifted, n - 1, q).poly);

  real_simple(ctx, n);
  const std::string loc = jacobi_location(ctx.out.zeros, n);
  const bool in_a = u > one && u < qmn;
  ctx.claim("negative-then-unit", in_a ? "negative-then-unit" : "not negative-then-unit", loc,
            (loc == "negative-then-unit") == in_a);
  // Sufficient condition only; the converse is not claimed.
  if ((u > qn1 && u < one) || (u < qn1 && b.sign() < 0)) ctx.claim("all-unit", "all-unit", loc, loc == "all-unit");
  positive_count(ctx, n - 1);
  if ((u > qn1 && u < qmn) || (u < qn1 && b.sign() < 0)) {
    three_set(ctx, ctx.out.zeros, x, xp, Pattern::CaseC_ii);
  } else if (u > qmn || (b.sign() > 0 && u < abq)) {
    three_set(ctx, ctx.out.zeros, x, xp, Pattern::CaseC_i);
  }
}

void jacobi_order2(Context& ctx, int n, const ParamPoint& pt) {
  require_n(n, 2);
  const Rational& q = pt.q();
  const Rational& a = pt.value("a");
  const Rational& b = pt.value("b");
  const Rational& u = pt.value("u");
  require_orthogonal(LittleQJacobi{a, b}, q);
  boundary_if(u == q.pow(-n) || u == q.pow(-n - 1), "u sits on a region boundary {q^-n, q^-n-1}");
  outside_if(!(u > q.pow(-n) && u < q.pow(-n - 1)), "u outside (q^-n, q^-n-1)");

  ctx.out.zeros = isolate_roots(quasi_poly(PhiBig{2, a, b, u}, n, q));
  const RootSet& xp = ctx.reference("X'", monic(LittleQJacobi{a, b * q * q}, n - 1, q).poly);
  real_simple(ctx, n);
  at_most_two_negative(ctx);
  positive_count(ctx, n - 2);
  two_set(ctx, "interlacing", ctx.out.zeros, xp, Pattern::AlternateDegreeDrop);
}

void laguerre_below_range(Context& ctx, int n, const ParamPoint& pt) {
  require_n(n, 1);
  const Rational& q = pt.q();
  const Rational& t = pt.value("t");
  boundary_if(t == q.pow(-1) || t == q.pow(-2), "t sits on a region boundary {q^-1, q^-2}");
  outside_if(!(t > q.pow(-1) && t < q.pow(-2)), "t outside (q^-1, q^-2)");

  ctx.out.zeros = isolate_roots(monic(QLaguerre{t}, n, q).poly);
  const RootSet& k = ctx.reference("K", monic(QLaguerre{t * q}, n, q).poly);
  const RootSet& kp = ctx.reference("K'", monic(QLaguerre{t * q}, n - 1, q).poly);
  real_simple(ctx, n);
  positive_count(ctx, n - 1);
  two_set(ctx, "interlacing-same-degree", ctx.out.zeros, k, Pattern::AlternateSameDegree);
  two_set(ctx, "interlacing-degree-drop", ctx.out.zeros, kp, Pattern::AlternateDegreeDrop);
}

}  // namespace

std::string_view theorem_code(ZeroTheorem th) noexcept {
  switch (th) {
    case ZeroTheorem::LaguerreOrder1: return "T2_3";
    case ZeroTheorem::LaguerreOrder2: return "T2_4";
    case ZeroTheorem::JacobiOrder1: return "T3_2";
    case ZeroTheorem::JacobiOrder2: return "T3_3";
    case ZeroTheorem::LaguerreBelowRange: return "T4_2";
  }
  return "unknown";
}

std::string_view theorem_name(ZeroTheorem th) noexcept {
  switch (th) {
    case ZeroTheorem::LaguerreOrder1: return "laguerre-order1";
    case ZeroTheorem::LaguerreOrder2: return "laguerre-order2";
    case ZeroTheorem::JacobiOrder1: return "jacobi-order1";
    case ZeroTheorem::JacobiOrder2: return "jacobi-order2";
    case ZeroTheorem::LaguerreBelowRange: return "laguerre-below-range";
  }
  return "unknown";
}

ZeroTheorem parse_zero_theorem(std::string_view text) {
  for (ZeroTheorem th : kAllZeroTheorems) {
    if (text == theorem_code(th) || text == theorem_name(th)) return th;
  }
  throw Error(ErrorKind::Config, "unknown theorem '" + std::string(text) + "'");
}

std::vector<std::string> theorem_parameters(ZeroTheorem th) {
  switch (th) {
    case ZeroTheorem::LaguerreOrder1:
    case ZeroTheorem::LaguerreOrder2: return {"t", "u"};
    case ZeroTheorem::JacobiOrder1:
    case ZeroTheorem::JacobiOrder2: return {"a", "b", "u"};
    case ZeroTheorem::LaguerreBelowRange: return {"t"};
  }
  return {};
}

ZeroClassification classify_zeros(ZeroTheorem th, int n, const ParamPoint& point) {
  Context ctx;
  ctx.out.references.reserve(2);  // reference() hands out pointers into this vector
  ctx.out.theorem = th;
  ctx.out.n = n;
  switch (th) {
    case ZeroTheorem::LaguerreOrder1: laguerre_order1(ctx, n, point); break;
    case ZeroTheorem::LaguerreOrder2: laguerre_order2(ctx, n, point); break;
    case ZeroTheorem::JacobiOrder1: jacobi_order1(ctx, n, point); break;
    case ZeroTheorem::JacobiOrder2: jacobi_order2(ctx, n, point); break;
    case ZeroTheorem::LaguerreBelowRange: laguerre_below_range(ctx, n, point); break;
  }
  ctx.finish();
  return std::move(ctx.out);
}

}  // namespace qortho
