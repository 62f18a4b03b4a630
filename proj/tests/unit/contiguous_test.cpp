#include <random>

#include <gtest/gtest.h>

#include "qortho/contiguous.hpp"
#include "qortho/error.hpp"
#include "qortho/families.hpp"

namespace qortho {
namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

const Rational kQ = R(1, 2);

TEST(Split, Examples) {
  const SplitCoeffs s = contiguous_split(1, R(1, 4), kQ);
  EXPECT_EQ(s.a, R(-1, 6));
  EXPECT_EQ(s.b, R(7, 6));
  const SplitCoeffs zero = contiguous_split(0, R(1, 4), kQ);
  EXPECT_EQ(zero.a, R(0));
  EXPECT_EQ(zero.b, R(1));
  EXPECT_THROW(contiguous_split(3, R(1), kQ), Error);
}

TEST(Split, CoefficientsSumToOne) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9), deg(0, 10);
  for (int i = 0; i < 200; ++i) {
    const Rational alpha = R(num(rng), den(rng));
    if (alpha == R(1)) continue;
    const SplitCoeffs s = contiguous_split(deg(rng), alpha, R(2, 3));
    EXPECT_EQ(s.a + s.b, R(1));
  }
}

TEST(Descend, SingleStepIsTheSplit) {
  const LadderExpansion ex = descend_expand(5, 1, R(3), kQ);
  const SplitCoeffs s = contiguous_split(5, R(3), kQ);
  ASSERT_EQ(ex.coeffs.size(), 2u);
  EXPECT_EQ(ex.coeffs[0], s.b);
  EXPECT_EQ(ex.coeffs[1], s.a);
  EXPECT_EQ(ex.shift, 1);
}

TEST(Descend, TwoStepsAreProductsOfSplits) {
  const int n = 6;
  const Rational A = R(3) * kQ;  // u q^{k-1}, u = 3, k = 2
  const SplitCoeffs top = contiguous_split(n, A, kQ);
  const SplitCoeffs low_same = contiguous_split(n, A / kQ, kQ);
  const SplitCoeffs low_drop = contiguous_split(n - 1, A / kQ, kQ);
  const LadderExpansion ex = descend_expand(n, 2, A, kQ);
  ASSERT_EQ(ex.coeffs.size(), 3u);
  EXPECT_EQ(ex.coeffs[0], top.b * low_same.b);
  EXPECT_EQ(ex.coeffs[1], top.a * low_drop.b + top.b * low_same.a);
  EXPECT_EQ(ex.coeffs[2], top.a * low_drop.a);
}

TEST(Descend, ReconstructsQuasiTargetsExactly) {
  for (const Rational& q : {R(1, 2), R(2, 3)}) {
    for (int n = 3; n <= 8; ++n) {
      for (int k = 1; k <= 3 && k < n; ++k) {
        for (const Rational& u : {R(3), R(1, 3), R(-2), R(7)}) {
          const PhiSmall target{k, R(1, 2), u};
          const SeriesSpec spec = quasi_spec(target, n, q);
          const LadderExpansion ex = descend_expand(n, k, u * q.pow(k - 1), q);
          EXPECT_EQ(ex.sum(), R(1));
          for (const Rational& c : ex.coeffs) EXPECT_FALSE(c.is_zero());
          EXPECT_TRUE(verify_identity(build_series(spec), reconstruct_descend(spec, ex)).is_zero())
              << n << " " << k << " " << u;
        }
      }
    }
  }
}

// The order-one 2phi2 target against the dilated Laguerre combination,
// assembled only from classical polynomials.
TEST(Descend, OrderOneTargetAsLaguerreCombination) {
  const Rational t = R(1, 2), u = R(3);
  for (int n = 2; n <= 6; ++n) {
    const LadderExpansion ex = descend_expand(n, 1, u, kQ);
    QPoly rhs;
    for (int j = 0; j <= 1; ++j) {
      const QLaguerre fam{t};
      rhs += classical_poly(fam, n - j, kQ).dilate(kQ.pow(j)) * (ex.coeffs[j] / classical_prefactor(fam, n - j, kQ));
    }
    EXPECT_TRUE(verify_identity(quasi_poly(PhiSmall{1, t, u}, n, kQ), rhs).is_zero()) << n;
  }
}

TEST(Descend, ExcludedParameters) {
  try {
    descend_expand(5, 2, kQ, kQ);  // A q^{-1} = 1
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExcludedParameter);
  }
}

TEST(Ladder, Examples) {
  const LadderExpansion one = laguerre_ladder(1, 1, kQ);
  ASSERT_EQ(one.coeffs.size(), 2u);
  EXPECT_EQ(one.coeffs[0], R(2));
  EXPECT_EQ(one.coeffs[1], R(-2));
  // 2 L_1^{(d+1)} - 2 L_0^{(d+1)} with t q = 1/4: 2 (7/4 - z/4) - 2.
  EXPECT_EQ(reconstruct_laguerre_ladder(one, R(1, 2), kQ), QPoly({R(3, 2), R(-1, 2)}));
  const LadderExpansion zero = laguerre_ladder(4, 0, kQ);
  ASSERT_EQ(zero.coeffs.size(), 1u);
  EXPECT_EQ(zero.coeffs[0], R(1));
}

TEST(Ladder, ReconstructsForAllSmallDegrees) {
  for (const Rational& t : {R(1, 2), R(3), R(6, 5)}) {
    for (int n = 1; n <= 8; ++n) {
      for (int j = 0; j < n; ++j) {
        const LadderExpansion ex = laguerre_ladder(n, j, kQ);
        const QPoly lhs = classical_poly(QLaguerre{t}, n, kQ);
        EXPECT_TRUE(verify_identity(lhs, reconstruct_laguerre_ladder(ex, t, kQ)).is_zero()) << n << " " << j;
        for (const Rational& c : ex.coeffs) EXPECT_FALSE(c.is_zero());
      }
    }
  }
}

TEST(Relations, AllHoldAtDegreeOne) {
  const ParamPoint p = ParamPoint(kQ).with("t", R(1, 2)).with("a", R(1, 2)).with("b", R(1, 2)).with("c", R(2)).with("u", R(3));
  for (RelationId id : kAllRelations) {
    const RelationCheck c = relation_residual(id, 1, p);
    EXPECT_TRUE(c.residual.is_zero()) << relation_name(id);
    EXPECT_FALSE(c.lhs.is_zero()) << relation_name(id);
  }
}

TEST(Relations, NamedInstances) {
  const ParamPoint jac = ParamPoint(kQ).with("a", R(1, 2)).with("b", R(1, 2));
  EXPECT_TRUE(relation_residual(RelationId::JacobiParameterLowering, 4, jac).residual.is_zero());
  const ParamPoint mei = ParamPoint(kQ).with("b", R(1, 2)).with("c", R(2));
  const RelationCheck m = relation_residual(RelationId::MeixnerMultiplier, 3, mei);
  EXPECT_TRUE(m.residual.is_zero());
  EXPECT_EQ(m.lhs.variable(), Variable::X);
  const ParamPoint lag = ParamPoint(kQ).with("t", R(1, 2));
  EXPECT_TRUE(relation_residual(RelationId::LaguerreMultiplier, 3, lag).residual.is_zero());
}

TEST(Relations, MultiplierStepMatchesExplicitProduct) {
  const QLaguerre fam{R(1, 5)};
  for (int m = 0; m <= 6; ++m) {
    const MultiplierStep s = multiplier_step(fam, m, kQ);
    const QPoly lhs = multiplier_factor(fam, kQ) * classical_poly(fam, m, kQ).dilate(kQ);
    const QPoly rhs = classical_poly(fam, m + 1, kQ) * s.alpha + classical_poly(fam, m, kQ) * s.beta;
    EXPECT_EQ(lhs, rhs) << m;
  }
  EXPECT_THROW(multiplier_step(AlSalamCarlitzI{R(-1)}, 1, kQ), Error);
}

TEST(Relations, NamesRoundTrip) {
  for (RelationId id : kAllRelations) EXPECT_EQ(parse_relation(relation_name(id)), id);
  EXPECT_THROW(parse_relation("nope"), Error);
  EXPECT_THROW(relation_residual(RelationId::LaguerreDilation, 0, ParamPoint(kQ).with("t", R(1, 2))), Error);
}

}  // namespace
}  // namespace qortho
