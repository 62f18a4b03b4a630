#include <gtest/gtest.h>

#include "qortho/classify.hpp"
#include "qortho/error.hpp"
#include "qortho/param_point.hpp"

namespace qortho {
namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

const Rational kQ = R(1, 2);

const ZeroClaim* find_claim(const ZeroClassification& c, const std::string& name) {
  for (const auto& claim : c.claims) {
    if (claim.name == name) return &claim;
  }
  return nullptr;
}

ErrorKind kind_of(ZeroTheorem th, int n, const ParamPoint& p) {
  try {
    classify_zeros(th, n, p);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Config;
}

ParamPoint laguerre(const Rational& t, const Rational& u) { return ParamPoint(kQ).with("t", t).with("u", u); }
ParamPoint jacobi(const Rational& a, const Rational& b, const Rational& u) {
  return ParamPoint(kQ).with("a", a).with("b", b).with("u", u);
}

TEST(LaguerreOrder1, PositiveCase) {
  const ZeroClassification c = classify_zeros(ZeroTheorem::LaguerreOrder1, 3, laguerre(R(1, 2), R(1, 3)));
  EXPECT_TRUE(c.pass);
  const ZeroClaim* loc = find_claim(c, "location");
  ASSERT_NE(loc, nullptr);
  EXPECT_EQ(loc->predicted, "all-positive");
  EXPECT_EQ(loc->observed, "all-positive");
  EXPECT_EQ(c.zeros.negatives(), 0);
}

TEST(LaguerreOrder1, OneNegativeCase) {
  const ZeroClassification c = classify_zeros(ZeroTheorem::LaguerreOrder1, 3, laguerre(R(1, 2), R(3)));
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(find_claim(c, "location")->observed, "one-negative");
  EXPECT_EQ(c.zeros.negatives(), 1);
}

// Both directions: every sampled u lands in the case its region predicts.
TEST(LaguerreOrder1, LocationIffAcrossBoundaries) {
  for (int n = 2; n <= 6; ++n) {
    const Rational top = kQ.pow(-n);
    for (const Rational& u : {R(1, 5), R(19, 20), R(21, 20), R(3, 2), top * R(19, 20), top * R(21, 20), top * R(3)}) {
      const ZeroClassification c = classify_zeros(ZeroTheorem::LaguerreOrder1, n, laguerre(R(1, 2), u));
      const bool in_middle = u > R(1) && u < top;
      EXPECT_EQ(c.zeros.negatives() == 1, in_middle) << n << " " << u;
      EXPECT_TRUE(c.pass) << n << " " << u << " " << c.observed_case;
    }
  }
}

TEST(LaguerreOrder1, InterlacingShapeFollowsRegion) {
  const ZeroClassification above = classify_zeros(ZeroTheorem::LaguerreOrder1, 4, laguerre(R(1, 2), R(20)));
  ASSERT_EQ(above.interlacing.size(), 1u);
  EXPECT_EQ(above.interlacing[0].pattern, Pattern::CaseC_i);
  const ZeroClassification below = classify_zeros(ZeroTheorem::LaguerreOrder1, 4, laguerre(R(1, 2), R(1, 3)));
  EXPECT_EQ(below.interlacing[0].pattern, Pattern::CaseC_ii);
}

TEST(LaguerreOrder1, Errors) {
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreOrder1, 3, laguerre(R(1, 2), R(1))), ErrorKind::Boundary);
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreOrder1, 3, laguerre(R(1, 2), R(8))), ErrorKind::Boundary);
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreOrder1, 3, laguerre(R(1, 2), R(4))), ErrorKind::ExcludedParameter);
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreOrder1, 3, laguerre(R(3), R(3))), ErrorKind::Admissibility);
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreOrder1, 1, laguerre(R(1, 2), R(3))), ErrorKind::Degree);
}

TEST(LaguerreOrder2, RegionExample) {
  const ZeroClassification c = classify_zeros(ZeroTheorem::LaguerreOrder2, 4, laguerre(R(1, 2), R(24)));
  EXPECT_TRUE(c.pass) << c.observed_case;
  EXPECT_TRUE(c.zeros.simple);
  EXPECT_EQ(c.zeros.size(), 4u);
  EXPECT_LE(c.zeros.negatives(), 2);
  ASSERT_EQ(c.interlacing.size(), 1u);
  EXPECT_EQ(c.interlacing[0].pattern, Pattern::AlternateDegreeDrop);
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreOrder2, 4, laguerre(R(1, 2), R(40))), ErrorKind::Admissibility);
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreOrder2, 4, laguerre(R(1, 2), R(32))), ErrorKind::Boundary);
}

TEST(JacobiOrder1, Regions) {
  const int n = 4;
  // 1 < u < q^-n: one negative zero, the rest in (0, 1).
  const ZeroClassification mid = classify_zeros(ZeroTheorem::JacobiOrder1, n, jacobi(R(1, 2), R(1, 2), R(3)));
  EXPECT_TRUE(mid.pass) << mid.observed_case;
  EXPECT_EQ(find_claim(mid, "negative-then-unit")->observed, "negative-then-unit");
  // q^{n-1} < u < 1: all zeros in (0, 1).
  const ZeroClassification unit = classify_zeros(ZeroTheorem::JacobiOrder1, n, jacobi(R(1, 2), R(1, 2), R(1, 2) + R(1, 4)));
  EXPECT_TRUE(unit.pass) << unit.observed_case;
  ASSERT_NE(find_claim(unit, "all-unit"), nullptr);
  // b < 0 and u < q^{n-1}.
  const ZeroClassification neg_b = classify_zeros(ZeroTheorem::JacobiOrder1, n, jacobi(R(1, 2), R(-2), R(1, 30)));
  EXPECT_TRUE(neg_b.pass) << neg_b.observed_case;
  ASSERT_NE(find_claim(neg_b, "all-unit"), nullptr);
  EXPECT_EQ(kind_of(ZeroTheorem::JacobiOrder1, n, jacobi(R(1, 2), R(1, 2), R(1, 8))), ErrorKind::Boundary);
}

TEST(JacobiOrder2, RegionExample) {
  for (int n = 3; n <= 6; ++n) {
    const Rational u = kQ.pow(-n) * R(3, 2);
    const ZeroClassification c = classify_zeros(ZeroTheorem::JacobiOrder2, n, jacobi(R(1, 2), R(1, 2), u));
    EXPECT_TRUE(c.pass) << n << " " << c.observed_case;
  }
}

TEST(LaguerreBelowRange, BothInterlacings) {
  for (int n = 2; n <= 6; ++n) {
    const ZeroClassification c = classify_zeros(ZeroTheorem::LaguerreBelowRange, n, ParamPoint(kQ).with("t", R(3)));
    EXPECT_TRUE(c.pass) << n << " " << c.observed_case;
    ASSERT_EQ(c.interlacing.size(), 2u);
    EXPECT_EQ(c.interlacing[0].pattern, Pattern::AlternateSameDegree);
    EXPECT_EQ(c.interlacing[1].pattern, Pattern::AlternateDegreeDrop);
  }
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreBelowRange, 3, ParamPoint(kQ).with("t", R(5))), ErrorKind::Admissibility);
  EXPECT_EQ(kind_of(ZeroTheorem::LaguerreBelowRange, 3, ParamPoint(kQ).with("t", R(4))), ErrorKind::Boundary);
}

TEST(Theorems, CodesAndNamesParse) {
  for (ZeroTheorem th : kAllZeroTheorems) {
    EXPECT_EQ(parse_zero_theorem(theorem_code(th)), th);
    EXPECT_EQ(parse_zero_theorem(theorem_name(th)), th);
  }
  EXPECT_EQ(theorem_code(ZeroTheorem::JacobiOrder2), "T3_3");
  EXPECT_THROW(parse_zero_theorem("T9_9"), Error);
  const ParamPoint missing(kQ);
  EXPECT_THROW(classify_zeros(ZeroTheorem::LaguerreOrder1, 3, missing), Error);
}

}  // namespace
}  // namespace qortho
