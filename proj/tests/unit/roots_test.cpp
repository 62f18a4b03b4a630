#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qortho/error.hpp"
#include "qortho/families.hpp"
#include "qortho/interlace.hpp"
#include "qortho/roots.hpp"

namespace qortho {
namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

QPoly from_roots(const std::vector<Rational>& roots) {
  QPoly p = QPoly::constant(R(1));
  for (const Rational& r : roots) p *= QPoly({-r, R(1)});
  return p;
}

TEST(Isolate, Examples) {
  const RootSet six = isolate_roots(QPoly({R(-6), R(1)}));
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(compare_root(six, 0, R(6)), 0);
  const RootSet l1 = isolate_roots(QPoly({R(3, 2), R(-1, 2)}));
  ASSERT_EQ(l1.size(), 1u);
  EXPECT_EQ(compare_root(l1, 0, R(3)), 0);
  EXPECT_DOUBLE_EQ(l1.roots[0].value, 3.0);
  EXPECT_THROW(isolate_roots(QPoly()), Error);
  EXPECT_EQ(isolate_roots(QPoly({R(1), R(0), R(1)})).size(), 0u);
}

TEST(Isolate, IntervalsAreDisjointAndTight) {
  const RootSet s = isolate_roots(from_roots({R(-5, 3), R(1, 1000), R(2, 1000), R(7)}));
  ASSERT_EQ(s.size(), 4u);
  EXPECT_TRUE(s.simple);
  EXPECT_EQ(s.negatives(), 1);
  EXPECT_EQ(s.count_in(R(0), R(1)), 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& r = s.roots[i];
    EXPECT_LE(r.lower, r.upper);
    EXPECT_LE(r.lower.to_double(), r.value);
    EXPECT_GE(r.upper.to_double(), r.value);
    if (i + 1 < s.size()) EXPECT_LT(r.upper, s.roots[i + 1].lower);
    EXPECT_LT((r.upper - r.lower).to_double(), std::ldexp(1.0, -52) * std::max(1.0, std::abs(r.value)));
  }
}

TEST(Isolate, RepeatedRootsReportedOnce) {
  const QPoly p = from_roots({R(1), R(1), R(2)});
  const RootSet s = isolate_roots(p);
  EXPECT_FALSE(s.simple);
  EXPECT_FALSE(is_square_free(p));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.squarefree.degree(), 2);
}

TEST(Isolate, AgreesWithCompanionMatrixOnRandomProducts) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9), cnt(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> roots;
    for (int i = 0, m = cnt(rng); i < m; ++i) roots.push_back(R(num(rng), den(rng)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const QPoly p = from_roots(roots) * QPoly({R(1), R(0), R(1)});  // plus a complex pair
    const RootSet s = isolate_roots(p);
    ASSERT_EQ(s.size(), roots.size());
    const std::vector<double> eig = oracle::companion_real_roots(p);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_EQ(compare_root(s, i, roots[i]), 0);
      if (eig.size() == roots.size()) EXPECT_LT(oracle::rel_diff(s.roots[i].value, eig[i]), 1e-6);
    }
  }
}

TEST(Isolate, ClassicalZerosMatchCompanionMatrix) {
  const Rational q = R(1, 2);
  for (const FamilyId& fam : std::vector<FamilyId>{QLaguerre{R(1, 2)}, LittleQJacobi{R(1, 2), R(1, 2)},
                                                   AlSalamCarlitzI{R(-1)}}) {
    const QPoly p = classical_poly(fam, 6, q);
    const RootSet s = isolate_roots(p);
    const std::vector<double> eig = oracle::companion_real_roots(p);
    ASSERT_EQ(s.size(), 6u) << family_key(fam);
    ASSERT_EQ(eig.size(), 6u) << family_key(fam);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_LT(std::abs(s.roots[i].value - eig[i]) / std::abs(eig[i]), 1e-9);
  }
}

TEST(Sturm, CountsRootsBetweenPoints) {
  const QPoly p = from_roots({R(-2), R(1, 3), R(4)});
  const auto chain = sturm_chain(p);
  EXPECT_EQ(sturm_variations(chain, R(-10)) - sturm_variations(chain, R(10)), 3);
  EXPECT_EQ(sturm_variations(chain, R(0)) - sturm_variations(chain, R(1)), 1);
}

TEST(CompareRoots, SeparatesCloseRootsAndFlagsEqualOnes) {
  const RootSet a = isolate_roots(QPoly({R(-2), R(0), R(1)}));            // +-sqrt 2
  const RootSet b = isolate_roots(QPoly({R(-1414213562373095, 1000000000000000), R(1)}));
  EXPECT_EQ(compare_roots(a, 1, b, 0), 1);
  const RootSet c = isolate_roots(QPoly({R(-4), R(0), R(2)}));            // same roots
  EXPECT_THROW(compare_roots(a, 1, c, 1), Error);
}

TEST(Interlace, TwoSetExamples) {
  const RootSet a = isolate_roots(from_roots({R(1), R(3)}));
  const RootSet b = isolate_roots(from_roots({R(2)}));
  EXPECT_EQ(interlace(a, b, Pattern::AlternateDegreeDrop).pattern, Pattern::AlternateDegreeDrop);
  const RootSet c = isolate_roots(from_roots({R(1), R(2)}));
  const RootSet d = isolate_roots(from_roots({R(5)}));
  const InterlaceVerdict v = interlace(c, d, Pattern::AlternateDegreeDrop);
  EXPECT_EQ(v.pattern, Pattern::Fail);
  EXPECT_FALSE(v.holds());
  EXPECT_FALSE(v.witness.empty());
  const RootSet e = isolate_roots(from_roots({R(3, 2), R(4)}));
  EXPECT_TRUE(interlace(c, e, Pattern::AlternateSameDegree).holds());
  EXPECT_FALSE(interlace(a, b, Pattern::AlternateSameDegree).holds());
  EXPECT_THROW(interlace(a, b, Pattern::CaseC_i), Error);
}

TEST(Interlace, ThreeSetShapes) {
  const RootSet x = isolate_roots(from_roots({R(1), R(3), R(5)}));
  const RootSet xp = isolate_roots(from_roots({R(2), R(4)}));
  // x_i < z_i < x'_i, x_3 < z_3
  const RootSet zi = isolate_roots(from_roots({R(3, 2), R(7, 2), R(6)}));
  EXPECT_TRUE(interlace(zi, x, xp, Pattern::CaseC_i).holds());
  EXPECT_FALSE(interlace(zi, x, xp, Pattern::CaseC_ii).holds());
  // z_1 < x_1, x'_{i-1} < z_i < x_i
  const RootSet zii = isolate_roots(from_roots({R(0), R(5, 2), R(9, 2)}));
  EXPECT_TRUE(interlace(zii, x, xp, Pattern::CaseC_ii).holds());
  EXPECT_FALSE(interlace(zii, x, xp, Pattern::CaseC_i).holds());
  EXPECT_THROW(interlace(zi, x, xp, Pattern::AlternateSameDegree), Error);
}

}  // namespace
}  // namespace qortho
