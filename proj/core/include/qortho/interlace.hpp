#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qortho/roots.hpp"

namespace qortho {

enum class Pattern {
  AlternateSameDegree,  // a_1 < b_1 < a_2 < ... < a_n < b_n
  AlternateDegreeDrop,  // a_1 < b_1 < a_2 < ... < b_{n-1} < a_n
  CaseC_i,              // x_i < z_i < x'_i (i < n), x_n < z_n
  CaseC_ii,             // z_1 < x_1, x'_{i-1} < z_i < x_i (i >= 2)
  Fail,
};

std::string_view to_string(Pattern p) noexcept;

/// One strict inequality lhs_set[lhs_index] < rhs_set[rhs_index]
/// (zero-based indices), with its exact outcome.
struct Comparison {
  std::string lhs_set;
  int lhs_index = 0;
  std::string rhs_set;
  int rhs_index = 0;
  bool holds = false;
};

struct InterlaceVerdict {
  Pattern expected = Pattern::Fail;
  Pattern pattern = Pattern::Fail;  // expected when every comparison holds
  std::vector<Comparison> witness;
  std::string details;

  bool holds() const noexcept { return pattern != Pattern::Fail; }
};

/// Two-set patterns: AlternateSameDegree needs |a| = |b|, AlternateDegreeDrop
/// needs |b| = |a| - 1; other sizes give Fail. Throws Error(Degenerate) when
/// two compared roots coincide, Error(Mode) for a three-set pattern.
InterlaceVerdict interlace(const RootSet& a, const RootSet& b, Pattern expected);

/// Three-set patterns on zeros z (degree n) against x (degree n) and
/// x' (degree n - 1). Throws Error(Mode) for a two-set pattern.
InterlaceVerdict interlace(const RootSet& z, const RootSet& x, const RootSet& xp, Pattern expected);

}  // namespace qortho
