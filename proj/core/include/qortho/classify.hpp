#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qortho/interlace.hpp"
#include "qortho/param_point.hpp"
#include "qortho/roots.hpp"

namespace qortho {

/// The zero-location and interlacing statements the classifier checks.
enum class ZeroTheorem {
  LaguerreOrder1,      // 2phi2 target, k = 1, against monic L_n(zq), L_{n-1}(zq)
  LaguerreOrder2,      // 2phi2 target, k = 2, against monic L_{n-1}(zq^2)
  JacobiOrder1,        // 3phi2 target, k = 1, against monic p_n, p_{n-1} at (a, bq)
  JacobiOrder2,        // 3phi2 target, k = 2, against monic p_{n-1} at (a, bq^2)
  LaguerreBelowRange,  // L_n^{(delta)}, -2 < delta < -1, against delta + 1
};

inline constexpr ZeroTheorem kAllZeroTheorems[] = {
    ZeroTheorem::LaguerreOrder1, ZeroTheorem::LaguerreOrder2, ZeroTheorem::JacobiOrder1,
    ZeroTheorem::JacobiOrder2,   ZeroTheorem::LaguerreBelowRange,
};

/// Short identifier used on the command line and in reports
/// (T2_3, T2_4, T3_2, T3_3, T4_2).
std::string_view theorem_code(ZeroTheorem th) noexcept;
std::string_view theorem_name(ZeroTheorem th) noexcept;
/// Accepts either the code or the name. Throws Error(Config).
ZeroTheorem parse_zero_theorem(std::string_view text);
std::vector<std::string> theorem_parameters(ZeroTheorem th);

/// One checked statement. `predicted` is what the parameter region implies,
/// `observed` what the isolated zeros show.
struct ZeroClaim {
  std::string name;
  std::string predicted;
  std::string observed;
  bool pass = false;
};

struct ZeroClassification {
  ZeroTheorem theorem = ZeroTheorem::LaguerreOrder1;
  int n = 0;
  std::string predicted_case;
  std::string observed_case;
  bool pass = false;
  std::vector<ZeroClaim> claims;
  RootSet zeros;
  /// Comparison root sets by label ("X", "X'", ...).
  std::vector<std::pair<std::string, RootSet>> references;
  std::vector<InterlaceVerdict> interlacing;
};

/// Parameters: t, u (Laguerre targets), a, b, u (Jacobi targets), t
/// (below-range Laguerre). Region conditions are decided exactly on the
/// q-power values. Throws Error(Boundary) on a region boundary,
/// Error(ExcludedParameter) on an excluded lattice point,
/// Error(Admissibility) when family constraints fail or the parameters lie
/// outside the single region a theorem speaks about, Error(Degree) for n
/// below the theorem's range.
ZeroClassification classify_zeros(ZeroTheorem th, int n, const ParamPoint& point);

}  // namespace qortho
