#pragma once

#include <cmath>
#include <string>

namespace imac {

// Comparison tolerance, used both for rate comparisons (bits) and for the
// linear-power regime conditions. All boundary comparisons are inclusive.
inline constexpr double kTol = 1e-9;

// Basis systems with |det| below this are skipped as singular.
inline constexpr double kSingularDet = 1e-12;

// Exclusion radius around eta = 0, where the genie objective blows up.
inline constexpr double kEtaFloor = 1e-9;

// Objective ties closer than this are broken lexicographically.
inline constexpr double kTieEps = 1e-12;

// log2(1 + x), accurate for small x.
inline double log2_1p(double x) {
  constexpr double kLog2E = 1.4426950408889634;
  return std::log1p(x) * kLog2E;
}

// Shortest decimal string that parses back to x, capped at 9 significant
// digits (falls back to the 9-digit form when more would be needed).
std::string format_sig9(double x);

}  // namespace imac
