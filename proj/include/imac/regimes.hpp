#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "imac/channel.hpp"

namespace imac {

/// A regime precondition failed; `margin` is the most negative condition
/// slack in linear power units.
class RegimeError : public std::domain_error {
 public:
  RegimeError(const std::string& what, double margin)
      : std::domain_error(what), margin_(margin) {}
  double margin() const { return margin_; }

 private:
  double margin_;
};

/// Interference regime flags plus the signed slack (lhs - rhs, linear
/// power units) of every condition part. A flag is set iff all of its
/// slacks are >= -kTol.
struct RegimeReport {
  bool mses12 = false;
  bool mses21 = false;
  bool ivs = false;
  bool vsc = false;

  double mses12_extreme = 0;  // h2^2 - (1 + P1 + P2 + h1^2 P1)
  double mses12_strong = 0;   // h1^2 - 1
  double mses21_extreme = 0;  // h1^2 - (1 + P1 + P2 + h2^2 P2)
  double mses21_strong = 0;   // h2^2 - 1
  double ivs_h1 = 0;          // h1^2 - (1 + P1 + P2)
  double ivs_h2 = 0;          // h2^2 - (1 + P1 + P2)
  double vsc_combined = 0;    // h1^2 P1 + h2^2 P2 - (P1+P2)(1+P1+P2)
};

RegimeReport classify(const ImacChannel& ch);

/// Which closed-regime result produced an exact sum capacity.
enum class SumCapacityBasis {
  kVeryStrongCombined,
  kMixedStrongExtremelyStrong,
  kIndividuallyVeryStrong,
};

const char* to_string(SumCapacityBasis basis);

struct ExactSumCapacity {
  double bits;
  SumCapacityBasis basis;
};

/// Exact sum capacity when a regime result applies: the closed form
/// log2(1+P1+P2) under very strong combined (or individually very
/// strong) interference, the exact LP value of the mixed-regime region
/// otherwise. Empty when no regime condition holds.
std::optional<ExactSumCapacity> exact_sum_capacity(const ImacChannel& ch);

/// JSON object with the four flags and every condition margin at 9
/// significant digits.
std::string to_json(const RegimeReport& report);

}  // namespace imac
