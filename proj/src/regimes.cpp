#include "imac/regimes.hpp"

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "imac/numeric.hpp"
#include "imac/regions.hpp"

namespace imac {

RegimeReport classify(const ImacChannel& ch) {
  const double g1 = ch.h1 * ch.h1;
  const double g2 = ch.h2 * ch.h2;
  const double base = 1.0 + ch.p1 + ch.p2;

  RegimeReport rep;
  rep.mses12_extreme = g2 - (base + g1 * ch.p1);
  rep.mses12_strong = g1 - 1.0;
  rep.mses21_extreme = g1 - (base + g2 * ch.p2);
  rep.mses21_strong = g2 - 1.0;
  rep.ivs_h1 = g1 - base;
  rep.ivs_h2 = g2 - base;
  rep.vsc_combined = g1 * ch.p1 + g2 * ch.p2 - (ch.p1 + ch.p2) * base;

  auto holds = [](double margin) { return margin >= -kTol; };
  rep.mses12 = holds(rep.mses12_extreme) && holds(rep.mses12_strong);
  rep.mses21 = holds(rep.mses21_extreme) && holds(rep.mses21_strong);
  rep.ivs = holds(rep.ivs_h1) && holds(rep.ivs_h2);
  rep.vsc = holds(rep.vsc_combined);
  return rep;
}

const char* to_string(SumCapacityBasis basis) {
  switch (basis) {
    case SumCapacityBasis::kVeryStrongCombined:
      return "very-strong-combined";
    case SumCapacityBasis::kMixedStrongExtremelyStrong:
      return "mixed-strong-extremely-strong";
    case SumCapacityBasis::kIndividuallyVeryStrong:
      return "individually-very-strong";
  }
  return "unknown";
}

std::optional<ExactSumCapacity> exact_sum_capacity(const ImacChannel& ch) {
  const RegimeReport rep = classify(ch);
  const double interference_free = log2_1p(ch.p1 + ch.p2);

  if (rep.vsc) {
    return ExactSumCapacity{interference_free,
                            SumCapacityBasis::kVeryStrongCombined};
  }
  if (rep.mses12) {
    const double bits = max_sum_rate(mses_region(ch, MsesOrientation::k12)).bits;
    return ExactSumCapacity{bits, SumCapacityBasis::kMixedStrongExtremelyStrong};
  }
  if (rep.mses21) {
    const double bits = max_sum_rate(mses_region(ch, MsesOrientation::k21)).bits;
    return ExactSumCapacity{bits, SumCapacityBasis::kMixedStrongExtremelyStrong};
  }
  if (rep.ivs) {
    return ExactSumCapacity{interference_free,
                            SumCapacityBasis::kIndividuallyVeryStrong};
  }
  return std::nullopt;
}

std::string to_json(const RegimeReport& rep) {
  auto sig9 = [](double v) {
    return std::strtod(format_sig9(v).c_str(), nullptr);
  };
  nlohmann::ordered_json j;
  j["mses12"] = rep.mses12;
  j["mses21"] = rep.mses21;
  j["ivs"] = rep.ivs;
  j["vsc"] = rep.vsc;
  nlohmann::ordered_json margins;
  margins["mses12_extreme"] = sig9(rep.mses12_extreme);
  margins["mses12_strong"] = sig9(rep.mses12_strong);
  margins["mses21_extreme"] = sig9(rep.mses21_extreme);
  margins["mses21_strong"] = sig9(rep.mses21_strong);
  margins["ivs_h1"] = sig9(rep.ivs_h1);
  margins["ivs_h2"] = sig9(rep.ivs_h2);
  margins["vsc_combined"] = sig9(rep.vsc_combined);
  j["margins"] = std::move(margins);
  return j.dump();
}

}  // namespace imac
