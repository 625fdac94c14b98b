#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "imac/channel.hpp"

namespace imac {

using RatePoint4 = Eigen::Vector4d;

/// Half-space sum_{i in mask} R_i <= rhs, rhs in bits.
struct RateConstraint {
  UserSet mask;
  double rhs;
};

/// Bounded region of nonnegative 4-tuples (R1..R4) cut out by subset-sum
/// constraints. Construction canonicalizes: constraints sorted by mask,
/// duplicate masks collapsed keeping the smaller rhs.
struct RatePolytope {
  std::vector<RateConstraint> constraints;

  static RatePolytope from_constraints(std::vector<RateConstraint> cs);
};

enum class MsesOrientation { k12, k21 };

/// The unconditional two-MAC constraints plus, for each cross gain with
/// h^2 >= 1 (inclusive), the two induced three-user MAC families.
RatePolytope outer_bound(const ImacChannel& ch);

/// Capacity region under mixed strong / extremely strong interference in
/// the requested orientation. Throws RegimeError when the channel does
/// not satisfy the orientation's conditions.
RatePolytope mses_region(const ImacChannel& ch, MsesOrientation orientation);

/// Interference-free product region, valid under individually very
/// strong interference. Throws RegimeError otherwise.
RatePolytope ivs_region(const ImacChannel& ch);

/// Decode-interference-first product region. Defined for every channel;
/// whether it is optimal is a property of the channel, not the region.
RatePolytope achievable_product_region(const ImacChannel& ch);

/// True iff p is nonnegative and satisfies every constraint within kTol.
bool member(const RatePolytope& poly, const RatePoint4& p);

struct SumRateResult {
  double bits;
  RatePoint4 point;
};

/// Exact maximum of w . R over the polytope: enumerate every basis of 4
/// constraints (including nonnegativity facets), solve, keep the best
/// feasible point. Ties broken by lexicographically smallest point.
SumRateResult max_weighted_rate(const RatePolytope& poly,
                                const Eigen::Vector4d& weights);

/// max_weighted_rate with unit weights.
SumRateResult max_sum_rate(const RatePolytope& poly);

/// All distinct basic feasible points, sorted lexicographically.
std::vector<RatePoint4> feasible_vertices(const RatePolytope& poly);

/// JSON array of {"mask": [users...], "rhs_bits": value} in canonical order.
std::string to_json(const RatePolytope& poly);

}  // namespace imac
