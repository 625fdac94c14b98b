#pragma once

#include <Eigen/Core>
#include <vector>

namespace imac {

struct MacUser {
  double power;  // linear, > 0
  double gain;   // signed; all formulas consume gain^2
};

/// A Gaussian multiple access channel: ordered users plus receiver noise
/// variance. Its capacity region is the polymatroid cut out by rank().
struct MacSpec {
  std::vector<MacUser> users;
  double noise;

  MacSpec(std::vector<MacUser> users, double noise);
  int user_count() const { return static_cast<int>(users.size()); }
};

/// Nonnegative rate tuple in bits per channel use, aligned with a
/// MacSpec's user order.
struct RatePoint {
  Eigen::VectorXd rates;

  explicit RatePoint(Eigen::VectorXd rates);
  int size() const { return static_cast<int>(rates.size()); }
};

// Bitmask over user positions 0..n-1 of a MacSpec.
using SubsetMask = unsigned;

/// Polymatroid rank: 1/2 log2(1 + sum_{i in subset} gain_i^2 power_i / noise).
/// rank of the empty subset is 0.
double rank(const MacSpec& spec, SubsetMask subset);

/// True iff every nonempty subset-sum of `point` is within the rank bound
/// (inclusive, tolerance kTol).
bool contains(const MacSpec& spec, const RatePoint& point);

/// Pointwise rank dominance, which for polymatroids is equivalent to
/// region containment.
bool region_contained_in(const MacSpec& inner, const MacSpec& outer);

/// Rank of the full user set; tight by polymatroid structure.
double sum_capacity(const MacSpec& spec);

/// Exact maximum of sum_i w_i R_i over the region, by the polymatroid
/// greedy rule: visit users by descending weight (ties by ascending
/// index) and hand each its marginal rank.
double max_weighted_sum(const MacSpec& spec, const Eigen::VectorXd& weights);

}  // namespace imac
