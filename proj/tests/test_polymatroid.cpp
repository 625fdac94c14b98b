#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "imac/numeric.hpp"
#include "imac/polymatroid.hpp"

using imac::MacSpec;
using imac::MacUser;
using imac::RatePoint;
using imac::SubsetMask;

namespace {

// Frozen by direct evaluation of 1/2 log2(1 + snr).
constexpr double kHalfLog2_3 = 0.792481250360578;        // 1/2 log2(3)
constexpr double kHalfLog2_7over3 = 0.6111962106682238;  // 1/2 log2(1+4/3)
constexpr double kHalfLog2_11over3 = 0.9372345589580705; // 1/2 log2(11/3)

MacSpec unit_two_user() { return MacSpec({{1, 1}, {1, 1}}, 1.0); }

MacSpec random_spec(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> power(0.1, 10.0);
  std::uniform_real_distribution<double> gain(-3.0, 3.0);
  std::uniform_real_distribution<double> noise(0.2, 5.0);
  std::vector<MacUser> users;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) users.push_back({power(rng), gain(rng)});
  return MacSpec(std::move(users), noise(rng));
}

Eigen::VectorXd vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("spec construction validates users and noise") {
  CHECK_THROWS_AS(MacSpec({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(MacSpec({{0.0, 1.0}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(MacSpec({{1.0, 1.0}}, 0.0), std::invalid_argument);
  CHECK_NOTHROW(MacSpec({{1.0, 0.0}}, 1.0));  // zero gain is fine
}

TEST_CASE("rank evaluates the Shannon subset bound") {
  const MacSpec two = unit_two_user();
  CHECK(imac::rank(two, 0b11) == doctest::Approx(kHalfLog2_3).epsilon(1e-14));
  CHECK(imac::rank(two, 0) == 0.0);

  const MacSpec scaled({{1, 2}, {1, 2}}, 3.0);
  CHECK(imac::rank(scaled, 0b01) ==
        doctest::Approx(kHalfLog2_7over3).epsilon(1e-14));
  CHECK(imac::rank(scaled, 0b11) ==
        doctest::Approx(kHalfLog2_11over3).epsilon(1e-14));

  CHECK_THROWS_AS(imac::rank(two, 0b100), std::invalid_argument);
}

TEST_CASE("contains checks every subset constraint inclusively") {
  const MacSpec two = unit_two_user();
  CHECK(imac::contains(two, RatePoint(vec({0.5, 0.29}))));
  CHECK_FALSE(imac::contains(two, RatePoint(vec({0.5, 0.5}))));
  CHECK(imac::contains(two, RatePoint(vec({0.0, 0.0}))));
  // boundary inclusivity: the sum-capacity face is inside
  CHECK(imac::contains(two, RatePoint(vec({0.5, kHalfLog2_3 - 0.5}))));
  CHECK_THROWS_AS(imac::contains(two, RatePoint(vec({0.1}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(RatePoint(vec({-0.1, 0.0})), std::invalid_argument);
}

TEST_CASE("region containment is pointwise rank dominance") {
  const MacSpec inner = unit_two_user();
  const MacSpec outer({{1, 2}, {1, 2}}, 3.0);
  CHECK(imac::region_contained_in(inner, outer));
  CHECK(imac::region_contained_in(inner, inner));
  CHECK_FALSE(imac::region_contained_in(outer, inner));
  CHECK_THROWS_AS(
      imac::region_contained_in(inner, MacSpec({{1.0, 1.0}}, 1.0)),
      std::invalid_argument);
}

TEST_CASE("sum capacity is the full-set rank") {
  CHECK(imac::sum_capacity(unit_two_user()) ==
        doctest::Approx(kHalfLog2_3).epsilon(1e-14));
  CHECK(imac::sum_capacity(MacSpec({{3, 1}}, 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(imac::sum_capacity(MacSpec({{1, 0}}, 1.0)) == 0.0);
}

TEST_CASE("greedy weighted maximization") {
  const MacSpec two = unit_two_user();
  CHECK(imac::max_weighted_sum(two, vec({1, 1})) ==
        doctest::Approx(kHalfLog2_3).epsilon(1e-14));
  CHECK(imac::max_weighted_sum(two, vec({1, 0})) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(imac::max_weighted_sum(two, vec({0, 0})) == 0.0);
  CHECK_THROWS_AS(imac::max_weighted_sum(two, vec({1, -1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(imac::max_weighted_sum(two, vec({1})),
                  std::invalid_argument);
}

TEST_CASE("rank is monotone and submodular on random specs") {
  std::mt19937 rng(421);
  for (int trial = 0; trial < 300; ++trial) {
    const MacSpec spec = random_spec(rng);
    const auto n = static_cast<unsigned>(spec.user_count());
    const SubsetMask full = (1u << n) - 1u;
    for (SubsetMask t = 0; t <= full; ++t) {
      for (SubsetMask u = 0; u <= full; ++u) {
        if ((t & u) == t && t != u) {
          CHECK(imac::rank(spec, t) <= imac::rank(spec, u) + imac::kTol);
        }
      }
      for (unsigned i = 0; i < n; ++i) {
        if (t >> i & 1u) continue;
        for (SubsetMask u = 0; u <= full; ++u) {
          if ((t & u) != t || (u >> i & 1u)) continue;
          const double gain_small = imac::rank(spec, t | 1u << i) -
                                    imac::rank(spec, t);
          const double gain_large = imac::rank(spec, u | 1u << i) -
                                    imac::rank(spec, u);
          CHECK(gain_large <= gain_small + imac::kTol);
        }
      }
    }
  }
}

TEST_CASE("greedy vertices lie in the region for every permutation") {
  std::mt19937 rng(422);
  for (int trial = 0; trial < 200; ++trial) {
    const MacSpec spec = random_spec(rng);
    const int n = spec.user_count();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Eigen::VectorXd rates = Eigen::VectorXd::Zero(n);
      SubsetMask prefix = 0;
      double prev = 0.0;
      for (int i : perm) {
        prefix |= 1u << static_cast<unsigned>(i);
        const double cur = imac::rank(spec, prefix);
        rates[i] = std::max(0.0, cur - prev);
        prev = cur;
      }
      CHECK(imac::contains(spec, RatePoint(rates)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("mutual containment forces equal ranks; scaling changes nothing") {
  std::mt19937 rng(423);
  std::uniform_real_distribution<double> factor(0.1, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const MacSpec spec = random_spec(rng);
    const double c = factor(rng);
    std::vector<MacUser> scaled = spec.users;
    for (MacUser& u : scaled) u.power *= c;
    const MacSpec other(std::move(scaled), spec.noise * c);

    CHECK(imac::region_contained_in(spec, other));
    CHECK(imac::region_contained_in(other, spec));
    const SubsetMask full = (1u << static_cast<unsigned>(spec.user_count())) - 1u;
    for (SubsetMask t = 1; t <= full; ++t) {
      CHECK(imac::rank(spec, t) ==
            doctest::Approx(imac::rank(other, t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("all-ones weighted greedy telescopes to the sum capacity") {
  std::mt19937 rng(424);
  for (int trial = 0; trial < 300; ++trial) {
    const MacSpec spec = random_spec(rng);
    const Eigen::VectorXd ones =
        Eigen::VectorXd::Ones(spec.user_count());
    CHECK(imac::max_weighted_sum(spec, ones) ==
          doctest::Approx(imac::sum_capacity(spec)).epsilon(1e-13));
  }
}
