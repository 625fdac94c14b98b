#include "imac/polymatroid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "imac/numeric.hpp"

namespace imac {

MacSpec::MacSpec(std::vector<MacUser> users_in, double noise_in)
    : users(std::move(users_in)), noise(noise_in) {
  if (users.empty()) throw std::invalid_argument("MacSpec needs >= 1 user");
  for (const MacUser& u : users) {
    if (!std::isfinite(u.power) || u.power <= 0.0) {
      throw std::invalid_argument("user power must be > 0");
    }
    if (!std::isfinite(u.gain)) {
      throw std::invalid_argument("user gain must be finite");
    }
  }
  if (!std::isfinite(noise) || noise <= 0.0) {
    throw std::invalid_argument("noise must be > 0");
  }
}

RatePoint::RatePoint(Eigen::VectorXd rates_in) : rates(std::move(rates_in)) {
  for (Eigen::Index i = 0; i < rates.size(); ++i) {
    if (!std::isfinite(rates[i]) || rates[i] < 0.0) {
      throw std::invalid_argument("rates must be finite and >= 0");
    }
  }
}

double rank(const MacSpec& spec, SubsetMask subset) {
  const auto n = static_cast<unsigned>(spec.user_count());
  if (subset >= (1u << n)) {
    throw std::invalid_argument("subset references unknown user index");
  }
  double snr = 0.0;
  for (unsigned i = 0; i < n; ++i) {
    if (subset >> i & 1u) {
      const MacUser& u = spec.users[i];
      snr += u.gain * u.gain * u.power;
    }
  }
  return 0.5 * log2_1p(snr / spec.noise);
}

bool contains(const MacSpec& spec, const RatePoint& point) {
  const int n = spec.user_count();
  if (point.size() != n) throw std::invalid_argument("dimension mismatch");
  for (SubsetMask t = 1; t < (1u << n); ++t) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (t >> i & 1u) sum += point.rates[i];
    }
    if (sum > rank(spec, t) + kTol) return false;
  }
  return true;
}

bool region_contained_in(const MacSpec& inner, const MacSpec& outer) {
  if (inner.user_count() != outer.user_count()) {
    throw std::invalid_argument("user-count mismatch");
  }
  const int n = inner.user_count();
  for (SubsetMask t = 1; t < (1u << n); ++t) {
    if (rank(inner, t) > rank(outer, t) + kTol) return false;
  }
  return true;
}

double sum_capacity(const MacSpec& spec) {
  return rank(spec, (1u << spec.user_count()) - 1u);
}

double max_weighted_sum(const MacSpec& spec, const Eigen::VectorXd& weights) {
  const int n = spec.user_count();
  if (weights.size() != n) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw std::invalid_argument("weights must be >= 0");
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });

  double total = 0.0;
  double prev = 0.0;
  SubsetMask prefix = 0;
  for (int i : order) {
    prefix |= 1u << i;
    const double cur = rank(spec, prefix);
    total += weights[i] * (cur - prev);
    prev = cur;
  }
  return total;
}

}  // namespace imac
