#include "imac/regions.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "imac/numeric.hpp"
#include "imac/regimes.hpp"

namespace imac {

namespace {

constexpr int kDim = 4;

bool lex_less(const RatePoint4& a, const RatePoint4& b) {
  for (int i = 0; i < kDim; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

// All nonempty-subset constraints of the MAC from `users` to `receiver`,
// expressed over the global user indices.
void append_mac_family(std::vector<RateConstraint>& out, const ImacChannel& ch,
                       UserSet users, int receiver, double noise) {
  const MacSpec spec = mac_spec(ch, users, receiver, noise);
  const std::vector<int> globals = users.users();
  const auto n = static_cast<unsigned>(globals.size());
  for (SubsetMask t = 1; t < (1u << n); ++t) {
    UserSet mask;
    for (unsigned i = 0; i < n; ++i) {
      if (t >> i & 1u) {
        mask = UserSet(static_cast<std::uint8_t>(
            mask.bits() | (1u << (globals[i] - 1))));
      }
    }
    out.push_back({mask, rank(spec, t)});
  }
}

struct Basis {
  Eigen::Matrix4d a;
  Eigen::Vector4d b;
};

}  // namespace

RatePolytope RatePolytope::from_constraints(std::vector<RateConstraint> cs) {
  for (const RateConstraint& c : cs) {
    if (c.mask.empty()) throw std::invalid_argument("constraint mask empty");
    if (!std::isfinite(c.rhs) || c.rhs < 0.0) {
      throw std::invalid_argument("constraint rhs must be finite and >= 0");
    }
  }
  std::sort(cs.begin(), cs.end(), [](const RateConstraint& a,
                                     const RateConstraint& b) {
    if (a.mask != b.mask) return a.mask < b.mask;
    return a.rhs < b.rhs;
  });
  // Duplicate masks keep the binding (smaller) rhs.
  cs.erase(std::unique(cs.begin(), cs.end(),
                       [](const RateConstraint& a, const RateConstraint& b) {
                         return a.mask == b.mask;
                       }),
           cs.end());

  std::uint8_t covered = 0;
  for (const RateConstraint& c : cs) covered |= c.mask.bits();
  if (covered != UserSet::all().bits()) {
    throw std::invalid_argument("polytope unbounded: uncovered coordinate");
  }
  RatePolytope poly;
  poly.constraints = std::move(cs);
  return poly;
}

RatePolytope outer_bound(const ImacChannel& ch) {
  std::vector<RateConstraint> cs;
  append_mac_family(cs, ch, {1, 2}, 1, 1.0);
  append_mac_family(cs, ch, {3, 4}, 2, 1.0);
  if (ch.h1 * ch.h1 >= 1.0 - kTol) {
    append_mac_family(cs, ch, {1, 2, 3}, 1, 1.0);
    append_mac_family(cs, ch, {1, 3, 4}, 2, 1.0);
  }
  if (ch.h2 * ch.h2 >= 1.0 - kTol) {
    append_mac_family(cs, ch, {1, 2, 4}, 1, 1.0);
    append_mac_family(cs, ch, {2, 3, 4}, 2, 1.0);
  }
  return RatePolytope::from_constraints(std::move(cs));
}

RatePolytope mses_region(const ImacChannel& ch, MsesOrientation orientation) {
  const RegimeReport rep = classify(ch);
  std::vector<RateConstraint> cs;
  if (orientation == MsesOrientation::k12) {
    if (!rep.mses12) {
      throw RegimeError("channel is not MSES(1,2): extreme margin " +
                            format_sig9(rep.mses12_extreme) +
                            ", strong margin " +
                            format_sig9(rep.mses12_strong),
                        std::min(rep.mses12_extreme, rep.mses12_strong));
    }
    append_mac_family(cs, ch, {1, 2, 3}, 1, 1.0);
    append_mac_family(cs, ch, {1, 3, 4}, 2, 1.0);
  } else {
    if (!rep.mses21) {
      throw RegimeError("channel is not MSES(2,1): extreme margin " +
                            format_sig9(rep.mses21_extreme) +
                            ", strong margin " +
                            format_sig9(rep.mses21_strong),
                        std::min(rep.mses21_extreme, rep.mses21_strong));
    }
    append_mac_family(cs, ch, {1, 2, 4}, 1, 1.0);
    append_mac_family(cs, ch, {2, 3, 4}, 2, 1.0);
  }
  return RatePolytope::from_constraints(std::move(cs));
}

RatePolytope ivs_region(const ImacChannel& ch) {
  const RegimeReport rep = classify(ch);
  if (!rep.ivs) {
    throw RegimeError("channel does not have individually very strong "
                      "interference: margins " +
                          format_sig9(rep.ivs_h1) + ", " +
                          format_sig9(rep.ivs_h2),
                      std::min(rep.ivs_h1, rep.ivs_h2));
  }
  std::vector<RateConstraint> cs;
  append_mac_family(cs, ch, {1, 2}, 1, 1.0);
  append_mac_family(cs, ch, {3, 4}, 2, 1.0);
  return RatePolytope::from_constraints(std::move(cs));
}

RatePolytope achievable_product_region(const ImacChannel& ch) {
  const double decode_noise = 1.0 + ch.p1 + ch.p2;
  std::vector<RateConstraint> cs;
  append_mac_family(cs, ch, {1, 2}, 1, 1.0);
  append_mac_family(cs, ch, {1, 2}, 2, decode_noise);
  append_mac_family(cs, ch, {3, 4}, 2, 1.0);
  append_mac_family(cs, ch, {3, 4}, 1, decode_noise);
  return RatePolytope::from_constraints(std::move(cs));
}

bool member(const RatePolytope& poly, const RatePoint4& p) {
  for (int i = 0; i < kDim; ++i) {
    if (!std::isfinite(p[i]) || p[i] < -kTol) return false;
  }
  for (const RateConstraint& c : poly.constraints) {
    double sum = 0.0;
    for (int i = 0; i < kDim; ++i) {
      if (c.mask.contains(i + 1)) sum += p[i];
    }
    if (sum > c.rhs + kTol) return false;
  }
  return true;
}

namespace {

// Visits the basic solution of every nonsingular 4-subset of the
// constraint rows augmented with the nonnegativity facets, feasible ones
// only, with coordinates in [-kTol, 0) clamped to zero.
template <typename Visit>
void for_each_basic_feasible(const RatePolytope& poly, Visit&& visit) {
  const int m = static_cast<int>(poly.constraints.size());
  const int total = m + kDim;

  auto fill_row = [&](int idx, Basis& basis, int row) {
    if (idx < m) {
      const RateConstraint& c = poly.constraints[static_cast<size_t>(idx)];
      for (int i = 0; i < kDim; ++i) {
        basis.a(row, i) = c.mask.contains(i + 1) ? 1.0 : 0.0;
      }
      basis.b[row] = c.rhs;
    } else {
      for (int i = 0; i < kDim; ++i) basis.a(row, i) = 0.0;
      basis.a(row, idx - m) = -1.0;
      basis.b[row] = 0.0;
    }
  };

  Basis basis;
  for (int i0 = 0; i0 < total; ++i0) {
    fill_row(i0, basis, 0);
    for (int i1 = i0 + 1; i1 < total; ++i1) {
      fill_row(i1, basis, 1);
      for (int i2 = i1 + 1; i2 < total; ++i2) {
        fill_row(i2, basis, 2);
        for (int i3 = i2 + 1; i3 < total; ++i3) {
          fill_row(i3, basis, 3);
          if (std::abs(basis.a.determinant()) < kSingularDet) continue;
          RatePoint4 x = basis.a.partialPivLu().solve(basis.b);

          bool feasible = true;
          for (int i = 0; i < kDim && feasible; ++i) {
            feasible = std::isfinite(x[i]) && x[i] >= -kTol;
          }
          for (const RateConstraint& c : poly.constraints) {
            if (!feasible) break;
            double sum = 0.0;
            for (int i = 0; i < kDim; ++i) {
              if (c.mask.contains(i + 1)) sum += x[i];
            }
            feasible = sum <= c.rhs + kTol;
          }
          if (!feasible) continue;

          for (int i = 0; i < kDim; ++i) x[i] = std::max(x[i], 0.0);
          visit(x);
        }
      }
    }
  }
}

}  // namespace

SumRateResult max_weighted_rate(const RatePolytope& poly,
                                const Eigen::Vector4d& weights) {
  for (int i = 0; i < kDim; ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw std::invalid_argument("weights must be >= 0");
    }
  }
  bool found = false;
  SumRateResult best{0.0, RatePoint4::Zero()};
  for_each_basic_feasible(poly, [&](const RatePoint4& x) {
    const double value = weights.dot(x);
    if (!found || value > best.bits + kTieEps) {
      best = {value, x};
      found = true;
    } else if (value >= best.bits - kTieEps && lex_less(x, best.point)) {
      best = {std::max(best.bits, value), x};
    }
  });
  if (!found) {
    throw std::logic_error("no basic feasible point; polytope invalid");
  }
  return best;
}

SumRateResult max_sum_rate(const RatePolytope& poly) {
  return max_weighted_rate(poly, Eigen::Vector4d::Ones());
}

std::vector<RatePoint4> feasible_vertices(const RatePolytope& poly) {
  std::vector<RatePoint4> points;
  for_each_basic_feasible(poly, [&](const RatePoint4& x) {
    points.push_back(x);
  });
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const RatePoint4& a, const RatePoint4& b) {
                             return (a - b).cwiseAbs().maxCoeff() <= kTol;
                           }),
               points.end());
  return points;
}

std::string to_json(const RatePolytope& poly) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RateConstraint& c : poly.constraints) {
    nlohmann::ordered_json item;
    item["mask"] = c.mask.users();
    item["rhs_bits"] = std::strtod(format_sig9(c.rhs).c_str(), nullptr);
    arr.push_back(std::move(item));
  }
  return arr.dump();
}

}  // namespace imac
