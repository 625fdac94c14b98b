#include "imac/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "imac/numeric.hpp"
#include "imac/regimes.hpp"
#include "imac/regions.hpp"

namespace imac {

GenieParams::GenieParams(double rho_in, double eta_in)
    : rho(rho_in), eta(eta_in) {
  if (!std::isfinite(rho) || rho < -1.0 || rho > 1.0) {
    throw std::invalid_argument("rho must be in [-1, 1]");
  }
  if (!std::isfinite(eta) || eta * eta > 1.0 - rho * rho + 1e-12) {
    throw std::invalid_argument("eta^2 must be <= 1 - rho^2");
  }
}

double genie_objective(const ImacChannel& ch, const GenieParams& p) {
  if (std::abs(p.eta) < kEtaFloor) {
    throw std::domain_error("|eta| below the 1e-9 floor");
  }
  const double interference = inr(ch);
  const double a = ch.p1 * (p.eta - p.rho * ch.h1) * (p.eta - p.rho * ch.h1) +
                   ch.p2 * (p.eta - p.rho * ch.h2) * (p.eta - p.rho * ch.h2) +
                   ch.p1 * ch.p2 * (ch.h1 - ch.h2) * (ch.h1 - ch.h2);
  const double denom = 1.0 - p.rho * p.rho + interference;
  return log2_1p((interference + a / denom) / (p.eta * p.eta));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Probe {
  double rho;
  double t;
  double value;
};

// Objective in the square parameterization (rho, t), eta = t sqrt(1-rho^2),
// with out-of-domain and near-zero eta mapped to +inf.
class SquareObjective {
 public:
  explicit SquareObjective(const ImacChannel& ch) : ch_(ch) {}

  double operator()(double rho, double t) const {
    rho = std::clamp(rho, -1.0, 1.0);
    t = std::clamp(t, -1.0, 1.0);
    const double eta = t * std::sqrt(std::max(0.0, 1.0 - rho * rho));
    if (std::abs(eta) < kEtaFloor) return kInf;
    return genie_objective(ch_, GenieParams(rho, eta));
  }

 private:
  const ImacChannel& ch_;
};

// Nelder-Mead over [-1,1]^2 with reflections clamped to the square.
// Returns the best point ever evaluated, seeded with `start`.
Probe simplex_descent(const SquareObjective& f, Probe start, double step,
                      int iterations) {
  auto eval = [&](double rho, double t) -> Probe {
    rho = std::clamp(rho, -1.0, 1.0);
    t = std::clamp(t, -1.0, 1.0);
    return {rho, t, f(rho, t)};
  };

  Probe best = start;
  auto consider = [&](const Probe& p) {
    if (p.value < best.value) best = p;
  };

  const double dr = (start.rho + step <= 1.0) ? step : -step;
  const double dt = (start.t + step <= 1.0) ? step : -step;
  std::array<Probe, 3> v = {start, eval(start.rho + dr, start.t),
                            eval(start.rho, start.t + dt)};
  consider(v[1]);
  consider(v[2]);

  for (int it = 0; it < iterations; ++it) {
    std::sort(v.begin(), v.end(), [](const Probe& a, const Probe& b) {
      if (a.value != b.value) return a.value < b.value;
      if (a.rho != b.rho) return a.rho < b.rho;
      return a.t < b.t;
    });
    const double crho = 0.5 * (v[0].rho + v[1].rho);
    const double ct = 0.5 * (v[0].t + v[1].t);

    const Probe refl = eval(crho + (crho - v[2].rho), ct + (ct - v[2].t));
    consider(refl);
    if (refl.value < v[0].value) {
      const Probe exp_ =
          eval(crho + 2.0 * (crho - v[2].rho), ct + 2.0 * (ct - v[2].t));
      consider(exp_);
      v[2] = (exp_.value < refl.value) ? exp_ : refl;
    } else if (refl.value < v[1].value) {
      v[2] = refl;
    } else {
      const Probe contr =
          eval(crho + 0.5 * (v[2].rho - crho), ct + 0.5 * (v[2].t - ct));
      consider(contr);
      if (contr.value < v[2].value) {
        v[2] = contr;
      } else {
        for (int i = 1; i < 3; ++i) {
          v[i] = eval(v[0].rho + 0.5 * (v[i].rho - v[0].rho),
                      v[0].t + 0.5 * (v[i].t - v[0].t));
          consider(v[i]);
        }
      }
    }
  }
  return best;
}

}  // namespace

GenieBound upper_bound(const ImacChannel& ch, const OptimizerSettings& opts) {
  if (opts.grid_points < 2) {
    throw std::invalid_argument("grid_points must be >= 2");
  }
  if (opts.refine_iterations < 0) {
    throw std::invalid_argument("refine_iterations must be >= 0");
  }

  // Zero cross gains: the objective reduces to
  // log2(1 + (P1+P2)/(1-rho^2)), minimized at rho = 0 for any eta != 0.
  if (ch.h1 == 0.0 && ch.h2 == 0.0) {
    return {log2_1p(ch.p1 + ch.p2), GenieParams(0.0, 1.0)};
  }

  const SquareObjective f(ch);
  const int n = opts.grid_points;
  const double spacing = 2.0 / (n - 1);

  Probe best{0.0, 0.0, kInf};
  for (int i = 0; i < n; ++i) {
    const double rho = -1.0 + spacing * i;
    for (int j = 0; j < n; ++j) {
      const double t = -1.0 + spacing * j;
      const double value = f(rho, t);
      if (value < best.value) best = {rho, t, value};
    }
  }

  best = simplex_descent(f, best, spacing, opts.refine_iterations);

  const double eta =
      best.t * std::sqrt(std::max(0.0, 1.0 - best.rho * best.rho));
  return {best.value, GenieParams(best.rho, eta)};
}

double lower_bound_tin(const ImacChannel& ch) {
  return log2_1p((ch.p1 + ch.p2) / (1.0 + inr(ch)));
}

SumCapacityBounds bounds(const ImacChannel& ch, const OptimizerSettings& opts) {
  const GenieBound genie = upper_bound(ch, opts);
  const double lp = max_sum_rate(outer_bound(ch)).bits;

  double upper = std::min(genie.bits, lp);
  double lower = lower_bound_tin(ch);
  if (const auto exact = exact_sum_capacity(ch)) {
    lower = exact->bits;
    upper = exact->bits;
  }
  return {lower, upper, upper - lower, genie.argmin};
}

std::string to_json(const SumCapacityBounds& b) {
  auto sig9 = [](double v) {
    return std::strtod(format_sig9(v).c_str(), nullptr);
  };
  nlohmann::ordered_json j;
  j["lower_bits"] = sig9(b.lower);
  j["upper_bits"] = sig9(b.upper);
  j["gap_bits"] = sig9(b.gap);
  j["argmin"] = {{"rho", sig9(b.argmin.rho)}, {"eta", sig9(b.argmin.eta)}};
  return j.dump();
}

}  // namespace imac
