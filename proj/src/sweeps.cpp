#include "imac/sweeps.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "imac/numeric.hpp"
#include "imac/regimes.hpp"

namespace imac {

namespace {

std::vector<double> make_axis(double start, double stop, int points,
                              Spacing spacing) {
  if (points < 2) throw std::invalid_argument("points must be >= 2");
  if (!(start < stop)) throw std::invalid_argument("start must be < stop");
  if (spacing == Spacing::kLog && start <= 0.0) {
    throw std::invalid_argument("log spacing needs start > 0");
  }
  std::vector<double> axis(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double frac = static_cast<double>(i) / (points - 1);
    axis[static_cast<size_t>(i)] =
        spacing == Spacing::kLog
            ? std::exp(std::log(start) + frac * (std::log(stop) - std::log(start)))
            : start + frac * (stop - start);
  }
  return axis;
}

}  // namespace

std::string sweep_power_csv(const PowerSweepConfig& cfg) {
  const std::vector<double> ps =
      make_axis(cfg.p_start, cfg.p_stop, cfg.points, cfg.spacing);
  std::ostringstream out;
  out << "P,lower_bits,upper_bits,gap_bits\n";
  for (double p : ps) {
    const SumCapacityBounds b =
        bounds(ImacChannel(p, p, cfg.h1, cfg.h2), cfg.optimizer);
    out << format_sig9(p) << ',' << format_sig9(b.lower) << ','
        << format_sig9(b.upper) << ',' << format_sig9(b.gap) << '\n';
  }
  return out.str();
}

std::string gap_grid_csv(const GapGridConfig& cfg) {
  if (cfg.h_start < 0.0) throw std::invalid_argument("h_start must be >= 0");
  const std::vector<double> hs =
      make_axis(cfg.h_start, cfg.h_stop, cfg.points, Spacing::kLinear);

  // Fig-style level sets: the band column holds the smallest threshold
  // exceeding the gap.
  constexpr std::array<double, 5> kBands = {0.1, 0.2, 0.4, 0.8, 1.6};

  std::ostringstream out;
  out << "h1,h2,gap_bits";
  if (cfg.bands) out << ",band";
  out << '\n';
  for (double h1 : hs) {
    for (double h2 : hs) {
      const SumCapacityBounds b =
          bounds(ImacChannel(cfg.p, cfg.p, h1, h2), cfg.optimizer);
      out << format_sig9(h1) << ',' << format_sig9(h2) << ','
          << format_sig9(b.gap);
      if (cfg.bands) {
        const char* band = "inf";
        std::string buf;
        for (double threshold : kBands) {
          if (b.gap < threshold) {
            buf = format_sig9(threshold);
            band = buf.c_str();
            break;
          }
        }
        out << ',' << band;
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string regime_grid_csv(const RegimeGridConfig& cfg) {
  if (cfg.p1 <= 0.0 || cfg.p2 <= 0.0) {
    throw std::invalid_argument("powers must be > 0");
  }
  const double auto_stop = 1.5 * (cfg.p1 + cfg.p2) * (1.0 + cfg.p1 + cfg.p2);
  const double x_stop = cfg.x_stop > 0.0 ? cfg.x_stop : auto_stop;
  const double y_stop = cfg.y_stop > 0.0 ? cfg.y_stop : auto_stop;
  const std::vector<double> xs = make_axis(0.0, x_stop, cfg.points,
                                           Spacing::kLinear);
  const std::vector<double> ys = make_axis(0.0, y_stop, cfg.points,
                                           Spacing::kLinear);

  std::ostringstream out;
  out << "x,y,mses12,mses21,ivs,vsc\n";
  for (double x : xs) {
    const double h1 = std::sqrt(x / cfg.p1);
    for (double y : ys) {
      const double h2 = std::sqrt(y / cfg.p2);
      const RegimeReport rep = classify(ImacChannel(cfg.p1, cfg.p2, h1, h2));
      out << format_sig9(x) << ',' << format_sig9(y) << ',' << rep.mses12
          << ',' << rep.mses21 << ',' << rep.ivs << ',' << rep.vsc << '\n';
    }
  }
  return out.str();
}

}  // namespace imac
