#pragma once

#include <string>

#include "imac/bounds.hpp"

namespace imac {

enum class Spacing { kLinear, kLog };

/// Sum-capacity bounds along P1 = P2 = P at fixed cross gains.
struct PowerSweepConfig {
  double h1 = 0.3;
  double h2 = 0.15;
  double p_start = 0.1;
  double p_stop = 50.0;
  int points = 100;
  Spacing spacing = Spacing::kLog;
  OptimizerSettings optimizer;
};

/// CSV `P,lower_bits,upper_bits,gap_bits`, one row per grid point.
std::string sweep_power_csv(const PowerSweepConfig& cfg);

/// Upper-minus-lower gap over an (h1, h2) grid at fixed P1 = P2.
struct GapGridConfig {
  double p = 5.0;
  double h_start = 0.0;
  double h_stop = 0.5;
  int points = 41;     // per axis
  bool bands = false;  // append the smallest level-set threshold column
  OptimizerSettings optimizer;
};

/// CSV `h1,h2,gap_bits[,band]`, row-major with h1 outer.
std::string gap_grid_csv(const GapGridConfig& cfg);

/// Regime flags over the (h1^2 P1, h2^2 P2) plane at fixed powers.
struct RegimeGridConfig {
  double p1 = 1.0;
  double p2 = 1.0;
  double x_stop = 0.0;  // <= 0 means auto: 1.5 (P1+P2)(1+P1+P2)
  double y_stop = 0.0;  // <= 0 means auto
  int points = 61;      // per axis, starting at 0
};

/// CSV `x,y,mses12,mses21,ivs,vsc` with x = h1^2 P1, y = h2^2 P2,
/// row-major with x outer.
std::string regime_grid_csv(const RegimeGridConfig& cfg);

}  // namespace imac
