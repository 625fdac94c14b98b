// Dense-grid reference minimizer for the genie upper bound. Runs a plain
// 2001x2001 sweep of the (rho, t) square for a fixed channel list and
// writes the minima as a JSON fixture. Run once; the output is committed
// under tests/fixtures and checked against the production optimizer.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "imac/bounds.hpp"
#include "imac/channel.hpp"
#include "imac/numeric.hpp"

namespace {

double dense_grid_min(const imac::ImacChannel& ch, int n) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double rho = -1.0 + 2.0 * i / (n - 1);
    const double scale = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    for (int j = 0; j < n; ++j) {
      const double t = -1.0 + 2.0 * j / (n - 1);
      const double eta = t * scale;
      if (std::abs(eta) < imac::kEtaFloor) continue;
      const double v = imac::genie_objective(ch, imac::GenieParams(rho, eta));
      if (v < best) best = v;
    }
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::array<double, 4>> channels = {
      {1, 1, 0.3, 0.15},    {10, 10, 0.3, 0.15}, {1, 1, 0, 0},
      {5, 5, 0.1, 0.1},     {5, 5, 0.5, 0.25},   {0.5, 2, 0.3, 0.7},
      {2, 0.5, -0.4, 0.2},  {1, 1, 1, 1},        {1, 1, 2, 2},
      {3, 0.2, 0.15, 0.6},  {0.1, 0.1, 0.9, 0.3}, {20, 5, 0.05, 0.1},
      {1, 4, 0.25, -0.35},  {8, 8, 0.2, 0.2},    {0.01, 0.01, 0.3, 0.15},
      {50, 50, 0.3, 0.15},  {5, 5, 0, 0.4},      {2, 2, -0.3, 0.3},
      {1, 1, 0.05, 0.8},    {4, 1, 0.6, 0.1},
  };
  const int grid = 2001;
  const char* out_path =
      argc > 1 ? argv[1] : "tests/fixtures/genie_oracle.json";

  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : channels) {
    const imac::ImacChannel ch(c[0], c[1], c[2], c[3]);
    const double minimum = dense_grid_min(ch, grid);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", minimum);
    nlohmann::ordered_json item;
    item["p1"] = c[0];
    item["p2"] = c[1];
    item["h1"] = c[2];
    item["h2"] = c[3];
    item["oracle_bits"] = std::strtod(buf, nullptr);
    arr.push_back(std::move(item));
    std::cerr << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3]
              << ") -> " << buf << '\n';
  }

  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot open " << out_path << '\n';
    return 1;
  }
  f << arr.dump(2) << '\n';
  std::cout << "wrote " << out_path << '\n';
  return 0;
}
