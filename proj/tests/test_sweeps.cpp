#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "imac/channel.hpp"
#include "imac/regimes.hpp"
#include "imac/sweeps.hpp"

using imac::GapGridConfig;
using imac::PowerSweepConfig;
using imac::RegimeGridConfig;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

// Small optimizer settings keep the unit suite quick; accuracy is pinned
// by the dedicated oracle check.
imac::OptimizerSettings quick() { return {51, 60}; }

}  // namespace

TEST_CASE("power sweep CSV") {
  PowerSweepConfig cfg;
  cfg.p_start = 10.0;
  cfg.p_stop = 20.0;
  cfg.points = 2;
  cfg.optimizer = quick();
  const std::string csv = sweep_power_csv(cfg);
  const auto rows = parse_csv(csv);

  REQUIRE(rows.size() == 3);  // header + 2 data rows
  CHECK(rows[0] == std::vector<std::string>{"P", "lower_bits", "upper_bits",
                                            "gap_bits"});
  CHECK(rows[1][0] == "10");
  CHECK(rows[1][1] == "3.38014271");  // log2(1 + 20/2.125)
  CHECK(rows[2][0] == "20");

  for (size_t r = 1; r < rows.size(); ++r) {
    // cells carry 9 significant digits, so the identity holds to ~1e-8
    CHECK(std::abs(num(rows[r][3]) - (num(rows[r][2]) - num(rows[r][1]))) <=
          2e-8);
  }

  CHECK(sweep_power_csv(cfg) == csv);  // deterministic bytes

  SUBCASE("grid spacing") {
    PowerSweepConfig lin = cfg;
    lin.points = 3;
    lin.spacing = imac::Spacing::kLinear;
    const auto linear_rows = parse_csv(sweep_power_csv(lin));
    CHECK(num(linear_rows[2][0]) == doctest::Approx(15.0));
    lin.spacing = imac::Spacing::kLog;
    const auto log_rows = parse_csv(sweep_power_csv(lin));
    CHECK(num(log_rows[2][0]) ==
          doctest::Approx(std::sqrt(10.0 * 20.0)).epsilon(1e-8));
  }

  SUBCASE("validation") {
    PowerSweepConfig bad = cfg;
    bad.points = 1;
    CHECK_THROWS_AS(sweep_power_csv(bad), std::invalid_argument);
    bad = cfg;
    bad.p_stop = bad.p_start;
    CHECK_THROWS_AS(sweep_power_csv(bad), std::invalid_argument);
    bad = cfg;
    bad.p_start = 0.0;  // log spacing needs > 0
    CHECK_THROWS_AS(sweep_power_csv(bad), std::invalid_argument);
  }
}

TEST_CASE("gap grid CSV") {
  GapGridConfig cfg;
  cfg.points = 3;
  cfg.h_stop = 0.3;
  cfg.optimizer = quick();

  const std::string csv = gap_grid_csv(cfg);
  const auto rows = parse_csv(csv);
  REQUIRE(rows.size() == 1 + 3 * 3);
  CHECK(rows[0] == std::vector<std::string>{"h1", "h2", "gap_bits"});

  // the (0,0) corner coincides exactly
  CHECK(rows[1][0] == "0");
  CHECK(rows[1][1] == "0");
  CHECK(num(rows[1][2]) <= 1e-6);

  // row-major with h1 outer
  CHECK(rows[2][0] == "0");
  CHECK(num(rows[2][1]) == doctest::Approx(0.15));
  CHECK(rows[4][0] == "0.15");

  CHECK(gap_grid_csv(cfg) == csv);

  SUBCASE("band column tracks the level sets") {
    GapGridConfig banded = cfg;
    banded.bands = true;
    const auto brows = parse_csv(gap_grid_csv(banded));
    CHECK(brows[0] == std::vector<std::string>{"h1", "h2", "gap_bits",
                                               "band"});
    for (size_t r = 1; r < brows.size(); ++r) {
      const double gap = num(brows[r][2]);
      const std::string& band = brows[r][3];
      if (band == "inf") {
        CHECK(gap >= 1.6);
      } else {
        CHECK(gap < num(band));
      }
    }
    CHECK(brows[1][3] == "0.1");  // zero gap sits in the innermost band
  }
}

TEST_CASE("regime grid CSV") {
  RegimeGridConfig cfg;  // P1 = P2 = 1, auto stop 9, 61 points
  cfg.points = 61;
  const std::string csv = regime_grid_csv(cfg);
  const auto rows = parse_csv(csv);
  REQUIRE(rows.size() == 1 + 61 * 61);
  CHECK(rows[0] == std::vector<std::string>{"x", "y", "mses12", "mses21",
                                            "ivs", "vsc"});
  // origin: all flags off
  CHECK(rows[1] == std::vector<std::string>{"0", "0", "0", "0", "0", "0"});

  CHECK(regime_grid_csv(cfg) == csv);

  SUBCASE("flags agree with classify cell by cell") {
    for (size_t r = 1; r < rows.size(); r += 97) {
      const double x = num(rows[r][0]);
      const double y = num(rows[r][1]);
      const auto rep = classify(imac::ImacChannel(
          1.0, 1.0, std::sqrt(x), std::sqrt(y)));
      CHECK(num(rows[r][2]) == (rep.mses12 ? 1 : 0));
      CHECK(num(rows[r][3]) == (rep.mses21 ? 1 : 0));
      CHECK(num(rows[r][4]) == (rep.ivs ? 1 : 0));
      CHECK(num(rows[r][5]) == (rep.vsc ? 1 : 0));
    }
  }

  SUBCASE("inclusive thresholds on the exact boundary") {
    // x = y = P_i (1+P1+P2) = 3 lands on the grid (cell 0.15)
    bool found = false;
    for (size_t r = 1; r < rows.size(); ++r) {
      if (num(rows[r][0]) == doctest::Approx(3.0).epsilon(1e-12) &&
          num(rows[r][1]) == doctest::Approx(3.0).epsilon(1e-12)) {
        CHECK(rows[r][4] == "1");  // ivs inclusive
        CHECK(rows[r][5] == "1");  // vsc: x + y = 6 exactly
        found = true;
      }
    }
    CHECK(found);
  }
}
