// Command-line front end: interference-regime classification, sum-capacity
// bounds, rate-region dumps, and CSV sweeps for the two-cell interfering
// Gaussian MAC.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "imac/bounds.hpp"
#include "imac/channel.hpp"
#include "imac/numeric.hpp"
#include "imac/regimes.hpp"
#include "imac/regions.hpp"
#include "imac/sweeps.hpp"

namespace {

struct ChannelFlags {
  double p1 = 1.0, p2 = 1.0, h1 = 0.0, h2 = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p1", p1, "power of users 1 and 3")->required();
    cmd->add_option("--p2", p2, "power of users 2 and 4")->required();
    cmd->add_option("--h1", h1, "cross gain h1")->required();
    cmd->add_option("--h2", h2, "cross gain h2")->required();
  }

  imac::ImacChannel channel() const { return {p1, p2, h1, h2}; }
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output path: " + out_path);
  f << text;
  if (!f) throw std::invalid_argument("cannot write output path: " + out_path);
}

double sig9(double v) {
  return std::strtod(imac::format_sig9(v).c_str(), nullptr);
}

std::string classify_text(const imac::ImacChannel& ch,
                          const std::string& format) {
  const imac::RegimeReport rep = imac::classify(ch);
  const auto exact = imac::exact_sum_capacity(ch);
  if (format == "csv") {
    std::string row = "mses12,mses21,ivs,vsc,exact_bits,exact_basis\n";
    row += std::to_string(rep.mses12) + ',' + std::to_string(rep.mses21) +
           ',' + std::to_string(rep.ivs) + ',' + std::to_string(rep.vsc) + ',';
    if (exact) {
      row += imac::format_sig9(exact->bits);
      row += ',';
      row += to_string(exact->basis);
    } else {
      row += ',';
    }
    row += '\n';
    return row;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(rep));
  if (exact) {
    j["exact_sum_capacity"] = {{"bits", sig9(exact->bits)},
                               {"basis", to_string(exact->basis)}};
  } else {
    j["exact_sum_capacity"] = nullptr;
  }
  return j.dump() + "\n";
}

std::string bounds_text(const imac::ImacChannel& ch,
                        const imac::OptimizerSettings& opts,
                        const std::string& format) {
  const imac::SumCapacityBounds b = imac::bounds(ch, opts);
  if (format == "csv") {
    return "lower_bits,upper_bits,gap_bits,rho,eta\n" +
           imac::format_sig9(b.lower) + ',' + imac::format_sig9(b.upper) +
           ',' + imac::format_sig9(b.gap) + ',' +
           imac::format_sig9(b.argmin.rho) + ',' +
           imac::format_sig9(b.argmin.eta) + '\n';
  }
  return to_json(b) + "\n";
}

std::string region_text(const imac::ImacChannel& ch, const std::string& which) {
  using imac::MsesOrientation;
  imac::RatePolytope poly;
  if (which == "outer") {
    poly = imac::outer_bound(ch);
  } else if (which == "mses12") {
    poly = imac::mses_region(ch, MsesOrientation::k12);
  } else if (which == "mses21") {
    poly = imac::mses_region(ch, MsesOrientation::k21);
  } else if (which == "ivs") {
    poly = imac::ivs_region(ch);
  } else {
    poly = imac::achievable_product_region(ch);
  }
  return to_json(poly) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-cell interfering Gaussian MAC toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to this path instead of stdout");

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "interference-regime flags and margins");
  classify_cmd->fallthrough();
  ChannelFlags classify_ch;
  classify_ch.attach(classify_cmd);
  std::string classify_format = "json";
  classify_cmd->add_option("--format", classify_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // bounds
  auto* bounds_cmd =
      app.add_subcommand("bounds", "sum-capacity lower/upper bounds");
  bounds_cmd->fallthrough();
  ChannelFlags bounds_ch;
  bounds_ch.attach(bounds_cmd);
  imac::OptimizerSettings bounds_opts;
  bounds_cmd->add_option("--grid", bounds_opts.grid_points,
                         "coarse grid points per axis");
  bounds_cmd->add_option("--refine", bounds_opts.refine_iterations,
                         "simplex refinement iterations");
  std::string bounds_format = "json";
  bounds_cmd->add_option("--format", bounds_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // region
  auto* region_cmd = app.add_subcommand("region", "rate-region constraints");
  region_cmd->fallthrough();
  ChannelFlags region_ch;
  region_ch.attach(region_cmd);
  std::string which = "outer";
  region_cmd
      ->add_option("--which", which,
                   "outer, mses12, mses21, ivs, or product")
      ->check(CLI::IsMember({"outer", "mses12", "mses21", "ivs", "product"}));

  // sweep-power
  auto* sweep_cmd =
      app.add_subcommand("sweep-power", "bounds along P1 = P2 = P (CSV)");
  sweep_cmd->fallthrough();
  imac::PowerSweepConfig sweep_cfg;
  sweep_cmd->add_option("--h1", sweep_cfg.h1, "cross gain h1");
  sweep_cmd->add_option("--h2", sweep_cfg.h2, "cross gain h2");
  sweep_cmd->add_option("--pmin", sweep_cfg.p_start, "first P value");
  sweep_cmd->add_option("--pmax", sweep_cfg.p_stop, "last P value");
  sweep_cmd->add_option("--points", sweep_cfg.points, "grid points");
  std::string spacing = "log";
  sweep_cmd->add_option("--spacing", spacing, "log or linear")
      ->check(CLI::IsMember({"log", "linear"}));
  sweep_cmd->add_option("--grid", sweep_cfg.optimizer.grid_points,
                        "optimizer grid points per axis");
  sweep_cmd->add_option("--refine", sweep_cfg.optimizer.refine_iterations,
                        "optimizer refinement iterations");

  // gap-grid
  auto* gap_cmd = app.add_subcommand(
      "gap-grid", "upper-lower gap over an (h1, h2) grid (CSV)");
  gap_cmd->fallthrough();
  imac::GapGridConfig gap_cfg;
  gap_cmd->add_option("--p", gap_cfg.p, "P1 = P2");
  gap_cmd->add_option("--hmin", gap_cfg.h_start, "first gain value");
  gap_cmd->add_option("--hmax", gap_cfg.h_stop, "last gain value");
  gap_cmd->add_option("--points", gap_cfg.points, "grid points per axis");
  gap_cmd->add_flag("--bands", gap_cfg.bands,
                    "append the level-set threshold column");
  gap_cmd->add_option("--grid", gap_cfg.optimizer.grid_points,
                      "optimizer grid points per axis");
  gap_cmd->add_option("--refine", gap_cfg.optimizer.refine_iterations,
                      "optimizer refinement iterations");

  // regime-grid
  auto* regime_cmd = app.add_subcommand(
      "regime-grid", "regime flags over the (h1^2 P1, h2^2 P2) plane (CSV)");
  regime_cmd->fallthrough();
  imac::RegimeGridConfig regime_cfg;
  regime_cmd->add_option("--p1", regime_cfg.p1, "power of users 1 and 3");
  regime_cmd->add_option("--p2", regime_cfg.p2, "power of users 2 and 4");
  regime_cmd->add_option("--xmax", regime_cfg.x_stop,
                         "last x value (default 1.5 (P1+P2)(1+P1+P2))");
  regime_cmd->add_option("--ymax", regime_cfg.y_stop,
                         "last y value (default 1.5 (P1+P2)(1+P1+P2))");
  regime_cmd->add_option("--points", regime_cfg.points,
                         "grid points per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    std::string text;
    if (*classify_cmd) {
      text = classify_text(classify_ch.channel(), classify_format);
    } else if (*bounds_cmd) {
      text = bounds_text(bounds_ch.channel(), bounds_opts, bounds_format);
    } else if (*region_cmd) {
      text = region_text(region_ch.channel(), which);
    } else if (*sweep_cmd) {
      sweep_cfg.spacing =
          spacing == "log" ? imac::Spacing::kLog : imac::Spacing::kLinear;
      text = sweep_power_csv(sweep_cfg);
    } else if (*gap_cmd) {
      text = gap_grid_csv(gap_cfg);
    } else if (*regime_cmd) {
      text = regime_grid_csv(regime_cfg);
    }
    write_output(text, out_path);
  } catch (const imac::RegimeError& e) {
    std::cerr << "error: " << e.what() << " (margin " << e.margin() << ")\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
