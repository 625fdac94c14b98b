#pragma once

#include <string>

#include "imac/channel.hpp"

namespace imac {

/// Genie correlation parameters: rho in [-1,1] and eta^2 <= 1 - rho^2.
struct GenieParams {
  double rho;
  double eta;

  GenieParams(double rho, double eta);
};

/// The genie-aided sum-rate expression
///   log2(1 + (1/eta^2) (INR + A / (1 - rho^2 + INR)))
/// with A = P1 (eta - rho h1)^2 + P2 (eta - rho h2)^2 + P1 P2 (h1 - h2)^2.
/// Throws std::domain_error for |eta| below kEtaFloor.
double genie_objective(const ImacChannel& ch, const GenieParams& p);

struct OptimizerSettings {
  int grid_points = 201;       // coarse grid per axis
  int refine_iterations = 200; // simplex descent steps
};

struct GenieBound {
  double bits;
  GenieParams argmin;
};

/// Approximate global minimum of the genie objective over the feasible
/// set, parameterized as rho in [-1,1], eta = t sqrt(1-rho^2), t in
/// [-1,1]: coarse grid followed by derivative-free simplex refinement.
/// Never above the best coarse-grid value. The zero-gain channel is
/// evaluated in closed form.
GenieBound upper_bound(const ImacChannel& ch,
                       const OptimizerSettings& opts = {});

/// Treating interference as noise: log2(1 + (P1+P2)/(1 + h1^2 P1 + h2^2 P2)).
double lower_bound_tin(const ImacChannel& ch);

struct SumCapacityBounds {
  double lower;  // bits
  double upper;  // bits
  double gap;    // upper - lower
  GenieParams argmin;
};

/// Packaged sum-capacity bounds: upper is the smaller of the genie bound
/// and the exact LP value over the outer-bound polytope; when a regime
/// theorem applies, lower and upper both equal the exact sum capacity.
SumCapacityBounds bounds(const ImacChannel& ch,
                         const OptimizerSettings& opts = {});

std::string to_json(const SumCapacityBounds& b);

}  // namespace imac
