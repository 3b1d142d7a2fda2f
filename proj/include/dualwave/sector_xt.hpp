#pragma once

#include <vector>

#include "dualwave/grid.hpp"

namespace dualwave {

/// Time-sector generator data: H = p^2/2m + V(x) with V sampled on the
/// x grid, and the step size dt.
struct XtParams {
  double mass = 1.0;
  std::vector<double> potential;  // V at each x sample
  double dt = 0.0;
  double hbar = 1.0;
};

void validate(const XtParams& p, const Grid& grid);

/// Strang split-step propagation of a 1-D field along x: half potential
/// phase, full kinetic phase in the dual representation, half potential
/// phase, n_steps times. Norm-preserving to round-off; exact when V == 0.
/// n_steps == 0 returns the input unchanged.
Field evolve_xt(const Field& psi0, const XtParams& params, std::size_t n_steps);

/// <psi|H|psi> / <psi|psi>, kinetic term evaluated spectrally. Throws on a
/// zero field.
double energy_expectation(const Field& psi, const XtParams& params);

}  // namespace dualwave
