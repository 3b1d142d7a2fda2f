#pragma once

#include <cstdint>
#include <vector>

#include "dualwave/grid.hpp"

namespace dualwave {

/// Nonnegative spectral weight A(k,E) on a (k,E) grid.
struct SpectralWeight {
  Grid grid;                     // 2-D (k,E), or 1-D k-only
  std::vector<double> amplitude; // A >= 0, finite, row-major
};

void validate(const SpectralWeight& w);

/// Random-phase ensemble: fixed weight, i.i.d. uniform phases per mode,
/// counter-based seeding so sample `index` is reproducible regardless of
/// execution order.
struct EnsembleSpec {
  SpectralWeight weight;
  std::size_t n_samples = 0;
  std::uint64_t master_seed = 0;
};

void validate(const EnsembleSpec& spec);

/// Riemann sum  sum A^2 * cell_volume  -- the exact projected density.
double rho_exact_sum(const SpectralWeight& w);

/// One realization: phases theta(k,E) ~ U[0,2pi) from stream
/// (master_seed, index), phi = s*A*e^{i theta} with the mode weight s chosen
/// so the expected projected density equals rho_exact_sum, mapped to the xt
/// sector. Deterministic per (seed, index).
Field sample_realization(const EnsembleSpec& spec, std::size_t index);

struct DensityReport {
  double rho_estimate = 0.0;   // grid mean of the ensemble-mean density
  double rho_exact_sum = 0.0;  // Riemann sum of A^2
  double spatial_cv = 0.0;     // cv of the ensemble-mean density over the grid
  double cv_axis0 = 0.0;       // cv of the profile averaged over the other axis
  double cv_axis1 = 0.0;       // (2-D grids only)
  std::size_t n_samples = 0;
};

/// Pointwise ensemble average of |psi|^2 accumulated in fixed index order
/// (samples are generated in parallel, reduced serially), then summarized.
DensityReport ensemble_density(const EnsembleSpec& spec);

/// Ensemble/base-point averaged correlation <psi(x) psi*(x+lag)> along one
/// axis, lags in whole cells (circular). lag[j] holds the signed lag in
/// physical units; matches the Fourier transform of the |A|^2 marginal
/// (Wiener-Khinchin) up to statistical noise.
struct Coherence {
  std::vector<double> lag;
  std::vector<cplx> value;
};

Coherence coherence_function(const EnsembleSpec& spec, int axis);

}  // namespace dualwave
