#include "dualwave/sector_xt.hpp"

#include <cmath>
#include <numbers>

#include "dualwave/fft.hpp"

namespace dualwave {

// dual frequency of FFT bin j (signed index), spacing d
static double fft_freq(std::size_t j, std::size_t n, double d) {
  const double signed_j = j < n / 2 ? static_cast<double>(j)
                                    : static_cast<double>(j) - static_cast<double>(n);
  return 2.0 * std::numbers::pi * signed_j / (static_cast<double>(n) * d);
}

void validate(const XtParams& p, const Grid& grid) {
  if (!(p.mass > 0.0) || !std::isfinite(p.mass))
    throw ValidationError("mass: must be positive and finite");
  if (p.dt == 0.0 || !std::isfinite(p.dt))
    throw ValidationError("dt: must be nonzero and finite");
  if (!(p.hbar > 0.0) || !std::isfinite(p.hbar))
    throw ValidationError("hbar: must be positive and finite");
  if (p.potential.size() != grid.axis(0).n)
    throw ValidationError("potential: sample count does not match the x grid");
  for (double v : p.potential)
    if (!std::isfinite(v)) throw ValidationError("potential: non-finite entry");
}

Field evolve_xt(const Field& psi0, const XtParams& params, std::size_t n_steps) {
  validate(psi0);
  if (psi0.grid.axes() != 1)
    throw ValidationError("evolve_xt: expected a 1-D field along x");
  if (psi0.sector != Sector::XT)
    throw ValidationError("evolve_xt: field sector must be XT");
  validate(params, psi0.grid);
  if (n_steps == 0) return psi0;

  const std::size_t n = psi0.grid.axis(0).n;
  const double dx = psi0.grid.axis(0).spacing;
  const double inv_n = 1.0 / static_cast<double>(n);

  std::vector<cplx> pv_half(n), pv_full(n), pk(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double arg = -params.potential[i] * params.dt / params.hbar;
    pv_half[i] = std::polar(1.0, 0.5 * arg);
    pv_full[i] = std::polar(1.0, arg);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double k = fft_freq(j, n, dx);
    // kinetic phase e^{-i hbar k^2 dt / 2m}; 1/n folds the inverse transform
    pk[j] = std::polar(inv_n, -params.hbar * k * k * params.dt / (2.0 * params.mass));
  }

  Field out = psi0;
  cplx* d = out.samples.data();
  for (std::size_t i = 0; i < n; ++i) d[i] *= pv_half[i];
  for (std::size_t s = 0; s < n_steps; ++s) {
    fft_radix2(d, n, -1);
    for (std::size_t j = 0; j < n; ++j) d[j] *= pk[j];
    fft_radix2(d, n, +1);
    if (s + 1 < n_steps)
      for (std::size_t i = 0; i < n; ++i) d[i] *= pv_full[i];
  }
  for (std::size_t i = 0; i < n; ++i) d[i] *= pv_half[i];
  validate(out);
  return out;
}

double energy_expectation(const Field& psi, const XtParams& params) {
  validate(psi);
  if (psi.grid.axes() != 1)
    throw ValidationError("energy_expectation: expected a 1-D field along x");
  validate(params, psi.grid);

  double nrm = 0.0;
  for (const cplx& z : psi.samples) nrm += std::norm(z);
  if (nrm == 0.0) throw ValidationError("energy_expectation: zero field");

  double pot = 0.0;
  for (std::size_t i = 0; i < psi.samples.size(); ++i)
    pot += params.potential[i] * std::norm(psi.samples[i]);

  const std::size_t n = psi.grid.axis(0).n;
  const double dx = psi.grid.axis(0).spacing;
  std::vector<cplx> hat(psi.samples);
  fft_radix2(hat.data(), n, -1);
  double kin = 0.0, hat_nrm = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double k = fft_freq(j, n, dx);
    const double w = std::norm(hat[j]);
    kin += w * params.hbar * params.hbar * k * k / (2.0 * params.mass);
    hat_nrm += w;
  }
  return kin / hat_nrm + pot / nrm;
}

}  // namespace dualwave
