#include "dualwave/sector_ke.hpp"

#include <algorithm>
#include <cmath>

#include "dualwave/bridge.hpp"

namespace dualwave {

void validate(const KeParams& p) {
  if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha))
    throw ValidationError("alpha: must be nonnegative and finite");
  if (!(p.beta >= 0.0) || !std::isfinite(p.beta))
    throw ValidationError("beta: must be nonnegative and finite");
  if (!std::isfinite(p.v0)) throw ValidationError("v0: must be finite");
  if (p.dE == 0.0 || !std::isfinite(p.dE))
    throw ValidationError("dE: must be nonzero and finite");
  if (!(p.hbar > 0.0) || !std::isfinite(p.hbar))
    throw ValidationError("hbar: must be positive and finite");
}

static void check_input(const Field& phi) {
  validate(phi);
  if (phi.grid.axes() != 1)
    throw ValidationError("evolve_ke: expected a 1-D field along k");
  if (phi.sector != Sector::KE)
    throw ValidationError("evolve_ke: field sector must be KE");
}

Field evolve_ke(const Field& phi0, const KeParams& params, std::size_t n_steps) {
  check_input(phi0);
  validate(params);
  if (n_steps == 0) return phi0;

  // The generator alpha X^2 + beta X^4 + v0 is diagonal in the X eigenbasis,
  // so the whole interval propagates in one exact phase multiplication.
  const double total_E = params.dE * static_cast<double>(n_steps);
  const AxisSpec dual = phi0.grid.dual_axis(0, 1.0);

  Field out = phi0;
  axis_transform(out.samples, phi0.grid, 0, dual, -1, 1.0);
  for (std::size_t a = 0; a < dual.n; ++a) {
    const double x = dual.origin + static_cast<double>(a) * dual.spacing;
    const double x2 = x * x;
    const double gen = params.alpha * x2 + params.beta * x2 * x2 + params.v0;
    out.samples[a] *= std::polar(1.0, -gen * total_E / params.hbar);
  }
  Grid dual_grid(dual);
  axis_transform(out.samples, dual_grid, 0, phi0.grid.axis(0), +1, 1.0);
  validate(out);
  return out;
}

double group_law_check(const Field& phi0, const KeParams& params,
                       std::size_t n1, std::size_t n2) {
  const Field once = evolve_ke(phi0, params, n1 + n2);
  const Field twice = evolve_ke(evolve_ke(phi0, params, n1), params, n2);
  double dev = 0.0;
  for (std::size_t i = 0; i < once.samples.size(); ++i)
    dev = std::max(dev, std::abs(once.samples[i] - twice.samples[i]));
  return dev;
}

static double rel_l2_residual(const std::vector<cplx>& a,
                              const std::vector<cplx>& b, double floor_norm) {
  double diff = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += std::norm(a[i] - b[i]);
    ref += std::norm(b[i]);
  }
  return std::sqrt(diff) / std::max(std::sqrt(ref), floor_norm);
}

static double residual_at(const Field& phi0, const KeParams& params, double dE,
                          const std::vector<cplx>& rhs, double floor_norm) {
  KeParams fwd = params;
  fwd.dE = dE;
  KeParams bwd = params;
  bwd.dE = -dE;
  const Field plus = evolve_ke(phi0, fwd, 1);
  const Field minus = evolve_ke(phi0, bwd, 1);
  std::vector<cplx> deriv(phi0.samples.size());
  for (std::size_t i = 0; i < deriv.size(); ++i)
    deriv[i] = (plus.samples[i] - minus.samples[i]) / (2.0 * dE);
  return rel_l2_residual(deriv, rhs, floor_norm);
}

double generator_consistency(const Field& phi0, const KeParams& params) {
  check_input(phi0);
  validate(params);

  // rhs = -(i/hbar) (alpha X^2 + beta X^4 + v0) phi0, built from apply_X
  const Field x1 = apply_X(phi0);
  const Field x2 = apply_X(x1);
  std::vector<cplx> rhs(phi0.samples.size());
  for (std::size_t i = 0; i < rhs.size(); ++i)
    rhs[i] = params.alpha * x2.samples[i] + params.v0 * phi0.samples[i];
  if (params.beta != 0.0) {
    const Field x4 = apply_X(apply_X(x2));
    for (std::size_t i = 0; i < rhs.size(); ++i)
      rhs[i] += params.beta * x4.samples[i];
  }
  const cplx minus_i_over_h{0.0, -1.0 / params.hbar};
  for (cplx& z : rhs) z *= minus_i_over_h;

  double phi_norm = 0.0;
  for (const cplx& z : phi0.samples) phi_norm += std::norm(z);
  const double floor_norm = std::sqrt(phi_norm);

  const double dE = std::abs(params.dE);
  const double r = residual_at(phi0, params, dE, rhs, floor_norm);
  const double r_half = residual_at(phi0, params, 0.5 * dE, rhs, floor_norm);
  if (r > 1e-11 && !(r_half < r))
    throw NumericalError(
        "generator_consistency: dE too coarse, residual does not shrink when halved");
  return r;
}

}  // namespace dualwave
