#include "dualwave/horizon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dualwave/parallel.hpp"

namespace dualwave {

static constexpr double kPi = std::numbers::pi;

// Fit-band sampling: omega = j*kappa/16 up to 3.25*kappa, fit over
// [0.5*kappa, 3*kappa]. Values pinned by the surface-gravity contract.
static constexpr double kOmegaStepFactor = 1.0 / 16.0;
static constexpr double kOmegaMaxFactor = 3.25;
static constexpr double kFitLoFactor = 0.5;
static constexpr double kFitHiFactor = 3.0;

HorizonParams validated(HorizonParams p) {
  if (!(p.k0 > 0.0) || !std::isfinite(p.k0))
    throw ValidationError("k0: must be positive and finite");
  if (!(p.kappa > 0.0) || !std::isfinite(p.kappa))
    throw ValidationError("kappa: must be positive and finite");
  if (p.x_grid.axes() != 1)
    throw ValidationError("x_grid: must be 1-D");
  if (p.epsilon <= 0.0) p.epsilon = 0.05 * p.kappa;
  if (!std::isfinite(p.epsilon))
    throw ValidationError("epsilon: must be finite");
  // anti-aliasing: the largest local wavenumber sits at the low-x end
  const AxisSpec& ax = p.x_grid.axis(0);
  const double k_max = p.k0 * std::exp(-p.kappa * ax.origin);
  if (!(k_max * ax.spacing < kPi))
    throw ValidationError(
        "x_grid: undersampled chirp, max k(x)*spacing = " +
        std::to_string(k_max * ax.spacing) + " >= pi");
  return p;
}

HorizonParams scan_params(double kappa, std::size_t n) {
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw ValidationError("kappa: must be positive and finite");
  HorizonParams p;
  p.kappa = kappa;
  p.k0 = 75.0 * std::exp(9.0) * kappa;  // local wavenumber ~75*kappa at midpoint
  const double length = 18.0 / kappa;
  p.x_grid = make_grid(n, 0.0, length / static_cast<double>(n));
  p.epsilon = 0.05 * kappa;
  p.window = Window::raised_cosine;
  return validated(p);
}

std::vector<double> solve_boundary_ode(const HorizonParams& params_in) {
  const HorizonParams params = validated(params_in);
  const AxisSpec& ax = params.x_grid.axis(0);
  const double h = ax.spacing;
  if (params.kappa * h > 0.5)
    throw ValidationError("x_grid: step too coarse for the boundary ODE "
                          "(kappa*spacing > 0.5)");

  // classical RK4 on y = ln k, y' = f(x,y) = -kappa
  const auto f = [&](double, double) { return -params.kappa; };
  std::vector<double> k(ax.n);
  double y = std::log(params.k0);
  // integrate from x=0 to the grid origin first (origin may be nonzero)
  const double x0 = ax.origin;
  {
    // k(0) = k0; one RK4 step of size x0 reaches the origin exactly for
    // this constant-slope field
    const double k1 = f(0.0, y), k2 = f(0.0, y), k3 = f(0.0, y), k4 = f(0.0, y);
    y += x0 / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  for (std::size_t j = 0; j < ax.n; ++j) {
    k[j] = std::exp(y);
    const double x = ax.origin + static_cast<double>(j) * h;
    const double k1 = f(x, y);
    const double k2 = f(x + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = f(x + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = f(x + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return k;
}

Field chirped_wave(const HorizonParams& params_in) {
  const HorizonParams params = validated(params_in);
  const AxisSpec& ax = params.x_grid.axis(0);
  const double amp = params.k0 / params.kappa;  // A = k0/kappa

  Field psi = make_field(Sector::XT, params.x_grid, "chirped boundary wave");
  cplx* d = psi.samples.data();
  parallel_for(ax.n, [&](std::size_t j) {
    const double x = ax.origin + static_cast<double>(j) * ax.spacing;
    d[j] = std::polar(1.0, -amp * std::exp(-params.kappa * x));
  });
  return psi;
}

std::vector<double> local_wavenumber(const Field& psi) {
  validate(psi);
  if (psi.grid.axes() != 1)
    throw ValidationError("local_wavenumber: expected a 1-D field");
  const std::size_t n = psi.grid.axis(0).n;
  const double dx = psi.grid.axis(0).spacing;

  if (std::abs(psi.samples[0]) == 0.0)
    throw ValidationError("local_wavenumber: zero sample at index 0");
  std::vector<double> theta(n);
  double prev_raw = std::arg(psi.samples[0]);
  double unwrapped = prev_raw;
  theta[0] = unwrapped;
  for (std::size_t j = 1; j < n; ++j) {
    if (std::abs(psi.samples[j]) == 0.0)
      throw ValidationError("local_wavenumber: zero sample at index " +
                            std::to_string(j));
    const double raw = std::arg(psi.samples[j]);
    double step = raw - prev_raw;
    if (step > kPi) step -= 2.0 * kPi;
    if (step <= -kPi) step += 2.0 * kPi;
    if (std::abs(step) >= kPi * (1.0 - 1e-9))
      throw NumericalError("local_wavenumber: phase jump >= pi per cell "
                           "(undersampled chirp) at index " + std::to_string(j));
    unwrapped += step;
    theta[j] = unwrapped;
    prev_raw = raw;
  }

  std::vector<double> k(n);
  for (std::size_t j = 1; j + 1 < n; ++j)
    k[j] = (theta[j + 1] - theta[j - 1]) / (2.0 * dx);
  k[0] = (theta[1] - theta[0]) / dx;
  k[n - 1] = (theta[n - 1] - theta[n - 2]) / dx;
  return k;
}

static std::vector<double> window_samples(Window w, std::size_t n) {
  std::vector<double> out(n, 1.0);
  if (w == Window::none) return out;
  // 4-term cosine-sum taper (Nuttall coefficients): sidelobes below -90 dB,
  // which the e^{-pi omega/kappa} tail of the negative-frequency band needs.
  static constexpr double a[4] = {0.355768, 0.487396, 0.144232, 0.012604};
  for (std::size_t j = 0; j < n; ++j) {
    const double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
    out[j] = a[0] - a[1] * std::cos(t) + a[2] * std::cos(2.0 * t) -
             a[3] * std::cos(3.0 * t);
  }
  return out;
}

SpectrumReport thermal_spectrum(const Field& psi, const HorizonParams& params_in) {
  const HorizonParams params = validated(params_in);
  validate(psi);
  if (psi.grid.axes() != 1)
    throw ValidationError("thermal_spectrum: expected a 1-D field");
  const AxisSpec& ax = psi.grid.axis(0);
  const std::size_t n = ax.n;
  const double dx = ax.spacing;
  const double x_ref = ax.origin + static_cast<double>(n / 2) * dx;

  // weighted signal z = psi * regulator * window
  const std::vector<double> win = window_samples(params.window, n);
  std::vector<cplx> z(n);
  {
    const cplx* s = psi.samples.data();
    cplx* zd = z.data();
    const double eps = params.epsilon;
    parallel_for(n, [&](std::size_t j) {
      const double x = ax.origin + static_cast<double>(j) * dx;
      zd[j] = s[j] * (win[j] * std::exp(-eps * std::abs(x - x_ref)));
    });
  }

  const std::size_t m =
      static_cast<std::size_t>(std::llround(kOmegaMaxFactor / kOmegaStepFactor));
  const double dw = params.kappa * kOmegaStepFactor;

  SpectrumReport rep;
  rep.omega.resize(m);
  rep.power_pos.resize(m);
  rep.power_neg.resize(m);
  rep.log_ratio.assign(m, 0.0);
  rep.fit_window_lo = kFitLoFactor * params.kappa;
  rep.fit_window_hi = kFitHiFactor * params.kappa;

  // direct regulated transform at +-omega; each omega handled serially by
  // one worker with an incremental rotation, renormalized every 4096 steps
  parallel_for(m, [&](std::size_t i) {
    const double omega = dw * static_cast<double>(i + 1);
    cplx acc_p{0.0, 0.0}, acc_m{0.0, 0.0};
    const cplx step = std::polar(1.0, -omega * dx);
    cplx rot{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      if ((j & 4095u) == 0u)
        rot = std::polar(1.0, -omega * (ax.origin + static_cast<double>(j) * dx));
      acc_p += z[j] * rot;
      acc_m += z[j] * std::conj(rot);
      rot *= step;
    }
    rep.omega[i] = omega;
    rep.power_pos[i] = std::norm(acc_p * dx);
    rep.power_neg[i] = std::norm(acc_m * dx);
  });

  // least-squares fit of ln(P-/P+) = slope*omega + b over the fit window
  double max_power = 0.0;
  for (double v : rep.power_pos) max_power = std::max(max_power, v);
  std::vector<std::size_t> sel;
  for (std::size_t i = 0; i < m; ++i)
    if (rep.omega[i] >= rep.fit_window_lo && rep.omega[i] <= rep.fit_window_hi)
      sel.push_back(i);
  if (sel.size() < 4)
    throw NumericalError("thermal_spectrum: degenerate fit, fewer than 4 "
                         "omega points in the fit window");
  for (std::size_t i : sel) {
    if (rep.power_pos[i] <= 1e-14 * max_power)
      throw NumericalError("thermal_spectrum: degenerate fit, power_pos at "
                           "the round-off floor inside the fit window");
    if (rep.power_neg[i] <= 1e-280)
      throw NumericalError("thermal_spectrum: power_neg underflow");
  }
  for (std::size_t i = 0; i < m; ++i)
    rep.log_ratio[i] = (rep.power_pos[i] > 0.0 && rep.power_neg[i] > 0.0)
                           ? std::log(rep.power_neg[i] / rep.power_pos[i])
                           : 0.0;

  double sw = 0.0, sl = 0.0;
  for (std::size_t i : sel) {
    sw += rep.omega[i];
    sl += rep.log_ratio[i];
  }
  const double mw = sw / static_cast<double>(sel.size());
  const double ml = sl / static_cast<double>(sel.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i : sel) {
    sxx += (rep.omega[i] - mw) * (rep.omega[i] - mw);
    sxy += (rep.omega[i] - mw) * (rep.log_ratio[i] - ml);
  }
  const double slope = sxy / sxx;
  if (!(slope < 0.0))
    throw NumericalError("thermal_spectrum: degenerate fit, nonnegative slope");
  rep.kappa_fit = -2.0 * kPi / slope;

  double ss = 0.0, lo = rep.log_ratio[sel.front()], hi = lo;
  for (std::size_t i : sel) {
    const double pred = slope * (rep.omega[i] - mw) + ml;
    ss += (rep.log_ratio[i] - pred) * (rep.log_ratio[i] - pred);
    lo = std::min(lo, rep.log_ratio[i]);
    hi = std::max(hi, rep.log_ratio[i]);
  }
  rep.fit_residual = std::sqrt(ss / static_cast<double>(sel.size())) /
                     std::max(hi - lo, 1e-300);
  return rep;
}

std::vector<ScanRow> surface_gravity_scan(const std::vector<double>& kappas,
                                          const HorizonParams& params_template) {
  const HorizonParams tmpl = validated(params_template);
  std::vector<ScanRow> rows;
  rows.reserve(kappas.size());
  for (double kap : kappas) {
    if (!(kap > 0.0) || !std::isfinite(kap))
      throw ValidationError("scan kappa: must be positive and finite");
    // rescale the template multiplicatively: kappa -> kap, x -> x/lambda
    const double lambda = kap / tmpl.kappa;
    HorizonParams p;
    p.kappa = kap;
    p.k0 = tmpl.k0 * lambda;
    const AxisSpec& t = tmpl.x_grid.axis(0);
    p.x_grid = make_grid(t.n, t.origin / lambda, t.spacing / lambda);
    p.epsilon = tmpl.epsilon * lambda;
    p.window = tmpl.window;
    try {
      const Field psi = chirped_wave(p);
      const SpectrumReport rep = thermal_spectrum(psi, p);
      rows.push_back({kap, rep.kappa_fit, std::abs(rep.kappa_fit - kap) / kap});
    } catch (const std::exception& e) {
      throw NumericalError("surface_gravity_scan: kappa=" + std::to_string(kap) +
                           ": " + e.what());
    }
  }
  return rows;
}

}  // namespace dualwave
