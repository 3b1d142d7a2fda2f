#pragma once

#include <vector>

#include "dualwave/grid.hpp"

namespace dualwave {

enum class Window : int { none = 0, raised_cosine = 1 };

/// Boundary-map parameters: k(x) = k0 e^{-kappa x} on x_grid, plus the
/// frequency-analysis regulator and window.
struct HorizonParams {
  double k0 = 0.0;       // boundary wavenumber scale
  double kappa = 0.0;    // local exponential scaling rate
  Grid x_grid;           // 1-D
  double epsilon = 0.0;  // regulator; <=0 means "use default 0.05*kappa"
  Window window = Window::raised_cosine;
};

/// Fills the epsilon default and checks invariants, including the
/// anti-aliasing bound max k(x)*spacing < pi.
HorizonParams validated(HorizonParams p);

/// The reference geometry for surface-gravity extraction at a given kappa:
/// x in [0, 18/kappa), n = 2^22, k0 = 75 e^9 kappa, so the local wavenumber
/// sweeps from ~75*kappa at the grid midpoint down through the fit band.
HorizonParams scan_params(double kappa, std::size_t n = std::size_t{1} << 22);

/// Integrates d(ln k)/dx = -kappa with a classical 4th-order one-step method
/// from k(0)=k0 across the grid. Deviation from k0 e^{-kappa x} stays below
/// 1e-8 relative.
std::vector<double> solve_boundary_ode(const HorizonParams& params);

/// The boundary wave exp(-i A e^{-kappa x}), A = k0/kappa: unit modulus,
/// local wavenumber k0 e^{-kappa x}.
Field chirped_wave(const HorizonParams& params);

/// Unwraps the phase and returns its central-difference derivative. Throws
/// on zero samples or phase jumps above pi per cell.
std::vector<double> local_wavenumber(const Field& psi);

/// Positive/negative-frequency powers of the regulated transform and the
/// least-squares surface-gravity fit of ln(P-/P+) = -(2 pi/kappa_fit) omega.
struct SpectrumReport {
  std::vector<double> omega;      // > 0, uniform spacing kappa/16
  std::vector<double> power_pos;  // |F(+omega)|^2
  std::vector<double> power_neg;  // |F(-omega)|^2
  std::vector<double> log_ratio;  // ln(power_neg/power_pos)
  double kappa_fit = 0.0;
  double fit_window_lo = 0.0;
  double fit_window_hi = 0.0;
  double fit_residual = 0.0;      // rms fit residual / fitted range
};

/// F(omega) = sum psi(x) e^{-i omega x} e^{-eps|x - x_ref|} w(x) * spacing,
/// x_ref = grid midpoint, for omega = j*kappa/16 up to 3.25*kappa; fit over
/// [0.5*kappa, 3*kappa]. Throws NumericalError when the fit is degenerate
/// (fewer than 4 window points, or window power at the round-off floor).
SpectrumReport thermal_spectrum(const Field& psi, const HorizonParams& params);

struct ScanRow {
  double kappa = 0.0;
  double kappa_fit = 0.0;
  double rel_err = 0.0;
};

/// chirped_wave -> thermal_spectrum per kappa on the reference geometry
/// scaled to each kappa (template supplies n, epsilon factor and window).
/// Failures propagate with the kappa value attached.
std::vector<ScanRow> surface_gravity_scan(const std::vector<double>& kappas,
                                          const HorizonParams& params_template);

}  // namespace dualwave
