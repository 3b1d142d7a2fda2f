#include "dualwave/bridge.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

#include "dualwave/fft.hpp"
#include "dualwave/parallel.hpp"

namespace dualwave {

void validate(const MapConvention& conv) {
  if (conv.forward_sign_space != +1 || conv.forward_sign_time != -1)
    throw ValidationError(
        "map convention: forward kernel is fixed to e^{+ikx}, e^{-iEt/hbar} "
        "(forward_sign_space=+1, forward_sign_time=-1)");
}

void axis_transform(std::vector<cplx>& samples, const Grid& grid, int axis,
                    const AxisSpec& out_axis, int sign, double scale) {
  const AxisSpec& in = grid.axis(axis);
  const std::size_t n = in.n;
  if (out_axis.n != n)
    throw ValidationError("axis_transform: dual axis size mismatch");
  const double dv_expect =
      2.0 * std::numbers::pi * scale / (static_cast<double>(n) * in.spacing);
  if (std::abs(out_axis.spacing - dv_expect) >
      1e-12 * std::abs(dv_expect))
    throw ValidationError("axis_transform: dual spacing does not match "
                          "2*pi*scale/(n*spacing)");

  const double s = sign >= 0 ? 1.0 : -1.0;
  // pre-phase  Q_b = e^{i s v0 (b du) / scale}
  // post-phase P_a = e^{i s u0 v_a / scale}, scaled by sqrt(du/dv)
  std::vector<cplx> pre(n), post(n);
  const double amp = std::sqrt(in.spacing / out_axis.spacing);
  for (std::size_t b = 0; b < n; ++b)
    pre[b] = std::polar(
        1.0, s * out_axis.origin * (static_cast<double>(b) * in.spacing) / scale);
  for (std::size_t a = 0; a < n; ++a) {
    const double va = out_axis.origin + static_cast<double>(a) * out_axis.spacing;
    post[a] = std::polar(amp, s * in.origin * va / scale);
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));

  // rows along the other axis transform independently; each row is handled
  // start-to-end by one worker (bit-reproducible for any thread count)
  const std::size_t rows = grid.axes() == 2 ? grid.axis(1 - axis).n : 1;
  const std::size_t stride = (grid.axes() == 2 && axis == 0) ? grid.axis(1).n : 1;

  cplx* base = samples.data();
  parallel_for(rows, [&](std::size_t r) {
    std::vector<cplx> buf(n);
    if (stride == 1) {
      cplx* row = base + r * n;
      for (std::size_t b = 0; b < n; ++b) buf[b] = row[b] * pre[b];
      fft_radix2(buf.data(), n, sign);
      for (std::size_t a = 0; a < n; ++a) row[a] = buf[a] * post[a] * norm;
    } else {
      cplx* col = base + r;
      for (std::size_t b = 0; b < n; ++b) buf[b] = col[b * stride] * pre[b];
      fft_radix2(buf.data(), n, sign);
      for (std::size_t a = 0; a < n; ++a) col[a * stride] = buf[a] * post[a] * norm;
    }
  });
}

static void require_centered(const AxisSpec& ax, const char* name) {
  const double want = -static_cast<double>(ax.n / 2) * ax.spacing;
  const double tol = 1e-12 * static_cast<double>(ax.n) * ax.spacing;
  if (std::abs(ax.origin - want) > tol)
    throw ValidationError(std::string("grid axes mismatch with convention: ") +
                          name + " axis must be centered (origin = -(n/2)*spacing)");
}

// Shared core of the two representation maps. kE->xt applies the kernel
// e^{+ikx} along space and e^{-iEt/hbar} along time; xt->kE the conjugate.
static Field map_sectors(const Field& in, const MapConvention& conv,
                         const PhysParams& p, bool to_xt_dir) {
  validate(in);
  validate(conv);
  validate(p);
  const Sector want_in = to_xt_dir ? Sector::KE : Sector::XT;
  if (in.sector != want_in)
    throw ValidationError("grid axes mismatch with convention: field sector "
                          "does not match map direction");

  const int sign_space = to_xt_dir ? conv.forward_sign_space : -conv.forward_sign_space;
  const int sign_time = to_xt_dir ? conv.forward_sign_time : -conv.forward_sign_time;

  Field out = in;
  require_centered(in.grid.axis(0), "space");
  const AxisSpec dual0 = in.grid.dual_axis(0, 1.0);
  axis_transform(out.samples, in.grid, 0, dual0, sign_space, 1.0);
  if (in.grid.axes() == 2) {
    require_centered(in.grid.axis(1), "time");
    const AxisSpec dual1 = in.grid.dual_axis(1, p.hbar);
    axis_transform(out.samples, in.grid, 1, dual1, sign_time, p.hbar);
    out.grid = Grid(dual0, dual1);
  } else {
    out.grid = Grid(dual0);
  }
  out.sector = to_xt_dir ? Sector::XT : Sector::KE;
  validate(out);
  return out;
}

Field to_xt(const Field& phi, const MapConvention& conv, const PhysParams& p) {
  return map_sectors(phi, conv, p, true);
}

Field to_ke(const Field& psi, const MapConvention& conv, const PhysParams& p) {
  return map_sectors(psi, conv, p, false);
}

// Analyze onto the operator eigenbasis, multiply by the dual coordinate,
// synthesize back. `analysis_sign` is the kernel sign taking the field to
// the diagonal representation.
static Field spectral_coordinate_multiply(const Field& f, int analysis_sign,
                                          double scale) {
  validate(f);
  if (f.grid.axes() != 1)
    throw ValidationError("operator input: expected a 1-D field");
  const AxisSpec dual = f.grid.dual_axis(0, scale);
  Field out = f;
  axis_transform(out.samples, f.grid, 0, dual, analysis_sign, scale);
  for (std::size_t a = 0; a < dual.n; ++a)
    out.samples[a] *= dual.origin + static_cast<double>(a) * dual.spacing;
  Grid dual_grid(dual);
  axis_transform(out.samples, dual_grid, 0, f.grid.axis(0), -analysis_sign, scale);
  validate(out);
  return out;
}

Field apply_X(const Field& phi) {
  // X e^{+ik x0} = x0 e^{+ik x0}: the diagonalizing analysis kernel is e^{-ikx}.
  return spectral_coordinate_multiply(phi, -1, 1.0);
}

Field apply_Tgen(const Field& phi, const PhysParams& p) {
  validate(p);
  // T e^{-iE t0/hbar} = t0 e^{-iE t0/hbar}: analysis kernel is e^{+iEt/hbar}.
  return spectral_coordinate_multiply(phi, +1, p.hbar);
}

HermiticityReport hermiticity_check(
    const std::function<Field(const Field&)>& op, const Grid& grid) {
  const std::size_t n = grid.size();
  if (n > 64)
    throw ValidationError("hermiticity_check: n_points > 64 (dense build guard)");

  Eigen::MatrixXcd m(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    Field e = make_field(Sector::KE, grid);
    e.samples[b] = cplx{1.0, 0.0};
    Field col = op(e);
    for (std::size_t a = 0; a < n; ++a) m(static_cast<Eigen::Index>(a),
                                          static_cast<Eigen::Index>(b)) =
        col.samples[a];
  }

  HermiticityReport rep;
  rep.max_asymmetry = (m - m.adjoint()).cwiseAbs().maxCoeff();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  rep.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + n);
  return rep;
}

}  // namespace dualwave
