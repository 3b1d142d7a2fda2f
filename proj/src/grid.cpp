#include "dualwave/grid.hpp"

#include <cmath>
#include <numbers>

namespace dualwave {

static bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

static void check_axis(const AxisSpec& a, const char* which) {
  if (a.n < 8 || !is_pow2(a.n))
    throw ValidationError(std::string("n_points (") + which +
                          "): must be a power of two >= 8, got " +
                          std::to_string(a.n));
  if (!(a.spacing > 0.0) || !std::isfinite(a.spacing))
    throw ValidationError(std::string("spacing (") + which +
                          "): must be positive and finite");
  if (!std::isfinite(a.origin))
    throw ValidationError(std::string("origin (") + which + "): must be finite");
}

Grid::Grid(AxisSpec a0) : axes_(1) {
  check_axis(a0, "axis 0");
  ax_[0] = a0;
}

Grid::Grid(AxisSpec a0, AxisSpec a1) : axes_(2) {
  check_axis(a0, "axis 0");
  check_axis(a1, "axis 1");
  ax_[0] = a0;
  ax_[1] = a1;
}

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (int a = 0; a < axes_; ++a) s *= ax_[static_cast<std::size_t>(a)].n;
  return s;
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < axes_; ++a) v *= ax_[static_cast<std::size_t>(a)].spacing;
  return v;
}

AxisSpec Grid::dual_axis(int a, double scale) const {
  const AxisSpec& ax = axis(a);
  const double dv =
      2.0 * std::numbers::pi * scale / (static_cast<double>(ax.n) * ax.spacing);
  return AxisSpec{ax.n, -static_cast<double>(ax.n / 2) * dv, dv};
}

Grid make_grid(std::size_t n, double origin, double spacing) {
  return Grid(AxisSpec{n, origin, spacing});
}

Grid make_grid_2d(std::size_t n0, double origin0, double spacing0,
                  std::size_t n1, double origin1, double spacing1) {
  return Grid(AxisSpec{n0, origin0, spacing0}, AxisSpec{n1, origin1, spacing1});
}

Field make_field(Sector sector, const Grid& grid, std::string label) {
  Field f;
  f.sector = sector;
  f.grid = grid;
  f.samples.assign(grid.size(), cplx{0.0, 0.0});
  f.label = std::move(label);
  return f;
}

void validate(const Field& f) {
  if (f.grid.axes() == 0)
    throw ValidationError("field.grid: uninitialized");
  if (f.samples.size() != f.grid.size())
    throw ValidationError("field.samples: length " +
                          std::to_string(f.samples.size()) +
                          " does not match grid size " +
                          std::to_string(f.grid.size()));
  for (const cplx& z : f.samples)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("field.samples: non-finite entry");
}

double norm2(const Field& f) {
  validate(f);
  double acc = 0.0;
  for (const cplx& z : f.samples) acc += std::norm(z);
  return acc * f.grid.cell_volume();
}

cplx inner(const Field& f, const Field& g) {
  validate(f);
  validate(g);
  if (f.sector != g.sector)
    throw ValidationError("inner: sector mismatch");
  if (!(f.grid == g.grid))
    throw ValidationError("inner: grid mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < f.samples.size(); ++i)
    acc += std::conj(f.samples[i]) * g.samples[i];
  return acc * f.grid.cell_volume();
}

void validate(const PhysParams& p) {
  if (!(p.hbar > 0.0) || !std::isfinite(p.hbar))
    throw ValidationError("hbar: must be positive and finite");
}

}  // namespace dualwave
