#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "dualwave/errors.hpp"

namespace dualwave {

using cplx = std::complex<double>;

/// Which manifold a field lives on. XT axes are (x[,t]); KE axes are (k[,E]).
enum class Sector : int { XT = 0, KE = 1 };

/// One uniform sample axis: coordinate of sample j is origin + j*spacing.
struct AxisSpec {
  std::size_t n = 0;
  double origin = 0.0;
  double spacing = 0.0;
  bool operator==(const AxisSpec&) const = default;
};

/// Uniform 1-D or 2-D lattice. n is a power of two (>= 8) on every axis so
/// the spectral transforms are exact round trips. Samples are row-major:
/// index = i0*n1 + i1.
class Grid {
public:
  Grid() = default;
  explicit Grid(AxisSpec a0);
  Grid(AxisSpec a0, AxisSpec a1);

  int axes() const { return axes_; }
  const AxisSpec& axis(int a) const { return ax_[static_cast<std::size_t>(a)]; }
  std::size_t size() const;
  /// Product of spacings: the Riemann weight of one cell.
  double cell_volume() const;
  /// Extent of the whole lattice, size() * cell_volume().
  double volume() const { return static_cast<double>(size()) * cell_volume(); }
  double coord(int a, std::size_t j) const {
    return axis(a).origin + static_cast<double>(j) * axis(a).spacing;
  }

  /// The derived dual axis: frequencies 2*pi*scale*jt/(n*spacing) for signed
  /// index jt in [-n/2, n/2), stored in monotone order (origin = most
  /// negative frequency). scale is 1 for x<->k and hbar for t<->E.
  AxisSpec dual_axis(int a, double scale = 1.0) const;

  bool operator==(const Grid&) const = default;

private:
  int axes_ = 0;
  std::array<AxisSpec, 2> ax_{};
};

/// Validating constructors; errors name the offending field.
Grid make_grid(std::size_t n, double origin, double spacing);
Grid make_grid_2d(std::size_t n0, double origin0, double spacing0,
                  std::size_t n1, double origin1, double spacing1);

/// Complex samples on a Grid, tagged with the sector they live on.
struct Field {
  Sector sector = Sector::XT;
  Grid grid;
  std::vector<cplx> samples;
  std::string label;
};

Field make_field(Sector sector, const Grid& grid, std::string label = {});

/// Throws ValidationError if the sample count mismatches the grid or any
/// entry is non-finite.
void validate(const Field& f);

/// Discrete L2 norm squared with Riemann weight: sum |f|^2 * cell_volume.
double norm2(const Field& f);

/// Inner product, conjugate-linear in the first argument; same weight as
/// norm2. Throws on grid or sector mismatch.
cplx inner(const Field& f, const Field& g);

struct PhysParams {
  double hbar = 1.0;
};

void validate(const PhysParams& p);

}  // namespace dualwave
