#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dualwave/grid.hpp"

namespace dualwave {

/// Sign and normalization conventions of the representation map between the
/// sectors. The kE -> xt kernel is e^{+ikx} along space and e^{-iEt/hbar}
/// along time; normalization is symmetric, realized discretely so that the
/// round trip is the identity and Parseval holds exactly.
struct MapConvention {
  int forward_sign_space = +1;
  int forward_sign_time = -1;
};

void validate(const MapConvention& conv);

/// Unitary transform along one axis of a field with physical-coordinate
/// phases:
///   out(v_a) = sqrt(du/dv) * (1/sqrt(n)) * sum_b in(u_b) e^{i*sign*u_b*v_a/scale}
/// where v_a = out_origin + a*dv and dv = 2*pi*scale/(n*du). The inverse is
/// the same call with the axes swapped and the sign flipped. Operates on raw
/// sample vectors; `axis` indexes the grid axis, rows along the other axis
/// are transformed independently (in parallel).
void axis_transform(std::vector<cplx>& samples, const Grid& grid, int axis,
                    const AxisSpec& out_axis, int sign, double scale);

/// Representation map kE -> xt. 2-D fields transform both axes; 1-D fields
/// are treated as k-only (space axis). The output lives on the centered dual
/// grid. Requires centered axes (origin = -(n/2)*spacing) so that the map is
/// its own inverse; anything else is a convention mismatch.
Field to_xt(const Field& phi, const MapConvention& conv, const PhysParams& p);

/// Representation map xt -> kE; exact inverse of to_xt.
Field to_ke(const Field& psi, const MapConvention& conv, const PhysParams& p);

/// X = -i d/dk realized spectrally: analyze onto the e^{+ikx} eigenbasis,
/// multiply by the dual coordinate, synthesize back. Exact on band-limited
/// fields. Input: 1-D field along k.
Field apply_X(const Field& phi);

/// The E-translation generator i*hbar d/dE: same construction on the
/// e^{-iEt/hbar} eigenbasis. Input: 1-D field along E.
Field apply_Tgen(const Field& phi, const PhysParams& p);

/// Result of densifying an operator on a small grid.
struct HermiticityReport {
  double max_asymmetry = 0.0;            // max |M - M^dagger|
  std::vector<cplx> eigenvalues;         // spectrum of the dense matrix
};

/// Builds the dense matrix of `op` by applying it to the canonical basis on
/// `grid` (n <= 64), and reports max |M - M^dagger| plus the eigenvalue
/// spectrum of M.
HermiticityReport hermiticity_check(
    const std::function<Field(const Field&)>& op, const Grid& grid);

}  // namespace dualwave
