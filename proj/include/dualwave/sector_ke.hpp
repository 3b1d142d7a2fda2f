#pragma once

#include "dualwave/grid.hpp"

namespace dualwave {

/// Conjugate-sector generator data: T = alpha*X^2 + beta*X^4 + V0 and the
/// E step size. alpha sets the stiffness of the E-evolution; beta is the
/// quartic dispersive correction (default 0).
struct KeParams {
  double alpha = 0.0;
  double v0 = 0.0;
  double beta = 0.0;
  double dE = 0.0;
  double hbar = 1.0;
};

void validate(const KeParams& p);

/// Unitary E-evolution of a 1-D field along k. The generator is a function
/// of X alone, hence diagonal in the X eigenbasis: one transform, one phase
/// multiplication by e^{-i(alpha x^2 + beta x^4 + v0) n dE / hbar}, one
/// transform back. Steps compose exactly (group law). n_steps == 0 returns
/// the input unchanged.
Field evolve_ke(const Field& phi0, const KeParams& params, std::size_t n_steps);

/// max |evolve(phi, n1+n2) - evolve(evolve(phi, n1), n2)| -- the group-law
/// deviation, expected at round-off level.
double group_law_check(const Field& phi0, const KeParams& params,
                       std::size_t n1, std::size_t n2);

/// Central-difference E-derivative of the propagated field at E=0 compared
/// against -(i/hbar) T phi0 built from apply_X. Returns the relative L2
/// residual, expected O(dE^2).
double generator_consistency(const Field& phi0, const KeParams& params);

}  // namespace dualwave
