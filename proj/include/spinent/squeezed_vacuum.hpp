#pragma once

#include "spinent/entangle.hpp"
#include "spinent/spin_algebra.hpp"

namespace spinent {

/// Parameters of the squeezed-vacuum-driven state
///   |Psi_m> = A_m e^{xi J_z} e^{-i (pi/2) J_y} |j,m>,   j = N/2.
struct SqueezedVacuumParams {
  int n_atoms = 0;  // N
  int two_m = 0;    // Dicke label of the seed state, doubled
  double xi = 0.0;  // radiation field parameter, >= 0
};

/// Throws std::invalid_argument on |m| > j, parity mismatch, or xi < 0.
void validate(const SqueezedVacuumParams& params);

/// Dense construction: amplitudes A_m e^{xi m'} d^j_{m'm}(pi/2) assembled in
/// sign-tracked log space and exponentiated after subtracting the peak
/// log-magnitude, then normalized.
CollectiveState build_state(const SqueezedVacuumParams& params);

/// All nine moment entries from the closed forms alone (no dense matrices):
/// <J_x> = m/cosh xi, <J_z> = (1/2Delta) dDelta/dxi, and so on through the
/// Gamma/Delta series ratio.
MomentTable closed_form_moments(const SqueezedVacuumParams& params);

/// Full report from series quantities only.  Throws DegenerateFrame for
/// m = 0 with xi = 0 (mean spin vanishes there).
EntanglementReport closed_form_report(const SqueezedVacuumParams& params);

/// ||(J_x cosh xi + i J_y sinh xi)|Psi_m> - m|Psi_m>|| with dense operators;
/// the eigenrelation residual is analytically zero.
double lambda_residual(const SqueezedVacuumParams& params);

}  // namespace spinent
