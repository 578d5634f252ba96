#pragma once

#include <Eigen/Dense>

#include "spinent/log_scaled.hpp"

namespace spinent {

// Angular-momentum quantum numbers are passed as doubled integers (2j, 2m)
// so half-integer spins stay exact.

/// ln(n!) -- exact table for n <= 20, log-gamma beyond.
double log_factorial(int n);

/// Reduced rotation matrix element d^j_{m'm}(beta) = <j,m'|exp(-i beta J_y)|j,m>.
/// Evaluated as the finite k-sum over half-angle powers, each term carried in
/// log space with sign tracking and accumulated in a widened register so the
/// alternating sum survives the ~1e14-fold cancellation that occurs by j = 50.
/// Throws std::invalid_argument on quantum-number violations.
double wigner_d(int two_j, int two_mp, int two_m, double beta);

/// Full (2j+1)x(2j+1) matrix, rows m' and columns m ordered -j..+j.
Eigen::MatrixXd wigner_d_matrix(int two_j, double beta);

/// The series Delta = d^j_{mm}(2 i xi) together with the auxiliary series
/// eta, Gamma = 2j Delta + 2 eta / cosh^2 xi, and the first two xi-derivatives
/// of Delta.  All series terms are nonnegative, so plain log-sum-exp in
/// double precision is exact enough here; values are reported as LogScaled
/// because Delta itself reaches cosh^{2j} xi ~ e^{230} at desk scale.
struct SeriesBundle {
  LogScaled delta;
  LogScaled eta;
  LogScaled gamma;
  LogScaled d_delta;    // d Delta / d xi = tanh(xi) * Gamma
  LogScaled d2_delta;   // d^2 Delta / d xi^2
  double gamma_over_delta = 0.0;  // finite at desk scale
};

/// Evaluate the bundle at (j, m, xi).  Negative xi is folded to |xi|
/// (every series is even in xi).  xi = 0 takes the exact short-circuit
/// Delta = 1, eta = j^2 - m^2, dDelta/dxi = 0.
SeriesBundle series_bundle(int two_j, int two_m, double xi);

/// Self-test of the addition-theorem identity
///   sum_{m'} e^{2 xi m'} d^j_{m'm}(pi/2)^2 = Delta,
/// both sides in log space.  Returns the relative discrepancy.
double delta_consistency(int two_j, int two_m, double xi);

}  // namespace spinent
