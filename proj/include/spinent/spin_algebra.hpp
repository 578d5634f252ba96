#pragma once

#include <Eigen/Dense>
#include <complex>

namespace spinent {

/// Collective angular-momentum sector for N two-level atoms: j = N/2,
/// dimension 2j+1.  Quantum numbers are stored doubled (2j, 2m) so
/// half-integer values stay exact.  Basis labels run m = -j .. +j ascending.
struct SpinSector {
  int two_j = 0;

  int dim() const { return two_j + 1; }
  int n_atoms() const { return two_j; }
  /// Dicke label 2m of basis index i (i = 0 is m = -j).
  int two_m_of(int index) const { return 2 * index - two_j; }
  /// Basis index of Dicke label 2m.
  int index_of(int two_m) const { return (two_m + two_j) / 2; }

  friend bool operator==(const SpinSector&, const SpinSector&) = default;
};

SpinSector make_sector(int n_atoms);  // throws for n_atoms < 1

/// Normalized amplitude vector c_m over the Dicke basis |j,m>.
struct CollectiveState {
  SpinSector sector;
  Eigen::VectorXcd amplitudes;
};

struct SpinOperator {
  SpinSector sector;
  Eigen::MatrixXcd matrix;
};

SpinOperator build_jz(const SpinSector& sector);
SpinOperator build_jplus(const SpinSector& sector);
SpinOperator build_jminus(const SpinSector& sector);
SpinOperator build_jx(const SpinSector& sector);
SpinOperator build_jy(const SpinSector& sector);
SpinOperator build_jsq(const SpinSector& sector);

/// <state|op|state>.  Throws on sector mismatch.
std::complex<double> expectation(const CollectiveState& state,
                                 const SpinOperator& op);

/// First moments and symmetrized second moments of the collective spin.
struct MomentTable {
  double jx = 0, jy = 0, jz = 0;
  double jx2 = 0, jy2 = 0, jz2 = 0;
  double xy_sym = 0, xz_sym = 0, yz_sym = 0;  // <J_a J_b + J_b J_a>
};

/// All nine entries by dense matrix-vector products.
MomentTable moments(const CollectiveState& state);

/// Rotation about y by beta: c'_{m'} = sum_m d^j_{m'm}(beta) c_m.
CollectiveState rotate_y(const CollectiveState& state, double beta);

/// Basis state |j,m>.
CollectiveState dicke_state(const SpinSector& sector, int two_m);

/// Coherent spin state with mean spin along (theta, phi); the product state
/// of N identically oriented atoms.
CollectiveState coherent_state(const SpinSector& sector, double theta,
                               double phi);

}  // namespace spinent
