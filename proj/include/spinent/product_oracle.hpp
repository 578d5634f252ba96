#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "spinent/entangle.hpp"
#include "spinent/spin_algebra.hpp"

namespace spinent {

/// Full 2^N tensor-product state for N <= 4 atoms.  Basis index b is read
/// bitwise: bit i is atom i, 0 for m_i = +1/2, 1 for m_i = -1/2.
struct ProductSpaceState {
  int n_atoms = 0;
  Eigen::VectorXcd amplitudes;
};

inline constexpr int kMaxProductAtoms = 4;

/// Distribute each Dicke amplitude c_m equally over the C(N, j-m) bitstrings
/// with j-m down spins, each receiving c_m / sqrt(C(N, j-m)).
ProductSpaceState embed_symmetric(const CollectiveState& state);

/// The pure pairwise-correlation content of the rotated-frame fluctuations:
/// the double-summation terms over ordered atom pairs with the frame's
/// trigonometric weights.  Frame angles come from the collective pipeline.
std::pair<double, double> pairwise_corr(const ProductSpaceState& state,
                                        const FrameAngles& angles);

/// Per-atom rotated variances (Delta J_{i,x'}^2, Delta J_{i,y'}^2); each is
/// 1/4 for symmetric states.
std::vector<std::pair<double, double>> individual_rotated_variances(
    const ProductSpaceState& state, const FrameAngles& angles);

/// Max over all ordered pairs and the six covariance types of
/// |<J_{i,a} J_{l,b}> - <J_{i,a}><J_{l,b}>|; zero for product states.
double separability_residual(const ProductSpaceState& state);

}  // namespace spinent
