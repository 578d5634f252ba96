#include "spinent/product_oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace spinent {

namespace {

using std::complex;

enum Axis { kX = 0, kY = 1, kZ = 2 };

// Apply J_{i,a} = (1/2) sigma_a on slot i.  Basis: bit 0 means m_i = +1/2.
Eigen::VectorXcd apply_single(const ProductSpaceState& state, int atom,
                              Axis axis) {
  const int dim = 1 << state.n_atoms;
  const int mask = 1 << atom;
  Eigen::VectorXcd out(dim);
  for (int b = 0; b < dim; ++b) {
    const bool down = (b & mask) != 0;
    switch (axis) {
      case kX:
        out(b) = 0.5 * state.amplitudes(b ^ mask);
        break;
      case kY:
        // <b|J_y|b^mask>: +i/2 entering a down state, -i/2 entering an up one
        out(b) = complex<double>(0.0, down ? 0.5 : -0.5) *
                 state.amplitudes(b ^ mask);
        break;
      case kZ:
        out(b) = (down ? -0.5 : 0.5) * state.amplitudes(b);
        break;
    }
  }
  return out;
}

struct AtomVectors {
  // j_psi[i][a] = J_{i,a} |psi>
  std::vector<std::array<Eigen::VectorXcd, 3>> j_psi;
  std::vector<std::array<double, 3>> first;  // <J_{i,a}>

  explicit AtomVectors(const ProductSpaceState& state) {
    j_psi.resize(state.n_atoms);
    first.resize(state.n_atoms);
    for (int i = 0; i < state.n_atoms; ++i)
      for (int a = 0; a < 3; ++a) {
        j_psi[i][a] = apply_single(state, i, Axis(a));
        first[i][a] = state.amplitudes.dot(j_psi[i][a]).real();
      }
  }

  // <J_{i,a} J_{l,b}> for i != l (commuting factors)
  double second(int i, Axis a, int l, Axis b) const {
    return j_psi[i][a].dot(j_psi[l][b]).real();
  }

  double cov(int i, Axis a, int l, Axis b) const {
    return second(i, a, l, b) - first[i][a] * first[l][b];
  }
};

void check_product_state(const ProductSpaceState& state) {
  if (state.n_atoms < 1 || state.n_atoms > kMaxProductAtoms)
    throw std::invalid_argument("product oracle: need 1 <= n_atoms <= 4");
  if (state.amplitudes.size() != (1 << state.n_atoms))
    throw std::invalid_argument("product oracle: bad amplitude length");
}

}  // namespace

ProductSpaceState embed_symmetric(const CollectiveState& state) {
  const int n = state.sector.n_atoms();
  if (n > kMaxProductAtoms)
    throw std::invalid_argument("embed_symmetric: n_atoms > 4");
  const int dim = 1 << n;

  // C(n, r) for r = 0..4 fits comfortably in a small table
  auto binom = [](int nn, int r) {
    double v = 1.0;
    for (int k = 0; k < r; ++k) v = v * (nn - k) / (k + 1);
    return v;
  };

  ProductSpaceState out;
  out.n_atoms = n;
  out.amplitudes.resize(dim);
  for (int b = 0; b < dim; ++b) {
    const int downs = __builtin_popcount(unsigned(b));
    const int collective_index = n - downs;  // j + m
    out.amplitudes(b) =
        state.amplitudes(collective_index) / std::sqrt(binom(n, downs));
  }
  return out;
}

std::pair<double, double> pairwise_corr(const ProductSpaceState& state,
                                        const FrameAngles& angles) {
  check_product_state(state);
  const AtomVectors av(state);
  const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
  const double cp = std::cos(angles.phi), sp = std::sin(angles.phi);

  double corr_x = 0.0, corr_y = 0.0;
  for (int i = 0; i < state.n_atoms; ++i)
    for (int l = 0; l < state.n_atoms; ++l) {
      if (i == l) continue;
      const double cxx = av.cov(i, kX, l, kX);
      const double cyy = av.cov(i, kY, l, kY);
      const double czz = av.cov(i, kZ, l, kZ);
      const double cxy = av.cov(i, kX, l, kY);
      const double cxz = av.cov(i, kX, l, kZ);
      const double cyz = av.cov(i, kY, l, kZ);
      corr_x += cxx * ct * ct * cp * cp + cyy * ct * ct * sp * sp +
                czz * st * st + 2.0 * cxy * ct * ct * sp * cp -
                2.0 * cxz * st * ct * cp - 2.0 * cyz * st * ct * sp;
      corr_y += cxx * sp * sp + cyy * cp * cp - 2.0 * cxy * sp * cp;
    }
  return {corr_x, corr_y};
}

std::vector<std::pair<double, double>> individual_rotated_variances(
    const ProductSpaceState& state, const FrameAngles& angles) {
  check_product_state(state);
  const AtomVectors av(state);
  const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
  const double cp = std::cos(angles.phi), sp = std::sin(angles.phi);

  std::vector<std::pair<double, double>> out;
  out.reserve(state.n_atoms);
  for (int i = 0; i < state.n_atoms; ++i) {
    const double vx = av.j_psi[i][kX].squaredNorm() -
                      av.first[i][kX] * av.first[i][kX];
    const double vy = av.j_psi[i][kY].squaredNorm() -
                      av.first[i][kY] * av.first[i][kY];
    const double vz = av.j_psi[i][kZ].squaredNorm() -
                      av.first[i][kZ] * av.first[i][kZ];
    const double sxy = 2.0 * av.j_psi[i][kX].dot(av.j_psi[i][kY]).real() -
                       2.0 * av.first[i][kX] * av.first[i][kY];
    const double sxz = 2.0 * av.j_psi[i][kX].dot(av.j_psi[i][kZ]).real() -
                       2.0 * av.first[i][kX] * av.first[i][kZ];
    const double syz = 2.0 * av.j_psi[i][kY].dot(av.j_psi[i][kZ]).real() -
                       2.0 * av.first[i][kY] * av.first[i][kZ];
    const double var_xp = vx * ct * ct * cp * cp + vy * ct * ct * sp * sp +
                          vz * st * st + sxy * ct * ct * sp * cp -
                          sxz * st * ct * cp - syz * st * ct * sp;
    const double var_yp = vx * sp * sp + vy * cp * cp - sxy * sp * cp;
    out.emplace_back(var_xp, var_yp);
  }
  return out;
}

double separability_residual(const ProductSpaceState& state) {
  check_product_state(state);
  const AtomVectors av(state);
  static constexpr std::array<std::pair<Axis, Axis>, 6> kTypes{
      {{kX, kX}, {kY, kY}, {kZ, kZ}, {kX, kY}, {kX, kZ}, {kY, kZ}}};
  double worst = 0.0;
  for (int i = 0; i < state.n_atoms; ++i)
    for (int l = 0; l < state.n_atoms; ++l) {
      if (i == l) continue;
      for (auto [a, b] : kTypes)
        worst = std::max(worst, std::fabs(av.cov(i, a, l, b)));
    }
  return worst;
}

}  // namespace spinent
