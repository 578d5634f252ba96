#include "spinent/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "spinent/wigner.hpp"

namespace spinent {

namespace {

using std::complex;

void check_sector(const SpinSector& sector) {
  if (sector.two_j < 1) throw std::invalid_argument("empty spin sector");
}

double ladder_element(int two_j, int two_m) {
  // sqrt(j(j+1) - m(m+1)), the J+ amplitude from |j,m> to |j,m+1>
  const double j = 0.5 * two_j;
  const double m = 0.5 * two_m;
  return std::sqrt(j * (j + 1.0) - m * (m + 1.0));
}

}  // namespace

SpinSector make_sector(int n_atoms) {
  if (n_atoms < 1) throw std::invalid_argument("make_sector: need n_atoms >= 1");
  return SpinSector{n_atoms};
}

SpinOperator build_jz(const SpinSector& sector) {
  check_sector(sector);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(sector.dim(), sector.dim());
  for (int i = 0; i < sector.dim(); ++i) m(i, i) = 0.5 * sector.two_m_of(i);
  return {sector, std::move(m)};
}

SpinOperator build_jplus(const SpinSector& sector) {
  check_sector(sector);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(sector.dim(), sector.dim());
  for (int i = 0; i + 1 < sector.dim(); ++i)
    m(i + 1, i) = ladder_element(sector.two_j, sector.two_m_of(i));
  return {sector, std::move(m)};
}

SpinOperator build_jminus(const SpinSector& sector) {
  SpinOperator jp = build_jplus(sector);
  return {sector, jp.matrix.adjoint()};
}

SpinOperator build_jx(const SpinSector& sector) {
  SpinOperator jp = build_jplus(sector);
  Eigen::MatrixXcd m = 0.5 * (jp.matrix + jp.matrix.adjoint().eval());
  return {sector, std::move(m)};
}

SpinOperator build_jy(const SpinSector& sector) {
  SpinOperator jp = build_jplus(sector);
  const complex<double> inv_2i(0.0, -0.5);  // 1/(2i)
  Eigen::MatrixXcd m = inv_2i * (jp.matrix - jp.matrix.adjoint().eval());
  return {sector, std::move(m)};
}

SpinOperator build_jsq(const SpinSector& sector) {
  SpinOperator jx = build_jx(sector), jy = build_jy(sector), jz = build_jz(sector);
  Eigen::MatrixXcd m =
      jx.matrix * jx.matrix + jy.matrix * jy.matrix + jz.matrix * jz.matrix;
  return {sector, std::move(m)};
}

std::complex<double> expectation(const CollectiveState& state,
                                 const SpinOperator& op) {
  if (state.sector != op.sector)
    throw std::invalid_argument("expectation: sector mismatch");
  return state.amplitudes.dot(op.matrix * state.amplitudes);
}

MomentTable moments(const CollectiveState& state) {
  check_sector(state.sector);
  const Eigen::VectorXcd& psi = state.amplitudes;
  const Eigen::VectorXcd ax = build_jx(state.sector).matrix * psi;
  const Eigen::VectorXcd ay = build_jy(state.sector).matrix * psi;
  const Eigen::VectorXcd az = build_jz(state.sector).matrix * psi;

  MomentTable t;
  t.jx = psi.dot(ax).real();
  t.jy = psi.dot(ay).real();
  t.jz = psi.dot(az).real();
  t.jx2 = ax.squaredNorm();
  t.jy2 = ay.squaredNorm();
  t.jz2 = az.squaredNorm();
  t.xy_sym = 2.0 * ax.dot(ay).real();
  t.xz_sym = 2.0 * ax.dot(az).real();
  t.yz_sym = 2.0 * ay.dot(az).real();
  return t;
}

CollectiveState rotate_y(const CollectiveState& state, double beta) {
  check_sector(state.sector);
  const Eigen::MatrixXd d = wigner_d_matrix(state.sector.two_j, beta);
  Eigen::VectorXcd rotated =
      (d * state.amplitudes.real()).cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) *
          (d * state.amplitudes.imag()).cast<std::complex<double>>();
  return {state.sector, std::move(rotated)};
}

CollectiveState dicke_state(const SpinSector& sector, int two_m) {
  check_sector(sector);
  if (std::abs(two_m) > sector.two_j || ((two_m ^ sector.two_j) & 1))
    throw std::invalid_argument("dicke_state: invalid 2m");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(sector.dim());
  amps(sector.index_of(two_m)) = 1.0;
  return {sector, std::move(amps)};
}

CollectiveState coherent_state(const SpinSector& sector, double theta,
                               double phi) {
  check_sector(sector);
  // c_m = sqrt(C(2j, j-m)) cos(theta/2)^{j+m} sin(theta/2)^{j-m} e^{i(j-m)phi},
  // built in log space so large-N binomials stay finite.
  const int two_j = sector.two_j;
  const double lc = std::log(std::fabs(std::cos(0.5 * theta)));
  const double ls = std::log(std::fabs(std::sin(0.5 * theta)));
  const int csign = std::cos(0.5 * theta) < 0.0 ? -1 : 1;
  const int ssign = std::sin(0.5 * theta) < 0.0 ? -1 : 1;

  Eigen::VectorXcd amps(sector.dim());
  for (int i = 0; i < sector.dim(); ++i) {
    const int jpm = i;            // j + m
    const int jmm = two_j - i;    // j - m
    const double lbinom = 0.5 * (log_factorial(two_j) - log_factorial(jpm) -
                                 log_factorial(jmm));
    if ((jpm > 0 && std::cos(0.5 * theta) == 0.0) ||
        (jmm > 0 && std::sin(0.5 * theta) == 0.0)) {
      amps(i) = 0.0;
      continue;
    }
    const double lmag =
        lbinom + (jpm > 0 ? jpm * lc : 0.0) + (jmm > 0 ? jmm * ls : 0.0);
    double sgn = 1.0;
    if ((jpm & 1) && csign < 0) sgn = -sgn;
    if ((jmm & 1) && ssign < 0) sgn = -sgn;
    amps(i) = sgn * std::exp(lmag) *
              std::exp(std::complex<double>(0.0, jmm * phi));
  }
  amps.normalize();
  return {sector, std::move(amps)};
}

}  // namespace spinent
