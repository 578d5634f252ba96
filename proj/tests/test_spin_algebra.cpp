#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "spinent/spin_algebra.hpp"
#include "spinent/wigner.hpp"

using namespace spinent;

namespace {

constexpr double kPi = 3.14159265358979323846;

CollectiveState random_state(const SpinSector& sector, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd amps(sector.dim());
  for (int i = 0; i < sector.dim(); ++i)
    amps(i) = std::complex<double>(gauss(rng), gauss(rng));
  amps.normalize();
  return {sector, amps};
}

// Independent rotation route: exp(-i beta J_y) through the eigendecomposition
// of the Hermitian J_y.  Lives only here, never in production code.
CollectiveState rotate_y_by_expm(const CollectiveState& state, double beta) {
  const Eigen::MatrixXcd jy = build_jy(state.sector).matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jy);
  const Eigen::VectorXcd phases =
      (std::complex<double>(0.0, -beta) * es.eigenvalues().cast<std::complex<double>>())
          .array()
          .exp();
  const Eigen::MatrixXcd rot = es.eigenvectors() * phases.asDiagonal() *
                               es.eigenvectors().adjoint();
  return {state.sector, rot * state.amplitudes};
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("make_sector dimensions") {
  CHECK(make_sector(100).dim() == 101);
  CHECK(make_sector(2).dim() == 3);
  CHECK(make_sector(1).dim() == 2);
  CHECK(make_sector(5).n_atoms() == 5);
  CHECK_THROWS_AS(make_sector(0), std::invalid_argument);
  CHECK_THROWS_AS(make_sector(-3), std::invalid_argument);
}

TEST_CASE("J_z is diagonal with entries m") {
  const SpinSector sector = make_sector(1);
  const Eigen::MatrixXcd jz = build_jz(sector).matrix;
  CHECK(jz(0, 0).real() == -0.5);
  CHECK(jz(1, 1).real() == 0.5);
  CHECK(std::abs(jz(0, 1)) == 0.0);

  const SpinSector big = make_sector(7);
  for (int i = 0; i < big.dim(); ++i)
    CHECK(build_jz(big).matrix(i, i).real() ==
          doctest::Approx(0.5 * big.two_m_of(i)));
}

TEST_CASE("commutators and Casimir for j up to 50") {
  const std::complex<double> iu(0.0, 1.0);
  for (int n : {1, 2, 5, 17, 100}) {
    const SpinSector sector = make_sector(n);
    const Eigen::MatrixXcd jx = build_jx(sector).matrix;
    const Eigen::MatrixXcd jy = build_jy(sector).matrix;
    const Eigen::MatrixXcd jz = build_jz(sector).matrix;
    CAPTURE(n);
    CHECK(max_abs(jx * jy - jy * jx - iu * jz) < 1e-12);
    CHECK(max_abs(jy * jz - jz * jy - iu * jx) < 1e-12);
    CHECK(max_abs(jz * jx - jx * jz - iu * jy) < 1e-12);

    const double jj = 0.25 * n * (n + 2.0);
    const Eigen::MatrixXcd jsq = build_jsq(sector).matrix;
    CHECK(max_abs(jsq - jj * Eigen::MatrixXcd::Identity(sector.dim(),
                                                        sector.dim())) < 1e-10);
  }
}

TEST_CASE("hermiticity of the generators") {
  const SpinSector sector = make_sector(9);
  for (const auto& op : {build_jx(sector), build_jy(sector), build_jz(sector)})
    CHECK(max_abs(op.matrix - op.matrix.adjoint().eval()) < 1e-14);
  const Eigen::MatrixXcd ladder_diff =
      build_jplus(sector).matrix - build_jminus(sector).matrix;
  CHECK(max_abs(ladder_diff + ladder_diff.adjoint().eval()) < 1e-14);
}

TEST_CASE("expectation values on basis states") {
  const SpinSector sector = make_sector(8);
  const CollectiveState top = dicke_state(sector, 8);
  CHECK(expectation(top, build_jz(sector)).real() == doctest::Approx(4.0));
  for (int two_m = -8; two_m <= 8; two_m += 2) {
    const CollectiveState st = dicke_state(sector, two_m);
    CHECK(std::abs(expectation(st, build_jx(sector))) < 1e-14);
    CHECK(std::abs(expectation(st, build_jz(sector)).imag()) < 1e-12);
  }

  const SpinSector half = make_sector(1);
  CollectiveState plus{half, Eigen::Vector2cd(1.0, 1.0) / std::sqrt(2.0)};
  CHECK(expectation(plus, build_jx(half)).real() == doctest::Approx(0.5));

  CHECK_THROWS_AS(expectation(top, build_jx(half)), std::invalid_argument);
}

TEST_CASE("moments of Dicke states") {
  const SpinSector sector = make_sector(11);
  const double jj = 0.25 * 11 * 13.0;
  for (int two_m = -11; two_m <= 11; two_m += 2) {
    const MomentTable t = moments(dicke_state(sector, two_m));
    const double m = 0.5 * two_m;
    CHECK(t.jz == doctest::Approx(m).epsilon(1e-14));
    CHECK(std::abs(t.jx) < 1e-14);
    CHECK(std::abs(t.jy) < 1e-14);
    CHECK(t.jx2 == doctest::Approx(0.5 * (jj - m * m)).epsilon(1e-13));
    CHECK(t.jy2 == doctest::Approx(0.5 * (jj - m * m)).epsilon(1e-13));
    CHECK(t.jx2 + t.jy2 + t.jz2 == doctest::Approx(jj).epsilon(1e-12));
  }
}

TEST_CASE("pi/2-rotated Dicke state has <J_x> = m") {
  const SpinSector sector = make_sector(100);
  const CollectiveState st = rotate_y(dicke_state(sector, 20), kPi / 2);
  const MomentTable t = moments(st);
  CHECK(t.jx == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(std::abs(t.jy) < 1e-12);
  CHECK(std::abs(t.jz) < 1e-10);
}

TEST_CASE("Casimir identity holds for random states") {
  std::mt19937 rng(11);
  for (int n : {1, 4, 23, 100}) {
    const SpinSector sector = make_sector(n);
    const double jj = 0.25 * n * (n + 2.0);
    for (int rep = 0; rep < 5; ++rep) {
      const MomentTable t = moments(random_state(sector, rng));
      CHECK(t.jx2 + t.jy2 + t.jz2 == doctest::Approx(jj).epsilon(1e-9));
      CHECK(t.jx2 >= t.jx * t.jx - 1e-12);
      CHECK(t.jy2 >= t.jy * t.jy - 1e-12);
      CHECK(t.jz2 >= t.jz * t.jz - 1e-12);
    }
  }
}

TEST_CASE("rotate_y basics") {
  SUBCASE("beta = 0 is the identity") {
    std::mt19937 rng(3);
    const CollectiveState st = random_state(make_sector(6), rng);
    const CollectiveState rot = rotate_y(st, 0.0);
    CHECK((rot.amplitudes - st.amplitudes).norm() == 0.0);
  }

  SUBCASE("j = 1/2 quarter turn lands on the J_x eigenvector") {
    const CollectiveState st = dicke_state(make_sector(1), 1);
    const CollectiveState rot = rotate_y(st, kPi / 2);
    // amplitudes over (m = -1/2, +1/2); both +1/sqrt(2) per the k-sum formula
    CHECK(rot.amplitudes(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(rot.amplitudes(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    const MomentTable t = moments(rot);
    CHECK(t.jx == doctest::Approx(0.5).epsilon(1e-14));
  }

  SUBCASE("pi then -pi returns the state") {
    const SpinSector sector = make_sector(100);
    const CollectiveState st = dicke_state(sector, 100);
    const CollectiveState round = rotate_y(rotate_y(st, kPi), -kPi);
    CHECK((round.amplitudes - st.amplitudes).norm() < 1e-12);
  }

  SUBCASE("norm and Casimir preserved") {
    std::mt19937 rng(5);
    for (int n : {3, 40}) {
      const CollectiveState st = random_state(make_sector(n), rng);
      const CollectiveState rot = rotate_y(st, 1.234);
      CHECK(rot.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
      const MomentTable t = moments(rot);
      CHECK(t.jx2 + t.jy2 + t.jz2 ==
            doctest::Approx(0.25 * n * (n + 2.0)).epsilon(1e-9));
    }
  }
}

TEST_CASE("rotate_y agrees with the matrix-exponential route") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
  for (int n : {1, 4, 9, 40}) {
    const CollectiveState st = random_state(make_sector(n), rng);
    const double beta = angle(rng);
    const CollectiveState a = rotate_y(st, beta);
    const CollectiveState b = rotate_y_by_expm(st, beta);
    CAPTURE(n);
    CAPTURE(beta);
    CHECK((a.amplitudes - b.amplitudes).norm() < 1e-12);
  }
}

TEST_CASE("coherent state points its mean spin along (theta, phi)") {
  const SpinSector sector = make_sector(30);
  const double theta = 1.1, phi = 2.3;
  const MomentTable t = moments(coherent_state(sector, theta, phi));
  const double j = 15.0;
  CHECK(t.jz == doctest::Approx(j * std::cos(theta)).epsilon(1e-12));
  CHECK(t.jx == doctest::Approx(j * std::sin(theta) * std::cos(phi)).epsilon(1e-12));
  CHECK(t.jy == doctest::Approx(j * std::sin(theta) * std::sin(phi)).epsilon(1e-12));
}

TEST_CASE("dicke_state validates its label") {
  CHECK_THROWS_AS(dicke_state(make_sector(4), 6), std::invalid_argument);
  CHECK_THROWS_AS(dicke_state(make_sector(4), 1), std::invalid_argument);
}
