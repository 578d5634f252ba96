#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "spinent/squeezed_vacuum.hpp"
#include "spinent/wigner.hpp"

using namespace spinent;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-10});
}

// agreement within 1e-8 relative, with a 1e-10 absolute floor
bool close(double a, double b, double rel = 1e-8, double abs_floor = 1e-10) {
  return std::fabs(a - b) <=
         std::max(rel * std::max(std::fabs(a), std::fabs(b)), abs_floor);
}

std::vector<int> allowed_two_m(int n) {
  std::vector<int> out;
  for (int two_m = -n; two_m <= n; two_m += 2) out.push_back(two_m);
  return out;
}

// a parity-valid label near j/2
int mid_two_m(int n) {
  int v = n / 2;
  if ((v ^ n) & 1) --v;
  return v;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate({100, 102, 0.5}), std::invalid_argument);  // |m| > j
  CHECK_THROWS_AS(validate({100, 15, 0.5}), std::invalid_argument);   // parity
  CHECK_THROWS_AS(validate({100, 20, -0.1}), std::invalid_argument);  // xi < 0
  CHECK_THROWS_AS(validate({0, 0, 0.5}), std::invalid_argument);
  CHECK_NOTHROW(validate({100, 20, 0.0}));
  CHECK_NOTHROW(validate({51, 17, 2.0}));  // half-integer sector
}

TEST_CASE("build_state at xi = 0 is the pi/2-rotated Dicke state") {
  for (int n : {2, 7, 100})
    for (int two_m : {-n, n % 2, n}) {
      const CollectiveState direct = build_state({n, two_m, 0.0});
      const CollectiveState rotated =
          rotate_y(dicke_state(make_sector(n), two_m), kPi / 2);
      CAPTURE(n);
      CAPTURE(two_m);
      CHECK((direct.amplitudes - rotated.amplitudes).norm() < 1e-12);
    }
}

TEST_CASE("build_state stays normalized at large arguments") {
  const CollectiveState st = build_state({100, 20, 3.0});
  CHECK(st.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalization constant recovers Delta") {
  // A_m^{-2} = sum e^{2 xi m'} d^2 must equal the Delta series; the state
  // builder and the series are independent code paths.
  for (int n : {4, 51, 100})
    for (int two_m : {n % 2, n})
      for (double xi : {0.2, 1.0, 3.0}) {
        CAPTURE(n);
        CAPTURE(two_m);
        CAPTURE(xi);
        CHECK(delta_consistency(n, two_m, xi) < 1e-10);
      }
}

TEST_CASE("closed-form moment anchors") {
  SUBCASE("<J_x> = m / cosh xi") {
    const MomentTable t = closed_form_moments({100, 20, 1.0});
    CHECK(t.jx == doctest::Approx(10.0 / std::cosh(1.0)).epsilon(1e-14));
    CHECK(t.jy == 0.0);
    CHECK(t.xy_sym == 0.0);
    CHECK(t.yz_sym == 0.0);
  }
  SUBCASE("<J_z> vanishes at xi = 0") {
    const MomentTable t = closed_form_moments({100, 20, 0.0});
    CHECK(t.jz == 0.0);
    CHECK(t.jx == 10.0);
    CHECK(t.jx2 == doctest::Approx(100.0).epsilon(1e-13));
  }
  SUBCASE("Casimir is exact by construction") {
    for (double xi : {0.0, 0.7, 2.9}) {
      const MomentTable t = closed_form_moments({100, 40, xi});
      CHECK(t.jx2 + t.jy2 + t.jz2 ==
            doctest::Approx(2550.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("closed-form moments agree with the dense oracle") {
  // reduced grid here; the acceptance suite runs the full one
  for (int n : {2, 4, 10, 51})
    for (int two_m : allowed_two_m(n))
      for (double xi : {0.0, 0.1, 1.0, 3.0}) {
        const SqueezedVacuumParams p{n, two_m, xi};
        const MomentTable cf = closed_form_moments(p);
        const MomentTable dn = moments(build_state(p));
        CAPTURE(n);
        CAPTURE(two_m);
        CAPTURE(xi);
        CHECK(close(cf.jx, dn.jx));
        CHECK(close(cf.jy, dn.jy));
        CHECK(close(cf.jz, dn.jz));
        CHECK(close(cf.jx2, dn.jx2));
        CHECK(close(cf.jy2, dn.jy2));
        CHECK(close(cf.jz2, dn.jz2));
        CHECK(close(cf.xy_sym, dn.xy_sym));
        CHECK(close(cf.xz_sym, dn.xz_sym));
        CHECK(close(cf.yz_sym, dn.yz_sym));
      }
}

TEST_CASE("closed-form report reproduces Table I anchors") {
  CHECK(closed_form_report({100, 20, 0.0}).e_param ==
        doctest::Approx(1440000.0).epsilon(1e-9));
  CHECK(closed_form_report({100, 80, 0.2}).e_param ==
        doctest::Approx(1470.5).epsilon(5e-3));
  CHECK(closed_form_report({100, 60, 3.0}).e_param ==
        doctest::Approx(0.0063).scale(0.0).epsilon(8e-2));
}

TEST_CASE("stretched seed m = +-j gives CSS fluctuations and E = 0") {
  for (double xi : {0.0, 0.4, 1.9, 3.0})
    for (int two_m : {-100, 100}) {
      const EntanglementReport rep = closed_form_report({100, two_m, xi});
      CHECK(rep.var_xp == doctest::Approx(25.0).epsilon(1e-11));
      CHECK(rep.var_yp == doctest::Approx(25.0).epsilon(1e-11));
      CHECK(std::fabs(rep.e_param) < 1e-10);
      CHECK(rep.mean_spin_mag == doctest::Approx(50.0).epsilon(1e-12));
    }
}

TEST_CASE("degenerate seed: m = 0 needs xi > 0") {
  CHECK_THROWS_AS(closed_form_report({100, 0, 0.0}), DegenerateFrame);
  const EntanglementReport rep = closed_form_report({100, 0, 0.5});
  CHECK(rep.mean_spin_mag > 0.0);
  CHECK(rep.angles.theta == doctest::Approx(0.0));  // mean spin along +z
}

TEST_CASE("closed-form frame angle matches tan(theta_1) = <J_x>/<J_z>") {
  for (double xi : {0.1, 0.8, 2.5})
    for (int two_m : {2, 20, 60}) {
      const SqueezedVacuumParams p{100, two_m, xi};
      const MomentTable t = closed_form_moments(p);
      const EntanglementReport rep = closed_form_report(p);
      const double theta1 = std::atan2(t.jx, t.jz);
      CHECK(rep.angles.theta == doctest::Approx(theta1).epsilon(1e-10));
      CHECK(rep.angles.phi == 0.0);
    }
}

TEST_CASE("closed-form report agrees with the dense pipeline") {
  for (int n : {4, 51, 100})
    for (int two_m : {n % 2 == 0 ? 2 : 1, n})
      for (double xi : {0.0, 0.3, 1.0, 2.7}) {
        const SqueezedVacuumParams p{n, two_m, xi};
        const EntanglementReport cf = closed_form_report(p);
        const EntanglementReport dn = analyze(build_state(p));
        CAPTURE(n);
        CAPTURE(two_m);
        CAPTURE(xi);
        CHECK(rel_diff(cf.var_xp, dn.var_xp) < 1e-8);
        CHECK(rel_diff(cf.var_yp, dn.var_yp) < 1e-8);
        CHECK(rel_diff(cf.mean_spin_mag, dn.mean_spin_mag) < 1e-8);
        CHECK(rel_diff(cf.e_param, dn.e_param) < 1e-8);
      }
}

TEST_CASE("Lambda eigenrelation residual") {
  CHECK(lambda_residual({100, 20, 1.0}) < 1e-8);
  CHECK(lambda_residual({2, 2, 0.5}) < 1e-12);
  CHECK(lambda_residual({100, 20, 0.0}) < 1e-10);  // J_x eigenstate at xi = 0
  CHECK(lambda_residual({51, 17, 2.0}) < 1e-8);
  CHECK(lambda_residual({100, 0, 3.0}) < 1e-8);
}

TEST_CASE("E and the variances are invariant under m -> -m") {
  for (int n : {10, 51, 100})
    for (int two_m : {n % 2 == 0 ? 2 : 1, mid_two_m(n), n})
      for (double xi : {0.0, 0.2, 1.1, 3.0}) {
        const EntanglementReport plus = closed_form_report({n, two_m, xi});
        const EntanglementReport minus = closed_form_report({n, -two_m, xi});
        CAPTURE(n);
        CAPTURE(two_m);
        CAPTURE(xi);
        CHECK(rel_diff(plus.var_xp, minus.var_xp) < 1e-9);
        CHECK(rel_diff(plus.var_yp, minus.var_yp) < 1e-9);
        CHECK(std::fabs(plus.e_param - minus.e_param) <=
              1e-9 * std::max(plus.e_param, 1e-3));
      }
}

TEST_CASE("E falls monotonically with xi (coarse grid)") {
  for (int m : {10, 20, 30, 40}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double xi = 0.0; xi <= 3.0; xi += 0.1) {
      const double e = closed_form_report({100, 2 * m, xi}).e_param;
      CAPTURE(m);
      CAPTURE(xi);
      CHECK(e < prev);
      prev = e;
    }
  }
}

TEST_CASE("entanglement without squeezing near xi = 0 for m = 40") {
  for (double xi : {0.0, 0.01, 0.02, 0.03}) {
    const EntanglementReport rep = closed_form_report({100, 80, xi});
    CHECK(rep.var_xp > 25.0);
    CHECK(rep.var_yp > 25.0);
    CHECK(rep.e_param > 1e3);
  }
}

TEST_CASE("E grows with N at fixed m = 1") {
  for (double xi : {0.8, 1.0}) {
    double prev = -1.0;
    for (int n = 2; n <= 100; n += 2) {
      const double e = closed_form_report({n, 2, xi}).e_param;
      CAPTURE(n);
      CAPTURE(xi);
      CHECK(e >= prev - 1e-12);
      prev = e;
    }
  }
  for (int n = 2; n <= 100; n += 2) {
    const double e8 = closed_form_report({n, 2, 0.8}).e_param;
    const double e10 = closed_form_report({n, 2, 1.0}).e_param;
    CHECK(e8 >= e10 - std::max(1e-9 * e10, 1e-12));
  }
  // N = 2 means m = j: no entanglement regardless of xi
  CHECK(closed_form_report({2, 2, 0.8}).e_param < 1e-10);
}
