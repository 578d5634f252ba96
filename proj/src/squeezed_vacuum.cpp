#include "spinent/squeezed_vacuum.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinent/wigner.hpp"

namespace spinent {

namespace {

double half_pi() { return 2.0 * std::atan(1.0); }

}  // namespace

void validate(const SqueezedVacuumParams& params) {
  if (params.n_atoms < 1)
    throw std::invalid_argument("squeezed vacuum: need n_atoms >= 1");
  if (std::abs(params.two_m) > params.n_atoms)
    throw std::invalid_argument("squeezed vacuum: |m| > j");
  if (((params.two_m ^ params.n_atoms) & 1) != 0)
    throw std::invalid_argument("squeezed vacuum: 2m parity mismatch with N");
  if (!(params.xi >= 0.0))
    throw std::invalid_argument("squeezed vacuum: xi must be >= 0");
}

CollectiveState build_state(const SqueezedVacuumParams& params) {
  validate(params);
  const SpinSector sector = make_sector(params.n_atoms);
  const int two_j = sector.two_j;
  const int dim = sector.dim();

  // log-amplitude(m') = xi m' + log|d^j_{m'm}(pi/2)|; the -log(Delta)/2
  // normalization is folded into the explicit renormalization below.
  std::vector<double> log_mag(dim, -std::numeric_limits<double>::infinity());
  std::vector<int> sign(dim, 0);
  double peak = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < dim; ++i) {
    const int two_mp = sector.two_m_of(i);
    const double d = wigner_d(two_j, two_mp, params.two_m, half_pi());
    if (d == 0.0) continue;
    sign[i] = d > 0.0 ? 1 : -1;
    log_mag[i] = 0.5 * params.xi * two_mp + std::log(std::fabs(d));
    peak = std::max(peak, log_mag[i]);
  }

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  for (int i = 0; i < dim; ++i)
    if (sign[i] != 0) amps(i) = sign[i] * std::exp(log_mag[i] - peak);
  amps.normalize();
  return {sector, std::move(amps)};
}

MomentTable closed_form_moments(const SqueezedVacuumParams& params) {
  validate(params);
  const SeriesBundle sb =
      series_bundle(params.n_atoms, params.two_m, params.xi);
  const double g = sb.gamma_over_delta;
  const double j = 0.5 * params.n_atoms;
  const double m = 0.5 * params.two_m;
  const double ch = std::cosh(params.xi);
  const double th = std::tanh(params.xi);
  const double x = m / ch;  // <J_x>

  MomentTable t;
  t.jx = x;
  t.jy = 0.0;
  t.jz = 0.5 * th * g;
  t.jx2 = x * x + 0.25 * th * th * g;
  t.jy2 = 0.25 * g;  // coth(xi) dDelta/dxi / (4 Delta) collapses to Gamma/4Delta
  t.jz2 = j * (j + 1.0) - x * x - 0.25 * g * (2.0 - 1.0 / (ch * ch));
  t.xy_sym = 0.0;
  t.yz_sym = 0.0;
  t.xz_sym = x * th * (g - 1.0);
  return t;
}

EntanglementReport closed_form_report(const SqueezedVacuumParams& params) {
  validate(params);
  const int n = params.n_atoms;
  const SeriesBundle sb = series_bundle(n, params.two_m, params.xi);
  const double g = sb.gamma_over_delta;
  const double j = 0.5 * n;
  const double m = 0.5 * params.two_m;
  const double ch = std::cosh(params.xi);
  const double th = std::tanh(params.xi);

  const double x = m / ch;            // <J_x>
  const double z = 0.5 * th * g;      // <J_z>
  const double b = x * x + z * z;     // |<J>|^2

  EntanglementReport rep;
  rep.n_atoms = n;
  rep.mean_spin_mag = std::sqrt(b);
  rep.angles = frame_angles({x, 0.0, z});

  const double q = 0.25 * th * th;  // tanh^2/4
  rep.var_yp = 0.25 * g;
  rep.var_xp =
      (q * q * g * g * g + j * (j + 1.0) * x * x - x * x * g / (4.0 * ch * ch)) /
          b -
      x * x;
  std::tie(rep.corr_x, rep.corr_y) = corr_terms(rep.var_xp, rep.var_yp, n);
  rep.e_param = entanglement_e(rep.corr_x, rep.corr_y);
  std::tie(rep.xi_rx, rep.xi_ry) =
      ramsey_parameters(rep.var_xp, rep.var_yp, rep.mean_spin_mag, n);
  return rep;
}

double lambda_residual(const SqueezedVacuumParams& params) {
  validate(params);
  const CollectiveState psi = build_state(params);
  const double ch = std::cosh(params.xi);
  const double sh = std::sinh(params.xi);
  const Eigen::VectorXcd jx_psi = build_jx(psi.sector).matrix * psi.amplitudes;
  const Eigen::VectorXcd jy_psi = build_jy(psi.sector).matrix * psi.amplitudes;
  const double m = 0.5 * params.two_m;
  const Eigen::VectorXcd resid = ch * jx_psi +
                                 std::complex<double>(0.0, sh) * jy_psi -
                                 m * psi.amplitudes;
  return resid.norm();
}

}  // namespace spinent
