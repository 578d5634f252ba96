#include "spinent/entangle.hpp"

#include <algorithm>
#include <cmath>

namespace spinent {

Eigen::Vector3d mean_spin(const MomentTable& mom) {
  return {mom.jx, mom.jy, mom.jz};
}

FrameAngles frame_angles(const Eigen::Vector3d& mean, double eps) {
  const double mag = mean.norm();
  if (mag <= eps)
    throw DegenerateFrame("mean spin magnitude " + std::to_string(mag) +
                          " leaves the rotated frame undefined");
  FrameAngles out;
  out.theta = std::acos(std::clamp(mean.z() / mag, -1.0, 1.0));
  const double rho2 = mean.x() * mean.x() + mean.y() * mean.y();
  out.phi = (rho2 < eps * eps) ? 0.0 : std::atan2(mean.y(), mean.x());
  return out;
}

std::pair<double, double> rotated_variances(const MomentTable& mom,
                                            const FrameAngles& angles) {
  const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
  const double cp = std::cos(angles.phi), sp = std::sin(angles.phi);

  const double var_x = mom.jx2 - mom.jx * mom.jx;
  const double var_y = mom.jy2 - mom.jy * mom.jy;
  const double var_z = mom.jz2 - mom.jz * mom.jz;
  const double cov_xy = mom.xy_sym - 2.0 * mom.jx * mom.jy;
  const double cov_xz = mom.xz_sym - 2.0 * mom.jx * mom.jz;
  const double cov_yz = mom.yz_sym - 2.0 * mom.jy * mom.jz;

  const double var_xp = var_x * ct * ct * cp * cp + var_y * ct * ct * sp * sp +
                        var_z * st * st + cov_xy * ct * ct * sp * cp -
                        cov_xz * st * ct * cp - cov_yz * st * ct * sp;
  const double var_yp = var_x * sp * sp + var_y * cp * cp - cov_xy * sp * cp;
  return {var_xp, var_yp};
}

std::pair<double, double> corr_terms(double var_xp, double var_yp,
                                     int n_atoms) {
  if (n_atoms < 2)
    throw std::invalid_argument("corr_terms: need at least two atoms");
  const double css = 0.25 * n_atoms;
  return {var_xp - css, var_yp - css};
}

double entanglement_e(double corr_x, double corr_y) {
  return 0.5 * (corr_x * corr_x + corr_y * corr_y);
}

double entanglement_e_from_variances(double var_xp, double var_yp,
                                     int n_atoms) {
  const double half_n = 0.5 * n_atoms;
  return 0.5 * (var_xp * (var_xp - half_n) + var_yp * (var_yp - half_n) +
                n_atoms * n_atoms / 8.0);
}

std::pair<double, double> ramsey_parameters(double var_xp, double var_yp,
                                            double mean_spin_mag, int two_j) {
  if (mean_spin_mag <= 0.0)
    throw DegenerateFrame("ramsey_parameters: zero mean spin");
  const double root_2j = std::sqrt(double(two_j));
  return {root_2j * std::sqrt(var_xp) / mean_spin_mag,
          root_2j * std::sqrt(var_yp) / mean_spin_mag};
}

double e_from_ramsey(double xi_rx, double xi_ry, double mean_spin_mag,
                     int two_j, int n_atoms) {
  const double mag2_over_2j = mean_spin_mag * mean_spin_mag / double(two_j);
  const double vx = xi_rx * xi_rx * mag2_over_2j;
  const double vy = xi_ry * xi_ry * mag2_over_2j;
  return entanglement_e_from_variances(vx, vy, n_atoms);
}

EntanglementReport report_from_moments(const MomentTable& mom, int n_atoms) {
  EntanglementReport rep;
  rep.n_atoms = n_atoms;
  const Eigen::Vector3d mean = mean_spin(mom);
  rep.mean_spin_mag = mean.norm();
  rep.angles = frame_angles(mean);
  std::tie(rep.var_xp, rep.var_yp) = rotated_variances(mom, rep.angles);
  std::tie(rep.corr_x, rep.corr_y) =
      corr_terms(rep.var_xp, rep.var_yp, n_atoms);
  rep.e_param = entanglement_e(rep.corr_x, rep.corr_y);
  // two_j = n_atoms in the symmetric sector
  std::tie(rep.xi_rx, rep.xi_ry) =
      ramsey_parameters(rep.var_xp, rep.var_yp, rep.mean_spin_mag, n_atoms);
  return rep;
}

EntanglementReport analyze(const CollectiveState& state) {
  return report_from_moments(moments(state), state.sector.n_atoms());
}

}  // namespace spinent
