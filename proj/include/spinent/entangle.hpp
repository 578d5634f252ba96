#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>

#include "spinent/spin_algebra.hpp"

namespace spinent {

/// A state whose mean spin vanishes has no defined rotated frame, hence no
/// defined E.  Reported as a typed error, never as a silent number.
class DegenerateFrame : public std::runtime_error {
 public:
  explicit DegenerateFrame(const std::string& what)
      : std::runtime_error(what) {}
};

/// |mean spin| below this is treated as degenerate: far below any physical
/// moment at N >= 2, far above accumulated rounding.
inline constexpr double kFrameEpsilon = 1e-10;

/// Euler angles of the frame whose z' axis lies along the mean spin:
/// cos(theta) = <J_z>/|<J>|, phi from (<J_x>, <J_y>).
struct FrameAngles {
  double theta = 0.0;
  double phi = 0.0;
};

struct EntanglementReport {
  double var_xp = 0.0;   // Delta J_x'^2
  double var_yp = 0.0;   // Delta J_y'^2
  double corr_x = 0.0;   // var_xp - N/4
  double corr_y = 0.0;   // var_yp - N/4
  double e_param = 0.0;  // ((corr_x)^2 + (corr_y)^2) / 2
  double xi_rx = 0.0;    // Ramsey spectroscopic squeezing parameters
  double xi_ry = 0.0;
  double mean_spin_mag = 0.0;
  FrameAngles angles;
  int n_atoms = 0;
};

/// (<J_x>, <J_y>, <J_z>).
Eigen::Vector3d mean_spin(const MomentTable& mom);

/// Throws DegenerateFrame when |mean| <= eps.  When the transverse part of
/// the mean vanishes any phi works; phi = 0 is the deterministic pick.
FrameAngles frame_angles(const Eigen::Vector3d& mean,
                         double eps = kFrameEpsilon);

/// The two transverse variances in the rotated frame, as quadratic forms in
/// the nine moment entries with the trigonometric frame weights.
std::pair<double, double> rotated_variances(const MomentTable& mom,
                                            const FrameAngles& angles);

/// Deviations of the rotated fluctuations from the separable (CSS) level N/4.
std::pair<double, double> corr_terms(double var_xp, double var_yp, int n_atoms);

/// E = ((corr_x)^2 + (corr_y)^2) / 2.
double entanglement_e(double corr_x, double corr_y);

/// Algebraically equivalent form of E straight from the variances:
/// (1/2)[vx(vx - N/2) + vy(vy - N/2) + N^2/8].
double entanglement_e_from_variances(double var_xp, double var_yp, int n_atoms);

/// xi_{R_a} = sqrt(2j) sqrt(var_a') / |<J>|.  Throws on zero mean spin.
std::pair<double, double> ramsey_parameters(double var_xp, double var_yp,
                                            double mean_spin_mag, int two_j);

/// E recovered from the experimentally measurable Ramsey parameters.
double e_from_ramsey(double xi_rx, double xi_ry, double mean_spin_mag,
                     int two_j, int n_atoms);

/// Full pipeline from a moment table: mean spin -> frame -> variances ->
/// correlation terms -> E -> Ramsey parameters.
EntanglementReport report_from_moments(const MomentTable& mom, int n_atoms);

/// moments() then report_from_moments().
EntanglementReport analyze(const CollectiveState& state);

}  // namespace spinent
