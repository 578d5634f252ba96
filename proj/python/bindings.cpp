#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinent/product_oracle.hpp"
#include "spinent/squeezed_vacuum.hpp"
#include "spinent/sweep.hpp"
#include "spinent/wigner.hpp"

namespace py = pybind11;
using namespace spinent;

namespace {

SqueezedVacuumParams params_from_m(int n_atoms, double m, double xi) {
  const double doubled = 2.0 * m;
  if (std::fabs(doubled - std::round(doubled)) > 1e-9)
    throw std::invalid_argument("m must be integer or half-integer");
  return {n_atoms, int(std::lround(doubled)), xi};
}

}  // namespace

PYBIND11_MODULE(_spinent, mod) {
  mod.doc() = "collective-spin entanglement for squeezed-vacuum-driven atoms";

  py::register_exception<DegenerateFrame>(mod, "DegenerateFrameError");

  py::class_<SpinSector>(mod, "SpinSector")
      .def_readonly("two_j", &SpinSector::two_j)
      .def_property_readonly("dim", &SpinSector::dim)
      .def_property_readonly("n_atoms", &SpinSector::n_atoms)
      .def("__repr__", [](const SpinSector& s) {
        return "SpinSector(two_j=" + std::to_string(s.two_j) + ")";
      });

  py::class_<CollectiveState>(mod, "CollectiveState")
      .def_readonly("sector", &CollectiveState::sector)
      .def_readonly("amplitudes", &CollectiveState::amplitudes);

  py::class_<MomentTable>(mod, "MomentTable")
      .def_readonly("jx", &MomentTable::jx)
      .def_readonly("jy", &MomentTable::jy)
      .def_readonly("jz", &MomentTable::jz)
      .def_readonly("jx2", &MomentTable::jx2)
      .def_readonly("jy2", &MomentTable::jy2)
      .def_readonly("jz2", &MomentTable::jz2)
      .def_readonly("xy_sym", &MomentTable::xy_sym)
      .def_readonly("xz_sym", &MomentTable::xz_sym)
      .def_readonly("yz_sym", &MomentTable::yz_sym);

  py::class_<FrameAngles>(mod, "FrameAngles")
      .def_readonly("theta", &FrameAngles::theta)
      .def_readonly("phi", &FrameAngles::phi);

  py::class_<EntanglementReport>(mod, "EntanglementReport")
      .def_readonly("var_xp", &EntanglementReport::var_xp)
      .def_readonly("var_yp", &EntanglementReport::var_yp)
      .def_readonly("corr_x", &EntanglementReport::corr_x)
      .def_readonly("corr_y", &EntanglementReport::corr_y)
      .def_readonly("e_param", &EntanglementReport::e_param)
      .def_readonly("xi_rx", &EntanglementReport::xi_rx)
      .def_readonly("xi_ry", &EntanglementReport::xi_ry)
      .def_readonly("mean_spin_mag", &EntanglementReport::mean_spin_mag)
      .def_readonly("angles", &EntanglementReport::angles)
      .def_readonly("n_atoms", &EntanglementReport::n_atoms)
      .def("__repr__", [](const EntanglementReport& r) {
        return "EntanglementReport(E=" + std::to_string(r.e_param) + ")";
      });

  py::class_<SweepRow>(mod, "SweepRow")
      .def_readonly("n_atoms", &SweepRow::n_atoms)
      .def_readonly("two_m", &SweepRow::two_m)
      .def_readonly("xi", &SweepRow::xi)
      .def_readonly("var_xp", &SweepRow::var_xp)
      .def_readonly("var_yp", &SweepRow::var_yp)
      .def_readonly("corr_x", &SweepRow::corr_x)
      .def_readonly("corr_y", &SweepRow::corr_y)
      .def_readonly("e_param", &SweepRow::e_param)
      .def_readonly("xi_rx", &SweepRow::xi_rx)
      .def_readonly("xi_ry", &SweepRow::xi_ry)
      .def_readonly("mean_spin_mag", &SweepRow::mean_spin_mag);

  mod.def("make_sector", &make_sector, py::arg("n_atoms"));
  mod.def("dicke_state", &dicke_state, py::arg("sector"), py::arg("two_m"));
  mod.def("coherent_state", &coherent_state, py::arg("sector"),
          py::arg("theta"), py::arg("phi"));
  mod.def("rotate_y", &rotate_y, py::arg("state"), py::arg("beta"));
  mod.def("moments", &moments, py::arg("state"));
  mod.def("analyze", &analyze, py::arg("state"),
          "full entanglement report from the dense pipeline");

  mod.def("log_factorial", &log_factorial, py::arg("n"));
  mod.def("wigner_d", &wigner_d, py::arg("two_j"), py::arg("two_mp"),
          py::arg("two_m"), py::arg("beta"));
  mod.def("wigner_d_matrix", &wigner_d_matrix, py::arg("two_j"),
          py::arg("beta"));
  mod.def("delta_consistency", &delta_consistency, py::arg("two_j"),
          py::arg("two_m"), py::arg("xi"));
  mod.def(
      "series_ratios",
      [](int two_j, int two_m, double xi) {
        const SeriesBundle sb = series_bundle(two_j, two_m, xi);
        py::dict out;
        out["log_delta"] = sb.delta.log_mag;
        out["gamma_over_delta"] = sb.gamma_over_delta;
        out["eta_over_delta"] =
            sb.eta.is_zero() ? 0.0
                             : std::exp(sb.eta.log_mag - sb.delta.log_mag);
        return out;
      },
      py::arg("two_j"), py::arg("two_m"), py::arg("xi"),
      "log Delta and the series ratios used by the closed forms");

  mod.def(
      "build_state",
      [](int n_atoms, double m, double xi) {
        return build_state(params_from_m(n_atoms, m, xi));
      },
      py::arg("n_atoms"), py::arg("m"), py::arg("xi"));
  mod.def(
      "closed_form_moments",
      [](int n_atoms, double m, double xi) {
        return closed_form_moments(params_from_m(n_atoms, m, xi));
      },
      py::arg("n_atoms"), py::arg("m"), py::arg("xi"));
  mod.def(
      "report",
      [](int n_atoms, double m, double xi, bool oracle) {
        const SqueezedVacuumParams p = params_from_m(n_atoms, m, xi);
        return oracle ? analyze(build_state(p)) : closed_form_report(p);
      },
      py::arg("n_atoms"), py::arg("m"), py::arg("xi"),
      py::arg("oracle") = false,
      "entanglement report for |Psi_m>; closed forms unless oracle=True");
  mod.def(
      "lambda_residual",
      [](int n_atoms, double m, double xi) {
        return lambda_residual(params_from_m(n_atoms, m, xi));
      },
      py::arg("n_atoms"), py::arg("m"), py::arg("xi"));

  mod.def(
      "sweep_xi",
      [](int n_atoms, const std::vector<double>& ms,
         const std::vector<double>& xis, const std::string& mode, int jobs,
         bool skip_degenerate) {
        SweepSpec spec;
        spec.n_values = {n_atoms};
        for (double m : ms) {
          const double doubled = 2.0 * m;
          if (std::fabs(doubled - std::round(doubled)) > 1e-9)
            throw std::invalid_argument("m must be integer or half-integer");
          spec.two_m_values.push_back(int(std::lround(doubled)));
        }
        spec.xi_values = xis;
        spec.mode = parse_mode(mode);
        spec.jobs = jobs;
        spec.skip_degenerate = skip_degenerate;
        return sweep_xi(spec).rows;
      },
      py::arg("n_atoms"), py::arg("m_values"), py::arg("xi_values"),
      py::arg("mode") = "closed-form", py::arg("jobs") = 1,
      py::arg("skip_degenerate") = false);
}
