#include "spinent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spinent/product_oracle.hpp"
#include "spinent/wigner.hpp"

namespace spinent {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-10});
  return std::fabs(a - b) / scale;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double to_real(const std::string& s) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos != s.size())
    throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

struct PointOutcome {
  std::optional<SweepRow> row;
  bool degenerate = false;
  std::string error;
  double discrepancy = 0.0;
};

PointOutcome compute_point(const SqueezedVacuumParams& params, SweepMode mode) {
  PointOutcome out;
  try {
    EntanglementReport rep;
    if (mode == SweepMode::kOracle) {
      rep = analyze(build_state(params));
    } else {
      rep = closed_form_report(params);
    }
    out.row = row_from_report(rep, params.two_m, params.xi);
    if (mode == SweepMode::kBoth) {
      const EntanglementReport dense = analyze(build_state(params));
      out.discrepancy = std::max(
          {rel_diff(rep.var_xp, dense.var_xp), rel_diff(rep.var_yp, dense.var_yp),
           rel_diff(rep.e_param, dense.e_param),
           rel_diff(rep.mean_spin_mag, dense.mean_spin_mag)});
    }
  } catch (const DegenerateFrame& e) {
    out.degenerate = true;
    out.error = e.what();
  } catch (const std::exception& e) {
    // anything else is rethrown on the main thread, with the point attached
    out.error = e.what();
  }
  return out;
}

SweepResult run_grid(const std::vector<SqueezedVacuumParams>& points,
                     const SweepSpec& spec,
                     std::vector<std::string> grid_warnings) {
  std::vector<PointOutcome> outcomes(points.size());
  const int jobs =
      std::clamp(spec.jobs, 1,
                 int(std::max(1u, std::thread::hardware_concurrency())));
  if (jobs <= 1 || points.size() < 2) {
    for (size_t i = 0; i < points.size(); ++i)
      outcomes[i] = compute_point(points[i], spec.mode);
  } else {
    // Workers pull indices from a shared counter; rows land in their grid
    // slot, so output order never depends on scheduling.
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < points.size();
           i = next.fetch_add(1))
        outcomes[i] = compute_point(points[i], spec.mode);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepResult res;
  res.warnings = std::move(grid_warnings);
  res.rows.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& oc = outcomes[i];
    std::ostringstream where;
    where << "(N=" << points[i].n_atoms << ", 2m=" << points[i].two_m
          << ", xi=" << points[i].xi << ")";
    if (oc.degenerate) {
      const std::string msg = "degenerate point " + where.str() + ": " + oc.error;
      if (!spec.skip_degenerate) throw DegenerateFrame(msg);
      res.warnings.push_back("skipped " + msg);
      continue;
    }
    if (!oc.row)
      throw std::runtime_error("sweep point " + where.str() + ": " + oc.error);
    res.rows.push_back(*oc.row);
    res.max_path_discrepancy =
        std::max(res.max_path_discrepancy, oc.discrepancy);
  }
  return res;
}

std::vector<int> resolved_two_m(const SweepSpec& spec, int n_atoms,
                                std::vector<std::string>& warnings) {
  std::vector<int> out;
  if (spec.all_m) {
    for (int two_m = -n_atoms; two_m <= n_atoms; two_m += 2)
      out.push_back(two_m);
    return out;
  }
  for (int two_m : spec.two_m_values) {
    if (std::abs(two_m) > n_atoms || ((two_m ^ n_atoms) & 1)) {
      std::ostringstream msg;
      msg << "skipping quantum-number violation: N=" << n_atoms
          << " with m=" << 0.5 * two_m;
      warnings.push_back(msg.str());
      continue;
    }
    out.push_back(two_m);
  }
  return out;
}

}  // namespace

SweepMode parse_mode(const std::string& text) {
  if (text == "closed-form") return SweepMode::kClosedForm;
  if (text == "oracle") return SweepMode::kOracle;
  if (text == "both") return SweepMode::kBoth;
  throw std::invalid_argument("unknown mode '" + text +
                              "' (want closed-form | oracle | both)");
}

SweepRow row_from_report(const EntanglementReport& rep, int two_m, double xi) {
  SweepRow r;
  r.n_atoms = rep.n_atoms;
  r.two_m = two_m;
  r.xi = xi;
  r.var_xp = rep.var_xp;
  r.var_yp = rep.var_yp;
  r.corr_x = rep.corr_x;
  r.corr_y = rep.corr_y;
  r.e_param = rep.e_param;
  r.xi_rx = rep.xi_rx;
  r.xi_ry = rep.xi_ry;
  r.mean_spin_mag = rep.mean_spin_mag;
  return r;
}

SweepRow run_point(const SqueezedVacuumParams& params, SweepMode mode) {
  const EntanglementReport rep = (mode == SweepMode::kOracle)
                                     ? analyze(build_state(params))
                                     : closed_form_report(params);
  return row_from_report(rep, params.two_m, params.xi);
}

SweepResult sweep_xi(const SweepSpec& spec) {
  if (spec.n_values.size() != 1)
    throw std::invalid_argument("sweep-xi: exactly one N expected");
  if (spec.xi_values.empty())
    throw std::invalid_argument("sweep-xi: empty xi grid");
  std::vector<std::string> warnings;
  const int n = spec.n_values.front();
  std::vector<SqueezedVacuumParams> points;
  for (int two_m : resolved_two_m(spec, n, warnings))
    for (double xi : spec.xi_values) points.push_back({n, two_m, xi});
  return run_grid(points, spec, std::move(warnings));
}

SweepResult sweep_n(const SweepSpec& spec) {
  if (spec.all_m || spec.two_m_values.size() != 1)
    throw std::invalid_argument("sweep-n: exactly one m expected");
  if (spec.n_values.empty())
    throw std::invalid_argument("sweep-n: empty N grid");
  std::vector<std::string> warnings;
  const int two_m = spec.two_m_values.front();
  std::vector<SqueezedVacuumParams> points;
  for (double xi : spec.xi_values) {
    for (int n : spec.n_values) {
      if (std::abs(two_m) > n || ((two_m ^ n) & 1)) {
        std::ostringstream msg;
        msg << "skipping quantum-number violation: N=" << n
            << " with m=" << 0.5 * two_m;
        warnings.push_back(msg.str());
        continue;
      }
      points.push_back({n, two_m, xi});
    }
  }
  return run_grid(points, spec, std::move(warnings));
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "n_atoms,two_m,xi,var_xp,var_yp,corr_x,corr_y,e_param,xi_rx,xi_ry,"
        "mean_spin_mag\n";
  for (const SweepRow& r : rows) {
    os << r.n_atoms << ',' << r.two_m << ',' << fmt17(r.xi) << ','
       << fmt17(r.var_xp) << ',' << fmt17(r.var_yp) << ',' << fmt17(r.corr_x)
       << ',' << fmt17(r.corr_y) << ',' << fmt17(r.e_param) << ','
       << fmt17(r.xi_rx) << ',' << fmt17(r.xi_ry) << ','
       << fmt17(r.mean_spin_mag) << '\n';
  }
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

std::vector<double> parse_real_grid(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty grid spec");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3)
      throw std::invalid_argument("range spec must be start:stop:step");
    const double start = to_real(parts[0]);
    const double stop = to_real(parts[1]);
    const double step = to_real(parts[2]);
    if (step <= 0.0) throw std::invalid_argument("grid step must be > 0");
    if (stop < start) throw std::invalid_argument("grid stop < start");
    // inclusive endpoint, with slack for one ulp of accumulated error
    const int count = int(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(start + i * step);
    return out;
  }
  std::vector<double> out;
  for (const auto& piece : split(text, ',')) out.push_back(to_real(piece));
  if (out.empty()) throw std::invalid_argument("empty grid spec");
  return out;
}

std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 2 && parts.size() != 3)
      throw std::invalid_argument("range spec must be lo:hi or lo:hi:step");
    const int lo = int(std::lround(to_real(parts[0])));
    const int hi = int(std::lround(to_real(parts[1])));
    const int step = parts.size() == 3 ? int(std::lround(to_real(parts[2]))) : 1;
    if (step <= 0) throw std::invalid_argument("grid step must be > 0");
    if (hi < lo) throw std::invalid_argument("grid stop < start");
    for (int v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  for (const auto& piece : split(text, ',')) {
    const double v = to_real(piece);
    if (v != std::floor(v))
      throw std::invalid_argument("expected integer, got '" + piece + "'");
    out.push_back(int(std::lround(v)));
  }
  if (out.empty()) throw std::invalid_argument("empty grid spec");
  return out;
}

std::vector<int> parse_m_list(const std::string& text, bool& all) {
  all = false;
  if (text == "all") {
    all = true;
    return {};
  }
  std::vector<int> out;
  for (const auto& piece : split(text, ',')) {
    const double v = to_real(piece);
    const double doubled = 2.0 * v;
    if (std::fabs(doubled - std::round(doubled)) > 1e-9)
      throw std::invalid_argument("m must be integer or half-integer, got '" +
                                  piece + "'");
    out.push_back(int(std::lround(doubled)));
  }
  if (out.empty()) throw std::invalid_argument("empty m list");
  return out;
}

const std::vector<Table1Entry>& table1_published() {
  static const std::vector<Table1Entry> table = {
      {10, 0.0, 1440000.0}, {10, 0.1, 22357.14}, {10, 0.2, 4914.34},
      {10, 3.0, 0.0142},    {20, 0.0, 1102500.0}, {20, 0.1, 19162.98},
      {20, 0.2, 4189.47},   {20, 3.0, 0.0109},    {30, 0.0, 640000.0},
      {30, 0.1, 13943.33},  {30, 0.2, 3013.98},   {30, 3.0, 0.0063},
      {40, 0.0, 202500.0},  {40, 0.1, 6965.37},   {40, 0.2, 1470.5},
      {40, 3.0, 0.002},     {50, 0.0, 0.0},       {50, 0.1, 0.0},
      {50, 0.2, 0.0},       {50, 3.0, 0.0}};
  return table;
}

bool print_table1(std::ostream& os, bool check) {
  static const double xis[] = {0.0, 0.1, 0.2, 3.0};
  os << "Values of E with xi for different values of m, N = 100\n";
  os << "   m";
  for (double xi : xis) {
    char head[32];
    std::snprintf(head, sizeof head, "%14s%-3g", "xi = ", xi);
    os << head;
  }
  os << '\n';

  bool ok = true;
  for (int m = 10; m <= 50; m += 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%4d", m);
    os << buf;
    for (double xi : xis) {
      const double e = closed_form_report({100, 2 * m, xi}).e_param;
      std::snprintf(buf, sizeof buf, "%17.8g", e);
      os << buf;
      if (check) {
        const auto& table = table1_published();
        const auto it =
            std::find_if(table.begin(), table.end(), [&](const Table1Entry& t) {
              return t.m == m && t.xi == xi;
            });
        const double tol =
            std::max(5e-3 * std::fabs(it->e_published), 5e-4);
        if (std::fabs(e - it->e_published) > tol) {
          ok = false;
          os << " [expected " << it->e_published << "]";
        }
      }
    }
    os << '\n';
  }
  if (check)
    os << (ok ? "table1 check: PASS\n" : "table1 check: FAIL\n");
  return ok;
}

std::string gnuplot_script(const std::string& style,
                           const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in)
    throw std::runtime_error("cannot open CSV '" + csv_path + "'");
  std::string header;
  std::getline(in, header);

  std::vector<int> two_ms;
  std::vector<double> xis;
  int n_atoms = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() < 11) continue;
    const int tm = int(std::lround(to_real(f[1])));
    const double xi = to_real(f[2]);
    n_atoms = int(std::lround(to_real(f[0])));
    if (std::find(two_ms.begin(), two_ms.end(), tm) == two_ms.end())
      two_ms.push_back(tm);
    if (std::find_if(xis.begin(), xis.end(), [&](double v) {
          return std::fabs(v - xi) < 1e-12;
        }) == xis.end())
      xis.push_back(xi);
  }

  auto m_label = [](int two_m) {
    std::ostringstream s;
    if (two_m % 2 == 0)
      s << two_m / 2;
    else
      s << 0.5 * two_m;
    return s.str();
  };

  std::ostringstream os;
  os << "# gnuplot script (style " << style << ") for " << csv_path << "\n";
  os << "set datafile separator ','\n";
  if (style == "fig1") {
    os << "set xlabel 'xi'\nset ylabel 'E'\nset logscale y\nset key top right\n";
    os << "plot \\\n";
    for (size_t i = 0; i < two_ms.size(); ++i) {
      os << "  '" << csv_path << "' using 3:(abs($2 - (" << two_ms[i]
         << ")) < 0.5 ? $8 : 1/0) with lines title 'm = "
         << m_label(two_ms[i]) << "'";
      os << (i + 1 < two_ms.size() ? ", \\\n" : "\n");
    }
  } else if (style == "fig2") {
    os << "set xlabel 'N'\nset ylabel 'E'\nset logscale y\nset key top left\n";
    os << "plot \\\n";
    for (size_t i = 0; i < xis.size(); ++i) {
      os << "  '" << csv_path << "' using 1:(abs($3 - (" << fmt17(xis[i])
         << ")) < 1e-12 ? $8 : 1/0) with lines title 'xi = " << xis[i] << "'";
      os << (i + 1 < xis.size() ? ", \\\n" : "\n");
    }
  } else if (style == "fig3") {
    os << "set xlabel 'xi'\nset ylabel 'variance'\nset key top right\n";
    os << "plot \\\n";
    for (size_t i = 0; i < two_ms.size(); ++i) {
      const std::string cond =
          "abs($2 - (" + std::to_string(two_ms[i]) + ")) < 0.5";
      os << "  '" << csv_path << "' using 3:(" << cond
         << " ? $4 : 1/0) with lines title 'Var-Jx (m = " << m_label(two_ms[i])
         << ")', \\\n";
      os << "  '" << csv_path << "' using 3:(" << cond
         << " ? $5 : 1/0) with lines title 'Var-Jy (m = " << m_label(two_ms[i])
         << ")', \\\n";
    }
    os << "  " << 0.25 * n_atoms << " with lines dashtype 2 title 'N/4'\n";
  } else {
    throw std::invalid_argument("unknown plot style '" + style +
                                "' (want fig1 | fig2 | fig3)");
  }
  return os.str();
}

bool run_oracle_checks(int max_n_product, bool inject_fault, std::ostream& os) {
  if (max_n_product < 2 || max_n_product > kMaxProductAtoms)
    throw std::invalid_argument("oracle checks: need 2 <= max-n <= 4");

  bool all_ok = true;
  auto report = [&](const std::string& name, double resid, double tol) {
    const bool pass = resid < tol;
    all_ok = all_ok && pass;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-58s %11.3e  (tol %.0e)  %s\n",
                  name.c_str(), resid, tol, pass ? "ok" : "FAIL");
    os << buf;
  };

  std::mt19937 rng(0x5eed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  bool fault_pending = inject_fault;

  auto random_symmetric = [&](int n) {
    const SpinSector sector = make_sector(n);
    Eigen::VectorXcd amps(sector.dim());
    while (true) {
      for (int i = 0; i < sector.dim(); ++i)
        amps(i) = std::complex<double>(gauss(rng), gauss(rng));
      amps.normalize();
      CollectiveState st{sector, amps};
      if (mean_spin(moments(st)).norm() > 1e-3) return st;
    }
  };

  for (int n = 2; n <= max_n_product; ++n) {
    double worst_decomp = 0.0, worst_quarter = 0.0, worst_e = 0.0;
    auto exercise = [&](const CollectiveState& st) {
      const MomentTable mom = moments(st);
      const FrameAngles angles = frame_angles(mean_spin(mom));
      const auto [vx, vy] = rotated_variances(mom, angles);
      const ProductSpaceState prod = embed_symmetric(st);
      auto [cx, cy] = pairwise_corr(prod, angles);
      if (fault_pending) {
        cx += 1e-3;  // negative control
        fault_pending = false;
      }
      const auto ind = individual_rotated_variances(prod, angles);
      double sum_x = 0.0, sum_y = 0.0;
      for (auto [ix, iy] : ind) {
        worst_quarter = std::max({worst_quarter, std::fabs(ix - 0.25),
                                  std::fabs(iy - 0.25)});
        sum_x += ix;
        sum_y += iy;
      }
      worst_decomp = std::max({worst_decomp, std::fabs(vx - (sum_x + cx)),
                               std::fabs(vy - (sum_y + cy))});
      const auto [ccx, ccy] = corr_terms(vx, vy, n);
      worst_e = std::max(worst_e, rel_diff(entanglement_e(cx, cy),
                                           entanglement_e(ccx, ccy)));
    };
    for (int rep = 0; rep < 10; ++rep) exercise(random_symmetric(n));
    for (int two_m = -n; two_m <= n; two_m += 2)
      for (double xi : {0.3, 0.9})
        exercise(build_state({n, two_m, xi}));

    report("decomposition identity, N=" + std::to_string(n), worst_decomp,
           1e-10);
    report("individual rotated variances = 1/4, N=" + std::to_string(n),
           worst_quarter, 1e-10);
    report("E pairwise vs collective, N=" + std::to_string(n), worst_e, 1e-10);
  }

  {
    std::uniform_real_distribution<double> ang(0.2, 2.9);
    std::uniform_real_distribution<double> azi(0.0, 6.2);
    double worst_sep = 0.0, worst_e = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const CollectiveState css =
          coherent_state(make_sector(max_n_product), ang(rng), azi(rng));
      worst_sep = std::max(worst_sep, separability_residual(embed_symmetric(css)));
      worst_e = std::max(worst_e, analyze(css).e_param);
    }
    report("separability residual, product CSS", worst_sep, 1e-12);
    report("E on product CSS", worst_e, 1e-10);

    // entangled control: (|01> + |10>)/sqrt(2) has covariance 1/4
    const CollectiveState triplet = dicke_state(make_sector(2), 0);
    const double sep = separability_residual(embed_symmetric(triplet));
    report("triplet residual distance from 0.25", std::fabs(sep - 0.25), 1e-12);
  }

  report("Lambda eigenrelation residual (N=100, m=10, xi=1)",
         lambda_residual({100, 20, 1.0}), 1e-8);
  report("Delta consistency (N=100, m=20, xi=1)", delta_consistency(100, 40, 1.0),
         1e-10);

  {
    const Eigen::MatrixXd d = wigner_d_matrix(100, 1.234);
    const double resid =
        (d * d.transpose() - Eigen::MatrixXd::Identity(101, 101))
            .cwiseAbs()
            .maxCoeff();
    report("d-matrix orthogonality, j = 50", resid, 1e-12);
  }

  {
    double worst = 0.0;
    for (int n : {2, 4, 10})
      for (int two_m = -n; two_m <= n; two_m += 2)
        for (double xi : {0.0, 0.5, 2.0}) {
          if (two_m == 0 && xi == 0.0) continue;
          const SqueezedVacuumParams p{n, two_m, xi};
          const EntanglementReport a = closed_form_report(p);
          const EntanglementReport b = analyze(build_state(p));
          worst = std::max({worst, rel_diff(a.var_xp, b.var_xp),
                            rel_diff(a.var_yp, b.var_yp),
                            rel_diff(a.e_param, b.e_param),
                            rel_diff(a.mean_spin_mag, b.mean_spin_mag)});
        }
    report("closed form vs dense pipeline, N <= 10", worst, 1e-8);
  }

  os << (all_ok ? "oracle checks: PASS\n" : "oracle checks: FAIL\n");
  return all_ok;
}

}  // namespace spinent
