// spinent -- entanglement sweeps for N two-level atoms driven by a squeezed
// vacuum field.  Subcommands: sweep-xi, sweep-n, table1, report, oracle-check,
// plot.  Exit codes: 0 ok, 1 check failure, 2 usage/parse error, 3 degenerate
// physics point.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "spinent/sweep.hpp"

namespace {

using namespace spinent;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct CommonOpts {
  std::string mode = "closed-form";
  bool force_oracle = false;
  int jobs = 1;
  bool skip_degenerate = false;
  std::string out;

  SweepMode resolved_mode() const {
    return force_oracle ? SweepMode::kOracle : parse_mode(mode);
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--mode", opts.mode,
                  "computation path: closed-form | oracle | both")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cmd->add_flag("--oracle", opts.force_oracle,
                "force the dense-oracle path (same as --mode oracle)");
  cmd->add_option("--jobs", opts.jobs, "worker threads (rows stay in grid order)")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cmd->add_flag("--skip-degenerate", opts.skip_degenerate,
                "skip degenerate points instead of failing");
  cmd->add_option("--out", opts.out, "output file (default: stdout)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cmd->add_option("--config", "config file with key=value lines mirroring "
                              "flags; command-line flags win")
      ->expected(1)
      ->type_name("FILE");
}

// Expand `--config FILE` into option tokens spliced in right after the
// subcommand, so explicit command-line flags override the file under the
// take-last policy.
std::vector<std::string> expand_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw std::invalid_argument("--config needs a file path");
      config_path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      ++i;
    }
  }
  if (config_path.empty()) return args;
  if (args.empty())
    throw std::invalid_argument("--config requires a subcommand");

  std::ifstream file(config_path);
  if (!file)
    throw std::invalid_argument("cannot read config file '" + config_path +
                                "'");
  std::vector<std::string> injected;
  std::string line;
  auto trim = [](std::string s) {
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
  };
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " has an empty key");
    if (value == "true" || value == "yes" || value == "on") {
      injected.push_back("--" + key);
    } else if (value == "false" || value == "no" || value == "off") {
      // flag left unset
    } else {
      injected.push_back("--" + key);
      injected.push_back(value);
    }
  }
  // after the subcommand token, before the user's own flags
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

int emit(const SweepResult& result, const CommonOpts& opts) {
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  if (opts.out.empty()) {
    write_csv(std::cout, result.rows);
  } else {
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open '" << opts.out << "' for writing\n";
      return kExitUsage;
    }
    write_csv(f, result.rows);
  }
  if (opts.resolved_mode() == SweepMode::kBoth &&
      result.max_path_discrepancy > 1e-6) {
    std::cerr << "error: closed-form vs oracle discrepancy "
              << result.max_path_discrepancy << " exceeds 1e-6\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

void print_report(std::ostream& os, const char* label,
                  const EntanglementReport& rep, int two_m, double xi) {
  char buf[256];
  os << label << '\n';
  std::snprintf(buf, sizeof buf,
                "  N        %d\n  m        %g\n  xi       %.17g\n",
                rep.n_atoms, 0.5 * two_m, xi);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "  theta    %.17g\n  phi      %.17g\n  |<J>|    %.17g\n",
                rep.angles.theta, rep.angles.phi, rep.mean_spin_mag);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "  var_xp   %.17g\n  var_yp   %.17g\n  corr_x   %.17g\n"
                "  corr_y   %.17g\n",
                rep.var_xp, rep.var_yp, rep.corr_x, rep.corr_y);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "  E        %.17g\n  xi_Rx    %.17g\n  xi_Ry    %.17g\n",
                rep.e_param, rep.xi_rx, rep.xi_ry);
  os << buf;
  std::vector<SweepRow> row{row_from_report(rep, two_m, xi)};
  os << "row: " << format_csv(row);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement of N two-level atoms in a squeezed vacuum field",
               "spinent"};
  app.require_subcommand(1);

  // sweep-xi
  auto* sweep_xi_cmd = app.add_subcommand(
      "sweep-xi", "CSV sweep over xi for fixed N and a list of m values");
  std::string sx_n = "100", sx_m = "all", sx_xi = "0:3:0.01";
  CommonOpts sx_opts;
  sweep_xi_cmd->add_option("--n", sx_n, "number of atoms N")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sweep_xi_cmd->add_option("--m", sx_m, "m values: list like 10,20 or 'all'")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sweep_xi_cmd->add_option("--xi", sx_xi, "xi grid: start:stop:step or list")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  add_common(sweep_xi_cmd, sx_opts);

  // sweep-n
  auto* sweep_n_cmd = app.add_subcommand(
      "sweep-n", "CSV sweep over N for fixed m and a list of xi values");
  std::string sn_n = "2:100", sn_m = "1", sn_xi = "0.8,1.0";
  CommonOpts sn_opts;
  sweep_n_cmd->add_option("--n", sn_n, "N range lo:hi[:step] or list")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sweep_n_cmd->add_option("--m", sn_m, "fixed m (integer or half-integer)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sweep_n_cmd->add_option("--xi", sn_xi, "fixed xi values, comma separated")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  add_common(sweep_n_cmd, sn_opts);

  // table1
  auto* table_cmd =
      app.add_subcommand("table1", "E over the published (m, xi) grid, N = 100");
  bool table_check = false;
  table_cmd->add_flag("--check", table_check,
                      "compare against the published values");

  // report
  auto* report_cmd =
      app.add_subcommand("report", "full report for a single (N, m, xi) point");
  int rp_n = 100;
  double rp_m = 10, rp_xi = 0.0;
  bool rp_oracle = false;
  report_cmd->add_option("--n", rp_n, "number of atoms N")->required();
  report_cmd->add_option("--m", rp_m, "Dicke label m")->required();
  report_cmd->add_option("--xi", rp_xi, "field parameter xi")->required();
  report_cmd->add_flag("--oracle", rp_oracle,
                       "also run the dense pipeline and print the discrepancy");

  // oracle-check
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "run the product-space and dense oracle suites");
  int oc_max_n = 4;
  bool oc_fault = false;
  oracle_cmd->add_option("--max-n", oc_max_n, "largest product-space N (<= 4)");
  oracle_cmd->add_flag("--inject-fault", oc_fault)->group("");  // negative control

  // plot
  auto* plot_cmd = app.add_subcommand(
      "plot", "emit a gnuplot script for a completed sweep CSV");
  std::string pl_style = "fig1", pl_csv, pl_out;
  plot_cmd->add_option("--style", pl_style, "fig1 | fig2 | fig3");
  plot_cmd->add_option("--csv", pl_csv, "input CSV path")->required();
  plot_cmd->add_option("--out", pl_out, "script path (default: stdout)");

  try {
    std::vector<std::string> args = expand_config_args(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*sweep_xi_cmd) {
      SweepSpec spec;
      spec.n_values = parse_int_grid(sx_n);
      spec.two_m_values = parse_m_list(sx_m, spec.all_m);
      spec.xi_values = parse_real_grid(sx_xi);
      spec.mode = sx_opts.resolved_mode();
      spec.jobs = sx_opts.jobs;
      spec.skip_degenerate = sx_opts.skip_degenerate;
      return emit(sweep_xi(spec), sx_opts);
    }

    if (*sweep_n_cmd) {
      SweepSpec spec;
      spec.n_values = parse_int_grid(sn_n);
      spec.two_m_values = parse_m_list(sn_m, spec.all_m);
      spec.xi_values = parse_real_grid(sn_xi);
      spec.mode = sn_opts.resolved_mode();
      spec.jobs = sn_opts.jobs;
      spec.skip_degenerate = sn_opts.skip_degenerate;
      return emit(sweep_n(spec), sn_opts);
    }

    if (*table_cmd)
      return print_table1(std::cout, table_check) ? kExitOk : kExitCheckFailed;

    if (*report_cmd) {
      const double doubled = 2.0 * rp_m;
      if (std::fabs(doubled - std::round(doubled)) > 1e-9) {
        std::cerr << "error: m must be integer or half-integer\n";
        return kExitUsage;
      }
      const SqueezedVacuumParams params{rp_n, int(std::lround(doubled)), rp_xi};
      const EntanglementReport closed = closed_form_report(params);
      print_report(std::cout, "closed-form path", closed, params.two_m, rp_xi);
      if (rp_oracle) {
        const EntanglementReport dense = analyze(build_state(params));
        print_report(std::cout, "dense-oracle path", dense, params.two_m, rp_xi);
        auto rel = [](double a, double b) {
          return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-10});
        };
        const double disc = std::max({rel(closed.var_xp, dense.var_xp),
                                      rel(closed.var_yp, dense.var_yp),
                                      rel(closed.e_param, dense.e_param),
                                      rel(closed.mean_spin_mag,
                                          dense.mean_spin_mag)});
        char buf[64];
        std::snprintf(buf, sizeof buf, "max relative discrepancy: %.3e\n", disc);
        std::cout << buf;
      }
      return kExitOk;
    }

    if (*oracle_cmd)
      return run_oracle_checks(oc_max_n, oc_fault, std::cout) ? kExitOk
                                                              : kExitCheckFailed;

    if (*plot_cmd) {
      if (!std::filesystem::exists(pl_csv)) {
        std::cerr << "error: CSV '" << pl_csv << "' not found\n";
        return kExitUsage;
      }
      const std::string script = gnuplot_script(pl_style, pl_csv);
      if (pl_out.empty()) {
        std::cout << script;
      } else {
        std::ofstream f(pl_out, std::ios::binary);
        if (!f) {
          std::cerr << "error: cannot open '" << pl_out << "'\n";
          return kExitUsage;
        }
        f << script;
      }
      return kExitOk;
    }
  } catch (const DegenerateFrame& e) {
    std::cerr << "error: " << e.what()
              << " (use --skip-degenerate to drop such points)\n";
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
