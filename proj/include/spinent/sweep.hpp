#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spinent/entangle.hpp"
#include "spinent/squeezed_vacuum.hpp"

namespace spinent {

enum class SweepMode { kClosedForm, kOracle, kBoth };

SweepMode parse_mode(const std::string& text);  // throws on unknown mode

struct SweepRow {
  int n_atoms = 0;
  int two_m = 0;
  double xi = 0.0;
  double var_xp = 0.0, var_yp = 0.0;
  double corr_x = 0.0, corr_y = 0.0;
  double e_param = 0.0;
  double xi_rx = 0.0, xi_ry = 0.0;
  double mean_spin_mag = 0.0;
};

struct SweepSpec {
  std::vector<int> n_values;
  std::vector<int> two_m_values;  // ignored when all_m is set
  bool all_m = false;
  std::vector<double> xi_values;
  SweepMode mode = SweepMode::kClosedForm;
  int jobs = 1;
  bool skip_degenerate = false;
};

/// Outcome of a sweep: rows in grid order plus diagnostics.  When mode is
/// kBoth, max_path_discrepancy records the worst relative closed-form vs
/// dense disagreement seen.
struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> warnings;
  double max_path_discrepancy = 0.0;
};

/// Grid order: for each m (curve), xi ascending.  Parity- or range-violating
/// (N, m) pairs are skipped with a warning, not fatal.  A degenerate point
/// throws DegenerateFrame unless skip_degenerate is set.
SweepResult sweep_xi(const SweepSpec& spec);

/// Grid order: for each xi (curve), N ascending over parity-compatible N.
SweepResult sweep_n(const SweepSpec& spec);

/// Single point as a row, by either path.
SweepRow run_point(const SqueezedVacuumParams& params, SweepMode mode);
SweepRow row_from_report(const EntanglementReport& rep, int two_m, double xi);

/// CSV with a header row; every numeric field at 17 significant digits so
/// values round-trip exactly.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::string format_csv(const std::vector<SweepRow>& rows);

/// Grid-string parsing shared with the CLI:
///   "a:b:s"   -> inclusive range with step s
///   "a,b,c"   -> explicit list
///   "v"       -> single value
std::vector<double> parse_real_grid(const std::string& text);
std::vector<int> parse_int_grid(const std::string& text);
/// m values are given in units of m (may be half-integers, or "all").
/// Returns doubled values; empty + all=true for "all".
std::vector<int> parse_m_list(const std::string& text, bool& all);

/// Published Table I values (N = 100).
struct Table1Entry {
  int m;
  double xi;
  double e_published;
};
const std::vector<Table1Entry>& table1_published();

/// Compute and print the Table I grid.  With check = true, compares against
/// the published values (relative 5e-3 or absolute 5e-4, whichever is
/// looser) and returns false on any mismatch.
bool print_table1(std::ostream& os, bool check);

/// Gnuplot-dialect script for one figure style (fig1 | fig2 | fig3)
/// referencing an existing CSV.  Throws std::invalid_argument on an unknown
/// style; the caller checks that the CSV exists.
std::string gnuplot_script(const std::string& style,
                           const std::string& csv_path);

/// Product-oracle and dense-oracle checks with per-check residual lines.
/// Returns true iff everything passed.  inject_fault perturbs one pairwise
/// covariance as a negative control.
bool run_oracle_checks(int max_n_product, bool inject_fault, std::ostream& os);

}  // namespace spinent
