#include "spinent/wigner.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinent {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln(n!) for n <= kQuadTableSize-1 in quad precision, built once.
constexpr int kQuadTableSize = 2048;

const __float128* quad_log_factorials() {
  static __float128 table[kQuadTableSize];
  static std::once_flag flag;
  std::call_once(flag, [] {
    table[0] = 0;
    for (int n = 1; n < kQuadTableSize; ++n)
      table[n] = table[n - 1] + logq((__float128)n);
  });
  return table;
}

__float128 lfq(int n) {
  if (n < kQuadTableSize) return quad_log_factorials()[n];
  return lgammaq((__float128)n + 1);
}

void check_quantum_numbers(int two_j, int two_m, const char* what) {
  if (two_j < 0)
    throw std::invalid_argument(std::string(what) + ": negative 2j");
  if (std::abs(two_m) > two_j)
    throw std::invalid_argument(std::string(what) + ": |m| > j");
  if (((two_j ^ two_m) & 1) != 0)
    throw std::invalid_argument(std::string(what) +
                                ": 2m and 2j have inconsistent parity");
}

// k-sum of the d-matrix element with k over every index that keeps all four
// factorial arguments nonnegative.  The anchor term is formed in log space;
// successive terms follow by the exact ratio
//   t_{k+1}/t_k = -(s/c)^2 (j-m'-k)(j+m-k) / ((k+1)(m'-m+k+1)),
// all in __float128 so the signed accumulation keeps ~19 digits of headroom
// over the worst cancellation.
__float128 wigner_d_quad(int two_j, int two_mp, int two_m, double beta) {
  const int jmp = (two_j - two_mp) / 2;   // j - m'
  const int jpm = (two_j + two_m) / 2;    // j + m
  const int jpmp = (two_j + two_mp) / 2;  // j + m'
  const int jmm = (two_j - two_m) / 2;    // j - m
  const int dm = (two_mp - two_m) / 2;    // m' - m
  const int klo = std::max(0, -dm);
  const int khi = std::min(jmp, jpm);

  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);

  if (s == 0.0) {
    // Half-angle sine exactly zero (beta = 0 mod 2pi): the matrix is
    // diagonal with entries c^{2j}, c = +-1.
    if (two_mp != two_m) return 0;
    return (c < 0.0 && (two_j & 1)) ? -1 : 1;
  }

  const __float128 cq = c;
  const __float128 sq = s;

  const __float128 log_pre =
      (__float128)0.5 * (lfq(jpm) + lfq(jmm) + lfq(jpmp) + lfq(jmp));

  __float128 sum = 0;

  if (c == 0.0) {
    // Half-angle cosine exactly zero: only the term with zero cosine power
    // survives.  (Unreachable for double beta in practice, kept for safety.)
    for (int k = klo; k <= khi; ++k) {
      if (two_j - 2 * k - dm != 0) continue;
      __float128 l = log_pre - (lfq(k) + lfq(jmp - k) + lfq(jpm - k) + lfq(dm + k));
      int ps = 2 * k + dm;
      __float128 t = expq(l);
      if ((std::abs(dm) + k) & 1) t = -t;
      if (s < 0.0 && (ps & 1)) t = -t;
      sum += t;
    }
    return sum;
  }

  const __float128 ratio_base = -(sq * sq) / (cq * cq);
  const int pc = two_j - 2 * klo - dm;  // cosine exponent at the anchor
  const int ps = 2 * klo + dm;          // sine exponent at the anchor
  __float128 lanchor =
      log_pre - (lfq(klo) + lfq(jmp - klo) + lfq(jpm - klo) + lfq(dm + klo));
  if (pc > 0) lanchor += (__float128)pc * logq(fabsq(cq));
  if (ps > 0) lanchor += (__float128)ps * logq(fabsq(sq));

  int sgn = ((std::abs(dm) + klo) & 1) ? -1 : +1;
  if (c < 0.0 && (pc & 1)) sgn = -sgn;
  if (s < 0.0 && (ps & 1)) sgn = -sgn;

  __float128 term = (__float128)sgn * expq(lanchor);
  sum = term;
  for (int k = klo; k < khi; ++k) {
    term *= ratio_base * (__float128)((jmp - k) * (jpm - k)) /
            (__float128)((k + 1) * (dm + k + 1));
    sum += term;
  }
  return sum;
}

double stable_log_cosh(double x) {
  x = std::fabs(x);
  return x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0);
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  static const std::vector<double> table = [] {
    std::vector<double> t(21);
    double f = 1.0;
    t[0] = 0.0;
    for (int k = 1; k <= 20; ++k) {
      f *= k;  // exact up to 20! in double
      t[k] = std::log(f);
    }
    return t;
  }();
  if (n <= 20) return table[n];
  return std::lgamma(n + 1.0);
}

double wigner_d(int two_j, int two_mp, int two_m, double beta) {
  check_quantum_numbers(two_j, two_m, "wigner_d");
  check_quantum_numbers(two_j, two_mp, "wigner_d");
  return (double)wigner_d_quad(two_j, two_mp, two_m, beta);
}

Eigen::MatrixXd wigner_d_matrix(int two_j, double beta) {
  if (two_j < 0) throw std::invalid_argument("wigner_d_matrix: negative 2j");
  const int dim = two_j + 1;
  Eigen::MatrixXd d(dim, dim);
  for (int ip = 0; ip < dim; ++ip)
    for (int i = 0; i < dim; ++i)
      d(ip, i) = (double)wigner_d_quad(two_j, 2 * ip - two_j, 2 * i - two_j, beta);
  return d;
}

SeriesBundle series_bundle(int two_j, int two_m, double xi) {
  check_quantum_numbers(two_j, two_m, "series_bundle");
  xi = std::fabs(xi);  // Delta, eta, Gamma are even in xi

  const int jpm = (two_j + two_m) / 2;  // j + m
  const int jmm = (two_j - two_m) / 2;  // j - m
  const double twoj = two_j;
  const double j_jp1 = 0.25 * twoj * (twoj + 2.0);     // j(j+1)
  const double m_sq = 0.25 * double(two_m) * two_m;    // m^2

  SeriesBundle out;

  if (xi == 0.0) {
    // Only the k = 0 terms survive; keep the table-exact values.
    const double eta0 = double(jpm) * jmm;  // j^2 - m^2
    out.delta = LogScaled::from_real(1.0);
    out.eta = LogScaled::from_real(eta0);
    out.gamma = LogScaled::from_real(twoj + 2.0 * eta0);
    out.d_delta = LogScaled::zero();
    out.d2_delta = LogScaled::from_real(2.0 * (j_jp1 - m_sq));
    out.gamma_over_delta = twoj + 2.0 * eta0;
    return out;
  }

  const double lch = stable_log_cosh(xi);
  const double lth2 = 2.0 * std::log(std::tanh(xi));

  // Delta: term_0 = cosh^{2j} xi, ratio tanh^2 (j-m-k)(j+m-k)/(k+1)^2
  {
    std::vector<double> logs;
    logs.reserve(std::min(jpm, jmm) + 1);
    double lt = twoj * lch;
    logs.push_back(lt);
    for (int k = 0; k < std::min(jpm, jmm); ++k) {
      lt += lth2 + std::log(double(jmm - k)) + std::log(double(jpm - k)) -
            2.0 * std::log(double(k + 1));
      logs.push_back(lt);
    }
    out.delta = LogScaled::from_log(+1, log_sum_exp(logs));
  }

  // eta: empty sum for m = +-j, else term_0 = cosh^{2j} (j+m)(j-m),
  // ratio tanh^2 (j+m-1-k)(j-m-1-k)/((k+1)(k+2)).
  if (jpm == 0 || jmm == 0) {
    out.eta = LogScaled::zero();
  } else {
    std::vector<double> logs;
    logs.reserve(std::min(jpm, jmm));
    double lt = twoj * lch + std::log(double(jpm)) + std::log(double(jmm));
    logs.push_back(lt);
    for (int k = 0; k < std::min(jpm, jmm) - 1; ++k) {
      lt += lth2 + std::log(double(jpm - 1 - k)) + std::log(double(jmm - 1 - k)) -
            std::log(double(k + 1)) - std::log(double(k + 2));
      logs.push_back(lt);
    }
    out.eta = LogScaled::from_log(+1, log_sum_exp(logs));
  }

  // Gamma = 2j Delta + 2 eta / cosh^2
  out.gamma = out.delta.scaled(twoj) +
              out.eta.scaled_log(+1, std::log(2.0) - 2.0 * lch);
  out.gamma_over_delta = std::exp(out.gamma.log_mag - out.delta.log_mag);

  out.d_delta = out.gamma.scaled(std::tanh(xi));

  // d2 Delta = 4j(j+1) Delta - 4 m^2 Delta / cosh^2 - Gamma cosh(2xi)/cosh^2,
  // with cosh(2xi)/cosh^2 xi = 2 - sech^2 xi.
  const double log_ch2_ratio = std::log(2.0 - std::exp(-2.0 * lch));
  LogScaled d2 = out.delta.scaled(4.0 * j_jp1);
  if (two_m != 0)
    d2 = d2 + out.delta.scaled_log(-1, std::log(4.0 * m_sq) - 2.0 * lch);
  d2 = d2 + out.gamma.scaled_log(-1, log_ch2_ratio);
  out.d2_delta = d2;

  return out;
}

double delta_consistency(int two_j, int two_m, double xi) {
  check_quantum_numbers(two_j, two_m, "delta_consistency");
  xi = std::fabs(xi);
  const double half_pi = 2.0 * std::atan(1.0);

  std::vector<double> logs;
  logs.reserve(two_j + 1);
  for (int ip = 0; ip <= two_j; ++ip) {
    const int two_mp = 2 * ip - two_j;
    const double d = (double)wigner_d_quad(two_j, two_mp, two_m, half_pi);
    if (d == 0.0) {
      logs.push_back(kNegInf);
      continue;
    }
    logs.push_back(xi * two_mp + 2.0 * std::log(std::fabs(d)));
  }
  const double lhs = log_sum_exp(logs);
  const double rhs = series_bundle(two_j, two_m, xi).delta.log_mag;
  return std::fabs(std::expm1(lhs - rhs));
}

}  // namespace spinent
