#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace spinent {

/// Sign + log-magnitude representation of a real value.  Keeps quantities
/// like 100! or e^{150} exact to double precision where a plain double
/// would overflow.
struct LogScaled {
  int sign = 0;  // -1, 0, +1
  double log_mag = -std::numeric_limits<double>::infinity();

  static LogScaled zero() { return {}; }

  static LogScaled from_real(double x) {
    if (x == 0.0) return {};
    return {x > 0.0 ? +1 : -1, std::log(std::fabs(x))};
  }

  static LogScaled from_log(int sign, double log_mag) {
    if (sign == 0 || log_mag == -std::numeric_limits<double>::infinity())
      return {};
    return {sign, log_mag};
  }

  double to_real() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }
  bool is_zero() const { return sign == 0; }

  /// Multiply by an ordinary real factor.
  LogScaled scaled(double f) const {
    if (sign == 0 || f == 0.0) return {};
    return {f > 0.0 ? sign : -sign, log_mag + std::log(std::fabs(f))};
  }

  /// Multiply by a factor given as sign and log of absolute value.
  LogScaled scaled_log(int fsign, double flog) const {
    if (sign == 0 || fsign == 0) return {};
    return {fsign > 0 ? sign : -sign, log_mag + flog};
  }

  friend LogScaled operator-(const LogScaled& a) {
    return {-a.sign, a.log_mag};
  }

  friend LogScaled operator*(const LogScaled& a, const LogScaled& b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.sign * b.sign, a.log_mag + b.log_mag};
  }

  friend LogScaled operator/(const LogScaled& a, const LogScaled& b) {
    if (a.sign == 0) return {};
    return {a.sign * b.sign, a.log_mag - b.log_mag};
  }

  // Signed log-sum-exp: anchor at the larger magnitude, resolve the sign
  // from it.  Exact cancellation of equal magnitudes yields zero.
  friend LogScaled operator+(const LogScaled& a, const LogScaled& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const LogScaled& hi = (a.log_mag >= b.log_mag) ? a : b;
    const LogScaled& lo = (a.log_mag >= b.log_mag) ? b : a;
    if (a.sign == b.sign)
      return {a.sign, hi.log_mag + std::log1p(std::exp(lo.log_mag - hi.log_mag))};
    if (a.log_mag == b.log_mag) return {};
    return {hi.sign,
            hi.log_mag + std::log1p(-std::exp(lo.log_mag - hi.log_mag))};
  }

  friend LogScaled operator-(const LogScaled& a, const LogScaled& b) {
    return a + (-b);
  }
};

/// log(sum(exp(logs))) over nonnegative terms given by their logs.
/// -inf entries are permitted and contribute nothing.
inline double log_sum_exp(const std::vector<double>& logs) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double l : logs) mx = std::max(mx, l);
  if (mx == -std::numeric_limits<double>::infinity()) return mx;
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - mx);
  return mx + std::log(acc);
}

}  // namespace spinent
