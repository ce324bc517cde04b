// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace esf {

/// A real number stored as (sign, log|x|).  sign == 0 iff the value is
/// exactly zero, in which case log_magnitude is -inf by convention.
struct SignedLog {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static SignedLog zero() { return {}; }
  static SignedLog from_value(double x) {
    if (x == 0.0) return {};
    return {std::log(std::abs(x)), x > 0 ? +1 : -1};
  }
  static SignedLog from_log(double log_mag, int sign) {
    if (sign == 0) return {};
    return {log_mag, sign};
  }
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_magnitude); }
};

/// Result of a compensated signed-log summation together with a measure of
/// how much cancellation occurred: cancellation_digits is
/// log10(max-term magnitude / result magnitude), >= 0.
struct CancellationReport {
  SignedLog result;
  double max_term_log = -std::numeric_limits<double>::infinity();
  double cancellation_digits = 0.0;
};

/// Sums signed log-space terms by descending magnitude with Kahan
/// compensation.  Total cancellation yields sign == 0 and
/// cancellation_digits == +inf.
CancellationReport signed_log_sum(std::span<const SignedLog> terms);

inline CancellationReport signed_log_sum(const std::vector<SignedLog>& terms) {
  return signed_log_sum(std::span<const SignedLog>(terms));
}

/// log(exp(a) + exp(b)) without overflow.
inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double m = a > b ? a : b;
  return m + std::log1p(std::exp(-(std::abs(a - b))));
}

}  // namespace esf
