// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace esf {

/// ln Gamma(x), x > 0.
inline double log_gamma(double x) { return std::lgamma(x); }

/// ln n!
inline double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

/// ln C(n, k); 0 <= k <= n.
inline double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

/// ln of the rising factorial x(x+1)...(x+n-1); n = 0 gives 0.
/// Every factor x+j must be positive.
double log_rising_factorial(double x, int n);

/// ln of the falling factorial x(x-1)...(x-n+1); n = 0 gives 0.
double log_falling_factorial(double x, int n);

/// ln |S_k^n| for unsigned Stirling numbers of the first kind,
/// 1 <= k <= n, via the triangular recurrence carried in log space.
/// Rows are cached; thread-safe.
double log_stirling1_unsigned(int n, int k);

/// ln Po(lambda){s} = -lambda + s ln(lambda) - ln s!.
/// lambda = 0 gives 0 for s = 0 and -inf otherwise.
double log_poisson_pmf(double lambda, int s);

}  // namespace esf
