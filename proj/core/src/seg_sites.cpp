// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/seg_sites.hpp"

#include <cmath>

#include "esf/error.hpp"
#include "esf/special.hpp"

namespace esf {

std::vector<double> seg_sites_pmf_row(int n, double theta, int s_max) {
  if (n < 1 || theta < 0.0 || s_max < 0)
    throw DomainError("seg_sites_pmf: need n >= 1, theta >= 0, s_max >= 0");
  std::vector<double> prev(s_max + 1, 0.0), cur(s_max + 1, 0.0);
  prev[0] = 1.0;  // S_1 == 0
  for (int m = 2; m <= n; ++m) {
    const double denom = m - 1 + theta;
    for (int s = 0; s <= s_max; ++s) {
      const double carry = (s >= 1) ? theta * cur[s - 1] : 0.0;
      cur[s] = (carry + (m - 1) * prev[s]) / denom;
    }
    std::swap(prev, cur);
  }
  return prev;
}

double seg_sites_pmf(int n, double theta, int s) {
  if (s < 0) throw DomainError("seg_sites_pmf: s must be >= 0");
  if (n == 1) return s == 0 ? 1.0 : 0.0;
  return seg_sites_pmf_row(n, theta, s)[s];
}

double seg_sites_pmf_series(int n, double theta, int s) {
  if (n < 2 || theta <= 0.0 || s < 0)
    throw DomainError("seg_sites_pmf_series: need n >= 2, theta > 0, s >= 0");
  // Exact binomials and powers in __float128; the alternating sum loses
  // up to ~2n/3 digits, which quad precision absorbs for n <= ~60.
  __float128 sum = 0;
  __float128 binom = 1;  // C(n-2, l-1), updated incrementally
  const __float128 th = theta;
  for (int l = 1; l <= n - 1; ++l) {
    __float128 base = th / (l + th);
    // base^(s+1) by binary exponentiation
    __float128 pw = 1, b = base;
    for (int e = s + 1; e > 0; e >>= 1) {
      if (e & 1) pw *= b;
      b *= b;
    }
    sum += (l % 2 == 1 ? pw : -pw) * binom;
    binom = binom * (n - 1 - l) / l;
  }
  sum *= (n - 1) / th;
  double v = static_cast<double>(sum);
  return v < 0.0 && v > -1e-25 ? 0.0 : v;
}

double num_alleles_pmf(int n, double theta, int k) {
  if (n < 1 || k < 1 || k > n || theta <= 0.0)
    throw DomainError("num_alleles_pmf: need 1 <= k <= n, theta > 0");
  const double lp =
      k * std::log(theta) + log_stirling1_unsigned(n, k) - log_rising_factorial(theta, n);
  return std::exp(lp);
}

double log_pgf_factor(int n, int lo, double theta_z) {
  double lp = 0.0;
  for (int j = lo; j <= n - 1; ++j) lp -= std::log1p(theta_z / j);
  return lp;
}

namespace detail {

std::complex<double> pgf_factor_complex(int n, int lo, std::complex<double> theta_z) {
  std::complex<double> p = 1.0;
  for (int j = lo; j <= n - 1; ++j) p /= (1.0 + theta_z / static_cast<double>(j));
  return p;
}

}  // namespace detail

}  // namespace esf
