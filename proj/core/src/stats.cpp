// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/stats.hpp"

#include <cmath>

#include "esf/error.hpp"
#include "esf/special.hpp"

namespace esf {

FrequencySpectrum FrequencySpectrum::from_counts(const std::vector<int>& counts) {
  FrequencySpectrum sp;
  for (int c : counts) {
    if (c < 1) throw DomainError("FrequencySpectrum: counts must be positive");
    ++sp.alpha[c];
    sp.n += c;
  }
  return sp;
}

int FrequencySpectrum::num_haplotypes() const {
  int k = 0;
  for (const auto& [mult, count] : alpha) k += count;
  return k;
}

void FrequencySpectrum::validate() const {
  int total = 0;
  for (const auto& [mult, count] : alpha) {
    if (mult < 1 || count < 0) throw DomainError("FrequencySpectrum: invalid entry");
    total += mult * count;
  }
  if (total != n) throw DomainError("FrequencySpectrum: sum j alpha_j != n");
}

double watterson_theta(int s, int n) {
  if (n < 2 || s < 0) throw DomainError("watterson_theta: need n >= 2, s >= 0");
  double h = 0.0;
  for (int j = 1; j < n; ++j) h += 1.0 / j;
  return s / h;
}

double ewens_mle_theta(int k, int n) {
  if (k <= 1 || k >= n)
    throw DomainError("ewens_mle_theta: k on the boundary (k = 1 or k = n) has no finite MLE");
  auto expected_k = [n](double theta) {
    double e = 1.0;
    for (int j = 1; j < n; ++j) e += theta / (theta + j);
    return e;
  };
  double lo = 1e-12, hi = 1.0;
  while (expected_k(hi) < k) hi *= 2.0;
  // expected_k is strictly increasing in theta, so the bracket stays valid.
  while ((hi - lo) > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    (expected_k(mid) < k ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double expected_singletons(int n, double theta) {
  if (n < 1 || theta < 0.0) throw DomainError("expected_singletons: bad arguments");
  return n * theta / (n + theta - 1);
}

double tajimas_d(double pi, int s, int n) {
  if (n < 4) throw DomainError("tajimas_d: need n >= 4");
  if (s <= 0) throw DomainError("tajimas_d: undefined for s = 0");
  double a1 = 0.0, a2 = 0.0;
  for (int i = 1; i < n; ++i) {
    a1 += 1.0 / i;
    a2 += 1.0 / (static_cast<double>(i) * i);
  }
  const double b1 = (n + 1.0) / (3.0 * (n - 1.0));
  const double b2 = 2.0 * (n * n + n + 3.0) / (9.0 * n * (n - 1.0));
  const double c1 = b1 - 1.0 / a1;
  const double c2 = b2 - (n + 2.0) / (a1 * n) + a2 / (a1 * a1);
  const double e1 = c1 / a1;
  const double e2 = c2 / (a1 * a1 + a2);
  const double var = e1 * s + e2 * static_cast<double>(s) * (s - 1.0);
  return (pi - s / a1) / std::sqrt(var);
}

double pairwise_diff_from_sfs(const std::vector<int>& xi, int n) {
  if (n < 2) throw DomainError("pairwise_diff_from_sfs: need n >= 2");
  double num = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const double copies = static_cast<double>(i + 1);
    num += copies * (n - copies) * xi[i];
  }
  return num / (0.5 * n * (n - 1.0));
}

double poisson_spectrum_approx(int n, double theta, int j) {
  if (n < 1 || theta < 0.0 || j < 1) throw DomainError("poisson_spectrum_approx: bad arguments");
  return theta / j * std::pow(static_cast<double>(n) / (n + theta), j);
}

double poisson_tail_test(int observed, double mean) {
  if (mean <= 0.0 || observed < 0) throw DomainError("poisson_tail_test: need mean > 0");
  if (observed == 0) return 1.0;
  if (observed > mean) {
    // Upper tail directly: terms shrink geometrically from s = observed.
    const double log_first = log_poisson_pmf(mean, observed);
    double term = 1.0, sum = 0.0;
    for (int s = observed;; ++s) {
      sum += term;
      term *= mean / (s + 1);
      if (term < sum * 1e-18) break;
    }
    const double tail = std::exp(log_first + std::log(sum));
    return tail > 1.0 ? 1.0 : tail;
  }
  // Complement of the lower tail, summed downward from s = observed - 1 so
  // the relative terms never grow.
  const double log_first = log_poisson_pmf(mean, observed - 1);
  double term = 1.0, sum = 0.0;
  for (int s = observed - 1; s >= 0; --s) {
    sum += term;
    term *= s / mean;
  }
  const double lower = std::exp(log_first + std::log(sum));
  return lower >= 1.0 ? 0.0 : 1.0 - lower;
}

FactorialMomentPair factorial_moment_check(int n, double theta, const std::vector<int>& r) {
  if (n < 1 || theta <= 0.0) throw DomainError("factorial_moment_check: bad arguments");
  long long m = 0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] < 0) throw DomainError("factorial_moment_check: negative order");
    m += static_cast<long long>(j + 1) * r[j];
  }
  FactorialMomentPair out;
  double log_limit = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] > 0)
      log_limit += r[j] * (std::log(theta / (j + 1)) +
                           static_cast<double>(j + 1) *
                               std::log(static_cast<double>(n) / (n + theta)));
  out.limit = std::exp(log_limit);
  if (m > n) {
    out.exact = 0.0;
    return out;
  }
  // n! Gamma(theta+n-m) / ((n-m)! Gamma(theta+n)) * prod (theta/j)^{r_j}
  double lp = log_factorial(n) - log_factorial(n - static_cast<int>(m));
  lp += log_gamma(theta + n - m) - log_gamma(theta + n);
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] > 0) lp += r[j] * std::log(theta / (j + 1));
  out.exact = std::exp(lp);
  return out;
}

}  // namespace esf
