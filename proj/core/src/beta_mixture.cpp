// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/beta_mixture.hpp"

#include <cmath>

#include "esf/error.hpp"
#include "esf/quadrature.hpp"
#include "esf/special.hpp"

namespace esf {

double beta_mixture_poisson_pmf(int l, int n, double theta, int k) {
  if (l < 2 || n < l || k < 0 || theta <= 0.0)
    throw DomainError("beta_mixture_poisson_pmf: need 2 <= l <= n, theta > 0, k >= 0");

  // ln of the Beta normalizer and the Poisson 1/k!.
  const double log_norm =
      log_gamma(n) - log_gamma(l - 1) - log_gamma(n - l + 1) - log_factorial(k);
  const double log_theta = std::log(theta);

  auto integrand = [&](double u) {
    if (u <= 0.0) return 0.0;
    // x = e^{-u}:  x^{l-2+theta} (1-x)^{n-l} (theta u)^k, all in log space.
    double lx = -u * (l - 1 + theta);
    if (n > l) lx += (n - l) * std::log1p(-std::exp(-u));
    if (k > 0) lx += k * (log_theta + std::log(u));
    return std::exp(lx + log_norm);
  };

  auto res = integrate_to_infinity(integrand, 0.0, 1e-12);
  double p = res.value;
  if (p < 0.0 && p > -1e-12) p = 0.0;
  return p;
}

}  // namespace esf
