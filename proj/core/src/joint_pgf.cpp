// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/joint_pgf.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "esf/error.hpp"
#include "esf/seg_sites.hpp"
#include "esf/special.hpp"

namespace esf {

namespace {

void check_z(double z) {
  if (z < 0.0 || z > 1.0) throw DomainError("joint pgf: z must lie in [0, 1]");
}

}  // namespace

double mut_anc_joint_pgf(const LineageLawParams& params, int l, double z) {
  check_z(z);
  if (l < 2 || l > params.n) throw DomainError("mut_anc_joint_pgf: need 2 <= l <= n");
  const double theta_z = params.theta * (1.0 - z);
  LineageLawParams killed{params.n, theta_z, params.t};
  return std::exp(log_pgf_factor(params.n, l, theta_z)) * ancestors_pmf(killed, l);
}

double stationary_joint_pgf_prob(const LineageLawParams& params, int l, double z) {
  check_z(z);
  if (l < 0 || l > params.n) throw DomainError("stationary_joint_pgf_prob: need 0 <= l <= n");
  const double theta_z = params.theta * (1.0 - z);
  LineageLawParams killed{params.n, theta_z, params.t};
  return std::exp(log_pgf_factor(params.n, 2, theta_z)) * ancestors_pmf(killed, l);
}

CondMeanTables build_cond_mean_tables(int n, double theta, double t, int r_max) {
  if (n < 1 || theta <= 0.0 || t < 0.0 || r_max < 0)
    throw DomainError("build_cond_mean_tables: bad parameters");
  CondMeanTables tb;
  tb.n = n;
  tb.theta = theta;
  tb.t = t;
  tb.r_max = r_max;
  tb.a.assign((r_max + 1) * (n + 1), 0.0);
  tb.b.assign((r_max + 1) * (n + 1), 0.0);
  tb.c.assign((r_max + 1) * (n + 1), 0.0);

  auto seg = seg_sites_pmf_row(n, theta, r_max);
  for (int r = 0; r <= r_max; ++r) tb.at(tb.a, r, 0) = seg[r];
  for (int k = 1; k <= n; ++k) {
    for (int r = 0; r <= r_max; ++r) {
      const double up = (r >= 1) ? theta * tb.at(tb.a, r - 1, k) : 0.0;
      tb.at(tb.a, r, k) = (up + tb.at(tb.a, r, k - 1)) / (n + theta + k - 1);
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int r = 0; r <= r_max; ++r) {
      const double prev = (r >= 1) ? tb.at(tb.a, r - 1, k) : 0.0;
      tb.at(tb.b, r, k) = (2 * k + theta - 1) * tb.at(tb.a, r, k) - theta * prev;
    }
  }
  for (int k = 1; k <= n; ++k) {
    const double lam = 0.5 * k * theta * t;
    for (int r = 0; r <= r_max; ++r) {
      double pois = std::exp(-lam);
      double acc = 0.0;
      for (int m = 0; m <= r; ++m) {
        acc += pois * tb.at(tb.b, r - m, k);
        pois *= lam / (m + 1);
      }
      tb.at(tb.c, r, k) = acc;
    }
  }
  return tb;
}

namespace detail {

double cond_mean_boundary_coefficient(int n, double theta, double t, int r) {
  // Pad the transform length beyond the effective support of S_n so that
  // aliased mass is negligible.
  const double mean = theta * (std::log(static_cast<double>(std::max(n, 2))) + 1.0);
  int need = r + 1 + static_cast<int>(mean + 20.0 * std::sqrt(mean + 1.0) + 64.0);
  int len = 64;
  while (len < need) len *= 2;

  std::complex<double> acc = 0.0;
  for (int m = 0; m < len; ++m) {
    const double phi = 2.0 * std::numbers::pi * m / len;
    const std::complex<double> z{std::cos(phi), std::sin(phi)};
    const std::complex<double> theta_z = theta * (1.0 - z);
    const std::complex<double> f =
        pgf_factor_complex(n, 1, theta_z) * ancestors_pmf_complex(n, theta_z, t, 0);
    const double ang = -phi * r;
    acc += f * std::complex<double>{std::cos(ang), std::sin(ang)};
  }
  // The coefficient is a signed correction (q_0 at complex theta_z has
  // signed series coefficients), so no clamping here.
  return acc.real() / len;
}

}  // namespace detail

double cond_mean_ancestors(int n, double theta, double t, int r) {
  if (n < 1 || theta <= 0.0 || t < 0.0 || r < 0)
    throw DomainError("cond_mean_ancestors: bad parameters");
  if (n == 1) return 1.0;
  if (t == 0.0) return static_cast<double>(n);

  const double p_s = seg_sites_pmf(n, theta, r);
  if (p_s < 1e-300)
    throw DomainError("cond_mean_ancestors: P(S_n = r) is numerically negligible");

  auto tb = build_cond_mean_tables(n, theta, t, r);
  double num = 0.0;
  double log_fall = 0.0;  // ln n_[k]
  for (int k = 1; k <= n; ++k) {
    log_fall += std::log(static_cast<double>(n - k + 1));
    const double rho = std::exp(-0.5 * k * (k - 1) * t + log_fall);
    num += rho * tb.at(tb.c, r, k);
  }
  num += detail::cond_mean_boundary_coefficient(n, theta, t, r);
  const double v = num / p_s;
  return std::clamp(v, 1.0, static_cast<double>(n));
}

}  // namespace esf
