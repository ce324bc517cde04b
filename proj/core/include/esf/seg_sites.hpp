// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

namespace esf {

/// P(S_n = s) for the number of segregating sites in a stationary sample
/// of n, via the stable two-index recursion
///   (n - 1 + theta) P(S_n = s) = theta P(S_n = s-1) + (n - 1) P(S_{n-1} = s)
/// with P(S_1 = s) = [s == 0].
double seg_sites_pmf(int n, double theta, int s);

/// Full row P(S_n = 0..s_max), one recursion sweep.
std::vector<double> seg_sites_pmf_row(int n, double theta, int s_max);

/// The same probability from the alternating closed form
///   (n-1)/theta * sum_{l=1}^{n-1} (-1)^{l-1} C(n-2, l-1) (theta/(l+theta))^{s+1},
/// evaluated in quadruple precision (the sum cancels catastrophically in
/// doubles once n is moderate).  Intended as an independent cross-check of
/// the recursion.
double seg_sites_pmf_series(int n, double theta, int s);

/// P(K_n = k) = theta^k |S_k^n| / theta_(n), 1 <= k <= n, theta > 0.
double num_alleles_pmf(int n, double theta, int k);

/// ln prod_{j=lo}^{n-1} (1 + theta_z/j)^{-1}: the mutation-count pgf
/// factor shared by the joint laws; lo = 1 gives ln H_n at theta_z.
double log_pgf_factor(int n, int lo, double theta_z);

namespace detail {
/// Same product for complex theta_z (pgf evaluation on the unit circle).
std::complex<double> pgf_factor_complex(int n, int lo, std::complex<double> theta_z);
}  // namespace detail

}  // namespace esf
