// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

namespace esf {

/// Sample size marker for the whole-population (infinite-n) coalescent.
inline constexpr int kInfiniteN = -1;

/// Parameters of the ancestral line-count laws: sample size n (or
/// kInfiniteN), scaled mutation rate theta >= 0, and time t >= 0 in
/// coalescent units.
struct LineageLawParams {
  int n = 2;
  double theta = 0.0;
  double t = 0.0;

  bool infinite_n() const { return n == kInfiniteN; }
};

/// P(A_n^theta(t) = k): the probability that k ancestral lines of the
/// sample carry no mutation in (0, t).  theta = 0 gives the plain ancestor
/// count A_n(t).  k = 0 is the fully absorbed state (positive probability
/// only when theta > 0).
///
/// Evaluated from the alternating series; terms are summed by descending
/// magnitude with compensation, retried in quadruple precision when more
/// than 12 digits cancel, and a PrecisionLossError is thrown when even
/// that leaves fewer than ~8 reliable digits.
double ancestors_pmf(const LineageLawParams& params, int k);

/// Falling factorial moment E[A_n^theta(t)_[r]], r >= 1.
double ancestors_falling_moment(const LineageLawParams& params, int r);

/// Density of T_n^theta + ... + T_l^theta at t (the time the theta-killed
/// line count first drops below l):
/// f_nl(t) = l (l + theta - 1) / 2 * P(A_n^theta(t) = l), 2 <= l <= n.
double event_time_density(const LineageLawParams& params, int l);

namespace detail {

/// trnQ series with complex theta (used for pgf coefficient extraction
/// on the unit circle).  No cancellation guard: callers control use.
std::complex<double> ancestors_pmf_complex(int n, std::complex<double> theta, double t, int k);

/// E[A_n^theta(t)] for complex theta (falling moment of order 1).
std::complex<double> ancestors_mean_complex(int n, std::complex<double> theta, double t);

}  // namespace detail

}  // namespace esf
