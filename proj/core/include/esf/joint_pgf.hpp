// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "esf/lineage.hpp"

namespace esf {

/// G_l(z; t): joint pgf of the number of mutations arising in (0, t) and
/// the probability that l ancestors remain at t,
///   G_l(z;t) = prod_{j=l}^{n-1} (1 + theta_z/j)^{-1} P(A_n^{theta_z}(t) = l),
/// with theta_z = theta (1 - z).  Requires 2 <= l <= n, 0 <= z <= 1.
double mut_anc_joint_pgf(const LineageLawParams& params, int l, double z);

/// G*_l(z, t): pgf/probability of the stationary mutation count and l
/// ancestors at t,
///   G*_l(z,t) = prod_{j=2}^{n-1} (1 + theta_z/j)^{-1} P(A_n^{theta_z}(t) = l).
/// l ranges over 0..n so that the sum over l recovers the product factor
/// exactly (l = 0 holds the mass absorbed by the theta_z-killed process).
double stationary_joint_pgf_prob(const LineageLawParams& params, int l, double z);

/// Coefficient tables a, b, c used by the conditional-mean inversion.
/// a(r, k) is the coefficient of z^r in
///   M(k, z) = H_n(z) (n + theta_z)_(k)^{-1},
/// satisfying (n+theta+k-1) a(r,k) = theta a(r-1,k) + a(r,k-1) with
/// a(r, 0) = P(S_n = r); b(r,k) = (2k+theta-1) a(r,k) - theta a(r-1,k);
/// c(r,k) convolves b against a Poisson(k theta t / 2) kernel.
struct CondMeanTables {
  int n = 0;
  double theta = 0.0;
  double t = 0.0;
  int r_max = 0;
  // Row-major (r, k) with k = 0..n.
  std::vector<double> a, b, c;

  double& at(std::vector<double>& m, int r, int k) { return m[r * (n + 1) + k]; }
  double at(const std::vector<double>& m, int r, int k) const { return m[r * (n + 1) + k]; }
};

/// Builds the a/b/c tables for r = 0..r_max.
CondMeanTables build_cond_mean_tables(int n, double theta, double t, int r_max);

/// E[A_n(t) | S_n = r]: conditional mean number of ancestral lines given r
/// segregating sites, in [1, n].  Combines the table inversion with the
/// post-MRCA boundary mass [z^r] { H_n(z) P(A_n^{theta_z}(t) = 0) }, which
/// the tables alone do not carry (without it the t -> infinity limit is 0
/// rather than 1).
double cond_mean_ancestors(int n, double theta, double t, int r);

namespace detail {
/// [z^r] { H_n(z) q_{n0}^{theta(1-z)}(t) } by unit-circle DFT.
double cond_mean_boundary_coefficient(int n, double theta, double t, int r);
}  // namespace detail

}  // namespace esf
