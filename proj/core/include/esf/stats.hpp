// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

namespace esf {

/// Haplotype multiplicity spectrum: alpha[j] = number of haplotypes carried
/// by exactly j individuals; sum j alpha_j = n.
struct FrequencySpectrum {
  std::map<int, int> alpha;
  int n = 0;

  static FrequencySpectrum from_counts(const std::vector<int>& counts);
  int num_haplotypes() const;
  void validate() const;
};

/// Watterson's estimator s / sum_{j=1}^{n-1} 1/j.
double watterson_theta(int s, int n);

/// Maximum-likelihood theta from the number of alleles k in a sample of n:
/// the root of k = 1 + sum_{j=1}^{n-1} theta/(theta+j), by bisection to
/// 1e-10 relative.  k = 1 and k = n lie on the boundary and are rejected.
double ewens_mle_theta(int k, int n);

/// E[alpha_1] = n theta / (n + theta - 1) under the ESF.
double expected_singletons(int n, double theta);

/// Tajima's D from the mean pairwise difference pi, segregating sites s,
/// and sample size n, using the standard variance constants
/// (a1, a2, b1, b2, c1, c2, e1, e2).  s = 0 is undefined.
double tajimas_d(double pi, int s, int n);

/// Mean pairwise differences from a site frequency spectrum xi[i] = number
/// of sites where the derived allele has i copies (i = 1..n-1):
/// pi = sum_i i (n - i) xi_i / C(n, 2).
double pairwise_diff_from_sfs(const std::vector<int>& xi, int n);

/// Large-theta Poisson limit of the spectrum: E[Z_j^theta] =
/// (theta / j) (n / (n + theta))^j.
double poisson_spectrum_approx(int n, double theta, int j);

/// Exact Poisson upper tail P(Z >= observed) for Z ~ Po(mean).
double poisson_tail_test(int observed, double mean);

struct FactorialMomentPair {
  double exact = 0.0;  // ESF joint falling factorial moment
  double limit = 0.0;  // independent-Poisson limit product
};

/// Joint falling factorial moment E prod_j (alpha_j)_[r_j] of the spectrum
/// under the ESF, and its large-theta limit.  r[j-1] is the order for
/// alpha_j, j = 1..b.
FactorialMomentPair factorial_moment_check(int n, double theta, const std::vector<int>& r);

}  // namespace esf
