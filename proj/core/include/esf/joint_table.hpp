// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace esf {

/// Stationary joint law p(i, j; a_theta, a) of the mutation count i and
/// allele count j accumulated between the state with a lines (a_theta of
/// them never-mutant) and the single common ancestor.  p(i, j; n, n) is the
/// joint pmf of (S_n, K_n).
class JointMutAlleleTable {
 public:
  JointMutAlleleTable(int n, double theta, int i_max);

  int n() const { return n_; }
  double theta() const { return theta_; }
  int i_max() const { return i_max_; }

  /// p(i, j; a_theta, a); zero outside the stored/feasible range.
  double prob(int i, int j, int a_theta, int a) const;

  /// p(i, j; n, n) = P(S_n = i, K_n = j).
  double prob(int i, int j) const { return prob(i, j, n_, n_); }

  /// Marginals of the (n, n) slice over j and i respectively.
  std::vector<double> marginal_mutations() const;
  std::vector<double> marginal_alleles() const;

  /// Total stored mass of the (n, n) slice (1 minus the truncated tail).
  double stored_mass() const;

 private:
  int slot(int a_theta, int a) const { return a * (a - 1) / 2 + (a_theta - 1); }
  double& cell(std::vector<double>& m, int i, int j, int a_theta) const {
    return m[static_cast<std::size_t>(i) * a_theta + (j - 1)];
  }
  double cell(const std::vector<double>& m, int i, int j, int a_theta) const {
    return m[static_cast<std::size_t>(i) * a_theta + (j - 1)];
  }

  int n_;
  double theta_;
  int i_max_;
  // grids_[slot(a_theta, a)]: row-major (i = 0..i_max, j = 1..a_theta).
  std::vector<std::vector<double>> grids_;
};

/// Builds the table, growing i_max geometrically until the truncated tail
/// mass of the (n, n) slice is below tail_tol.
JointMutAlleleTable joint_mut_allele_table(int n, double theta, double tail_tol = 1e-10);

}  // namespace esf
