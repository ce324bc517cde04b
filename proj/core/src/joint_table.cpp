// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/joint_table.hpp"

#include <cmath>

#include "esf/error.hpp"

namespace esf {

JointMutAlleleTable::JointMutAlleleTable(int n, double theta, int i_max)
    : n_(n), theta_(theta), i_max_(i_max) {
  if (n < 1 || theta <= 0.0 || i_max < 0)
    throw DomainError("JointMutAlleleTable: need n >= 1, theta > 0, i_max >= 0");
  grids_.resize(slot(n, n) + 1);
  const std::size_t rows = static_cast<std::size_t>(i_max) + 1;

  for (int a = 1; a <= n_; ++a) {
    for (int at = 1; at <= a; ++at) {
      auto& g = grids_[slot(at, a)];
      g.assign(rows * at, 0.0);
      if (at == 1 && a == 1) {
        cell(g, 0, 1, at) = 1.0;  // p(i,1;1,1) = [i == 0]
        continue;
      }
      if (at == 1) {
        // (a + theta - 1) p(i,1;1,a) = (a-1) p(i,1;1,a-1) + theta p(i-1,1;1,a)
        const auto& below = grids_[slot(1, a - 1)];
        for (int i = 0; i <= i_max_; ++i) {
          double rhs = (a - 1) * cell(below, i, 1, 1);
          if (i >= 1) rhs += theta_ * cell(g, i - 1, 1, at);
          cell(g, i, 1, at) = rhs / (a + theta_ - 1);
        }
        continue;
      }
      // General state, a >= a_theta >= 2.
      const double denom = a * (a - 1 + theta_);
      const double mut_b = (a - at) * theta_;
      const double coal_b = static_cast<double>(a + at - 1) * (a - at);
      const double mut_new = at * theta_;
      const double coal_t = static_cast<double>(at) * (at - 1);
      const auto* same_a_below = &grids_[slot(at - 1, a)];
      const auto* diag = &grids_[slot(at - 1, a - 1)];
      const auto* left = (at <= a - 1) ? &grids_[slot(at, a - 1)] : nullptr;
      for (int i = 0; i <= i_max_; ++i) {
        for (int j = 1; j <= at; ++j) {
          double rhs = 0.0;
          if (i >= 1) rhs += mut_b * cell(g, i - 1, j, at);
          if (left != nullptr) rhs += coal_b * cell(*left, i, j, at);
          if (i >= 1 && j >= 2 && j - 1 <= at - 1)
            rhs += mut_new * cell(*same_a_below, i - 1, j - 1, at - 1);
          if (j <= at - 1) rhs += coal_t * cell(*diag, i, j, at - 1);
          cell(g, i, j, at) = rhs / denom;
        }
      }
    }
  }
}

double JointMutAlleleTable::prob(int i, int j, int a_theta, int a) const {
  if (i < 0 || i > i_max_ || a < 1 || a > n_ || a_theta < 1 || a_theta > a) return 0.0;
  if (j < 1 || j > a_theta) return 0.0;
  return cell(grids_[slot(a_theta, a)], i, j, a_theta);
}

std::vector<double> JointMutAlleleTable::marginal_mutations() const {
  std::vector<double> out(i_max_ + 1, 0.0);
  for (int i = 0; i <= i_max_; ++i)
    for (int j = 1; j <= n_; ++j) out[i] += prob(i, j);
  return out;
}

std::vector<double> JointMutAlleleTable::marginal_alleles() const {
  std::vector<double> out(n_ + 1, 0.0);
  for (int j = 1; j <= n_; ++j)
    for (int i = 0; i <= i_max_; ++i) out[j] += prob(i, j);
  return out;
}

double JointMutAlleleTable::stored_mass() const {
  double m = 0.0;
  for (int i = 0; i <= i_max_; ++i)
    for (int j = 1; j <= n_; ++j) m += prob(i, j);
  return m;
}

JointMutAlleleTable joint_mut_allele_table(int n, double theta, double tail_tol) {
  // Start near the mean of S_n plus a sampling-noise margin, then grow.
  double mean = theta * (std::log(std::max(n, 2)) + 1.0);
  int i_max = static_cast<int>(mean + 10.0 * std::sqrt(mean + 1.0)) + 16;
  for (int attempt = 0; attempt < 24; ++attempt) {
    JointMutAlleleTable table(n, theta, i_max);
    if (1.0 - table.stored_mass() < tail_tol) return table;
    i_max += i_max / 2 + 8;
  }
  throw DomainError("joint_mut_allele_table: tail tolerance unreachable");
}

}  // namespace esf
