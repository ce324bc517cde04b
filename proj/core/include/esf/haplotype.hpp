// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

namespace esf {

/// Observed haplotype counts in input order; the position of each count is
/// the haplotype's identity label throughout a run.
struct HaplotypeConfig {
  std::vector<int> counts;

  int n() const;
  int k() const { return static_cast<int>(counts.size()); }

  /// alpha_j = number of haplotypes with multiplicity j.
  std::map<int, int> multiplicity_spectrum() const;

  /// ln prod_j alpha_j! — the age-labelled-to-unordered conversion factor.
  double log_prod_alpha_factorials() const;

  void validate() const;  // throws DomainError on empty or nonpositive counts
};

/// The conditioning datum: haplotype counts plus segregating sites.
struct ObservedSample {
  HaplotypeConfig config;
  int s = 0;

  /// p(n; s) = 0 unless s >= k - 1.
  bool feasible() const { return s >= config.k() - 1; }
};

/// ln of the unordered Ewens Sampling Formula probability of the
/// configuration: n! theta^k / (prod n_j * prod alpha_j! * theta_(n)).
double esf_log_probability(const HaplotypeConfig& config, double theta);

}  // namespace esf
