// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/haplotype.hpp"

#include <cmath>
#include <numeric>

#include "esf/error.hpp"
#include "esf/special.hpp"

namespace esf {

int HaplotypeConfig::n() const { return std::accumulate(counts.begin(), counts.end(), 0); }

std::map<int, int> HaplotypeConfig::multiplicity_spectrum() const {
  std::map<int, int> alpha;
  for (int c : counts) ++alpha[c];
  return alpha;
}

double HaplotypeConfig::log_prod_alpha_factorials() const {
  double lp = 0.0;
  for (const auto& [mult, count] : multiplicity_spectrum()) lp += log_factorial(count);
  return lp;
}

void HaplotypeConfig::validate() const {
  if (counts.empty()) throw DomainError("HaplotypeConfig: no haplotypes");
  for (int c : counts)
    if (c < 1) throw DomainError("HaplotypeConfig: counts must be positive");
}

double esf_log_probability(const HaplotypeConfig& config, double theta) {
  config.validate();
  if (theta <= 0.0) throw DomainError("esf_log_probability: theta must be > 0");
  const int n = config.n();
  const int k = config.k();
  double lp = log_factorial(n) + k * std::log(theta) - log_rising_factorial(theta, n);
  for (int c : config.counts) lp -= std::log(static_cast<double>(c));
  lp -= config.log_prod_alpha_factorials();
  return lp;
}

}  // namespace esf
