// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "esf/prior.hpp"
#include "esf/time_model.hpp"

namespace esf {

/// Acceptance probability h = Po(theta L_n / 2){s} / Po(s){s}.  The
/// denominator is the mode of Po(lambda){s} over lambda, so h <= 1.
double accept_probability(double theta, double total_length, int s);

/// One accepted draw from the posterior given S_n = s.  ancestors and
/// standing_sites refer to the first grid time; tmrca is the tree height.
struct PosteriorDraw {
  double theta = 0.0;
  int ancestors = 0;
  int standing_sites = 0;
  double tmrca = 0.0;
};

struct RejectionOptions {
  int n = 2;
  int s = 0;
  ThetaPrior prior = ThetaPrior::fixed(1.0);
  TimeModel time_model = TimeModel::constant();
  std::vector<double> t_grid = {0.0};
  std::uint64_t target_accepted = 10000;
  std::uint64_t master_seed = 1;
  unsigned threads = 1;                          // 0 = hardware default
  std::uint64_t max_proposals = 100'000'000ull;  // zero-acceptance guard
  std::uint64_t batch_size = 4096;
  bool keep_draws = false;
};

struct RejectionTimeSummary {
  double t = 0.0;
  double mean_ancestors = 0.0, se_ancestors = 0.0;
  double mean_standing = 0.0, se_standing = 0.0;  // Algorithm 4 only
};

struct RejectionResult {
  std::vector<RejectionTimeSummary> per_time;
  double tmrca_mean = 0.0, tmrca_se = 0.0;
  double theta_mean = 0.0, theta_se = 0.0;
  std::uint64_t accepted = 0;
  std::uint64_t proposals = 0;
  double acceptance_rate = 0.0;
  std::vector<PosteriorDraw> draws;  // filled when keep_draws
};

/// Algorithm 3: posterior of (theta, A_n(t)) given S_n = s on the grid.
RejectionResult run_algorithm3(const RejectionOptions& options);

/// Algorithm 4: additionally splits s into standing sites at each grid time
/// via Binomial(s, L_n(t)/L_n) on every accepted tree.
RejectionResult run_algorithm4(const RejectionOptions& options);

}  // namespace esf
