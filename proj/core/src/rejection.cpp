// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/rejection.hpp"

#include <cmath>

#include "esf/coalescent.hpp"
#include "esf/error.hpp"
#include "esf/parallel.hpp"
#include "esf/special.hpp"

namespace esf {

double accept_probability(double theta, double total_length, int s) {
  if (theta <= 0.0 || total_length <= 0.0 || s < 0)
    throw DomainError("accept_probability: need theta > 0, L > 0, s >= 0");
  const double h =
      std::exp(log_poisson_pmf(0.5 * theta * total_length, s) - log_poisson_pmf(s, s));
  return h > 1.0 ? 1.0 : h;
}

namespace {

struct MomentPair {
  double sum = 0.0, sum_sq = 0.0;
  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  void merge(const MomentPair& other) {
    sum += other.sum;
    sum_sq += other.sum_sq;
  }
  double mean(std::uint64_t count) const { return count == 0 ? 0.0 : sum / count; }
  double se(std::uint64_t count) const {
    if (count < 2) return 0.0;
    const double m = mean(count);
    double var = (sum_sq / count - m * m) * static_cast<double>(count) / (count - 1);
    return var > 0.0 ? std::sqrt(var / count) : 0.0;
  }
};

struct RejAcc {
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  MomentPair tmrca, theta;
  std::vector<MomentPair> ancestors, standing;
  std::vector<PosteriorDraw> draws;
};

RejectionResult run_rejection(const RejectionOptions& opt, bool standing_sites) {
  if (opt.n < 2 || opt.s < 0 || opt.t_grid.empty() || opt.target_accepted < 1)
    throw DomainError("run_rejection: bad options");
  const std::size_t nt = opt.t_grid.size();

  auto make = [&] {
    RejAcc acc;
    acc.ancestors.resize(nt);
    acc.standing.resize(nt);
    return acc;
  };
  auto process = [&](RejAcc& acc, std::uint64_t index) {
    auto rng = seed_replicate_rng(opt.master_seed, index);
    ++acc.proposals;
    const double theta = opt.prior.sample(rng);
    const auto times = sample_coalescent_times(opt.n, opt.time_model, rng);
    const double h = accept_probability(theta, times.total_length, opt.s);
    if (rng.uniform() >= h) return;
    ++acc.accepted;
    acc.tmrca.add(times.height());
    acc.theta.add(theta);
    PosteriorDraw draw;
    draw.theta = theta;
    draw.tmrca = times.height();
    for (std::size_t i = 0; i < nt; ++i) {
      const int a = ancestor_count_at(times, opt.t_grid[i]);
      acc.ancestors[i].add(a);
      int standing_count = 0;
      if (standing_sites) {
        const auto lengths = tree_lengths_at(times, opt.t_grid[i]);
        const double p = lengths.ancient / times.total_length;
        for (int trial = 0; trial < opt.s; ++trial)
          if (rng.uniform() < p) ++standing_count;
        acc.standing[i].add(standing_count);
      }
      if (i == 0) {
        draw.ancestors = a;
        draw.standing_sites = standing_count;
      }
    }
    if (opt.keep_draws) acc.draws.push_back(draw);
  };
  auto merge = [&](RejAcc& into, RejAcc&& from) {
    into.proposals += from.proposals;
    into.accepted += from.accepted;
    into.tmrca.merge(from.tmrca);
    into.theta.merge(from.theta);
    for (std::size_t i = 0; i < nt; ++i) {
      into.ancestors[i].merge(from.ancestors[i]);
      into.standing[i].merge(from.standing[i]);
    }
    if (opt.keep_draws)
      into.draws.insert(into.draws.end(), from.draws.begin(), from.draws.end());
  };
  auto stop = [&](const RejAcc& acc) { return acc.accepted >= opt.target_accepted; };

  auto acc = run_batched<RejAcc>(opt.max_proposals, opt.threads, opt.batch_size, make, process,
                                 merge, stop);
  if (acc.accepted == 0)
    throw ZeroAcceptanceError(
        "rejection sampler: no acceptances; theta and s are likely incompatible", acc.proposals);

  RejectionResult res;
  res.accepted = acc.accepted;
  res.proposals = acc.proposals;
  res.acceptance_rate = static_cast<double>(acc.accepted) / static_cast<double>(acc.proposals);
  res.tmrca_mean = acc.tmrca.mean(acc.accepted);
  res.tmrca_se = acc.tmrca.se(acc.accepted);
  res.theta_mean = acc.theta.mean(acc.accepted);
  res.theta_se = acc.theta.se(acc.accepted);
  res.per_time.resize(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    auto& row = res.per_time[i];
    row.t = opt.t_grid[i];
    row.mean_ancestors = acc.ancestors[i].mean(acc.accepted);
    row.se_ancestors = acc.ancestors[i].se(acc.accepted);
    if (standing_sites) {
      row.mean_standing = acc.standing[i].mean(acc.accepted);
      row.se_standing = acc.standing[i].se(acc.accepted);
    }
  }
  res.draws = std::move(acc.draws);
  return res;
}

}  // namespace

RejectionResult run_algorithm3(const RejectionOptions& options) {
  return run_rejection(options, false);
}

RejectionResult run_algorithm4(const RejectionOptions& options) {
  return run_rejection(options, true);
}

}  // namespace esf
