// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <vector>

#include "esf/error.hpp"
#include "esf/joint_pgf.hpp"
#include "esf/quadrature.hpp"
#include "esf/rejection.hpp"
#include "esf/rng.hpp"
#include "esf/special.hpp"

using namespace esf;

TEST_CASE("accept_probability anchors and bound") {
  // Numerator at its mode: h = 1 when theta L / 2 == s.
  CHECK(accept_probability(2.0, 9.0, 9) == doctest::Approx(1.0));
  for (double theta : {0.3, 1.0, 4.0}) {
    for (double len : {0.5, 2.0, 19.0}) {
      CHECK(accept_probability(theta, len, 0) ==
            doctest::Approx(std::exp(-0.5 * theta * len)).epsilon(1e-12));
    }
  }
  const double direct = std::exp(log_poisson_pmf(10.0, 9) - log_poisson_pmf(9.0, 9));
  CHECK(accept_probability(2.5, 8.0, 9) == doctest::Approx(direct).epsilon(1e-12));

  Xoshiro256pp rng(3);
  for (int r = 0; r < 5000; ++r) {
    const double theta = 0.01 + rng.uniform() * 40.0;
    const double len = 0.01 + rng.uniform() * 50.0;
    const int s = static_cast<int>(rng.below(40));
    CHECK(accept_probability(theta, len, s) <= 1.0 + 1e-15);
  }
}

TEST_CASE("algorithm 3 conditional mean matches the exact inversion") {
  RejectionOptions opt;
  opt.n = 6;
  opt.s = 3;
  opt.prior = ThetaPrior::fixed(1.0);
  opt.t_grid = {0.5};
  opt.target_accepted = 60000;
  opt.master_seed = 20250;
  opt.threads = 0;
  auto res = run_algorithm3(opt);
  REQUIRE(res.accepted >= opt.target_accepted);
  const double exact = cond_mean_ancestors(6, 1.0, 0.5, 3);
  CHECK(std::abs(res.per_time[0].mean_ancestors - exact) < 4.0 * res.per_time[0].se_ancestors);
}

TEST_CASE("algorithm 4 splits standing sites consistently") {
  RejectionOptions opt;
  opt.n = 8;
  opt.s = 5;
  opt.prior = ThetaPrior::fixed(2.0);
  opt.t_grid = {0.0, 50.0};
  opt.target_accepted = 4000;
  opt.master_seed = 9;
  auto res = run_algorithm4(opt);
  // t = 0: all sites standing; far beyond the TMRCA: none.
  CHECK(res.per_time[0].mean_standing == doctest::Approx(5.0));
  CHECK(res.per_time[0].se_standing == 0.0);
  CHECK(res.per_time[1].mean_standing == doctest::Approx(0.0));
  CHECK(res.per_time[0].mean_ancestors == doctest::Approx(8.0));
  CHECK(res.per_time[1].mean_ancestors == doctest::Approx(1.0));
}

TEST_CASE("uniform-prior posterior of theta matches the grid posterior (n = 2)") {
  // P(S_2 = 2 | theta) = theta^2 / (1 + theta)^3; prior U(0, 10).
  RejectionOptions opt;
  opt.n = 2;
  opt.s = 2;
  opt.prior = ThetaPrior::uniform(0.0, 10.0);
  opt.t_grid = {0.1};
  opt.target_accepted = 100000;
  opt.master_seed = 12;
  opt.threads = 0;
  opt.keep_draws = true;
  auto res = run_algorithm4(opt);
  REQUIRE(res.draws.size() >= 100000);

  const int bins = 20;
  std::vector<std::uint64_t> hist(bins, 0);
  for (const auto& d : res.draws) {
    int b = static_cast<int>(d.theta / 10.0 * bins);
    if (b >= bins) b = bins - 1;
    ++hist[b];
  }
  std::vector<double> expected(bins, 0.0);
  double norm = 0.0;
  for (int b = 0; b < bins; ++b) {
    auto lik = [](double th) { return th * th / std::pow(1.0 + th, 3); };
    expected[b] = integrate_adaptive(lik, b * 0.5, (b + 1) * 0.5, 1e-12).value;
    norm += expected[b];
  }
  for (auto& e : expected) e /= norm;
  double chi = 0.0;
  const double total = static_cast<double>(res.draws.size());
  for (int b = 0; b < bins; ++b) {
    const double exp_count = expected[b] * total;
    REQUIRE(exp_count > 5);
    chi += (hist[b] - exp_count) * (hist[b] - exp_count) / exp_count;
  }
  // chi2(19): far tail at ~4 sigma.
  CHECK(chi < 19.0 + 4.0 * std::sqrt(38.0));
}

TEST_CASE("zero acceptance raises a diagnostic error") {
  RejectionOptions opt;
  opt.n = 2;
  opt.s = 400;
  opt.prior = ThetaPrior::fixed(1e-5);
  opt.t_grid = {0.1};
  opt.target_accepted = 1;
  opt.max_proposals = 20000;
  opt.master_seed = 5;
  CHECK_THROWS_AS(run_algorithm4(opt), ZeroAcceptanceError);
}

TEST_CASE("rejection results are thread-count invariant") {
  RejectionOptions opt;
  opt.n = 12;
  opt.s = 4;
  opt.prior = ThetaPrior::fixed(1.5);
  opt.t_grid = {0.2, 0.8};
  opt.target_accepted = 3000;
  opt.master_seed = 31;
  opt.batch_size = 512;
  opt.threads = 1;
  auto a = run_algorithm4(opt);
  opt.threads = 8;
  auto b = run_algorithm4(opt);
  CHECK(a.accepted == b.accepted);
  CHECK(a.proposals == b.proposals);
  CHECK(a.tmrca_mean == b.tmrca_mean);
  for (std::size_t i = 0; i < a.per_time.size(); ++i) {
    CHECK(a.per_time[i].mean_ancestors == b.per_time[i].mean_ancestors);
    CHECK(a.per_time[i].mean_standing == b.per_time[i].mean_standing);
  }
}

TEST_CASE("gamma prior draws have the right moments") {
  Xoshiro256pp rng(8);
  auto prior = ThetaPrior::gamma(3.0, 2.0);
  const int reps = 400000;
  double sum = 0, sumsq = 0;
  for (int r = 0; r < reps; ++r) {
    const double x = prior.sample(rng);
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / reps;
  const double var = sumsq / reps - mean * mean;
  CHECK(mean == doctest::Approx(1.5).epsilon(0.01));     // shape/rate
  CHECK(var == doctest::Approx(0.75).epsilon(0.03));     // shape/rate^2
}
