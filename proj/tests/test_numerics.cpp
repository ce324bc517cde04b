// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "esf/beta_mixture.hpp"
#include "esf/error.hpp"
#include "esf/quadrature.hpp"
#include "esf/signed_log.hpp"
#include "esf/special.hpp"

using namespace esf;

TEST_CASE("log_rising_factorial basic values") {
  CHECK(log_rising_factorial(2.5, 0) == 0.0);
  CHECK(log_rising_factorial(1.0, 7) == doctest::Approx(log_factorial(7)).epsilon(1e-13));
  CHECK(log_rising_factorial(2.5, 4) ==
        doctest::Approx(std::log(2.5 * 3.5 * 4.5 * 5.5)).epsilon(1e-13));
  CHECK_THROWS_AS(log_rising_factorial(-1.0, 3), DomainError);
}

TEST_CASE("log_rising_factorial ladder identity") {
  for (double x : {0.1, 1.0, 2.5, 37.0, 100.0}) {
    for (int n : {0, 1, 5, 50, 500, 1999}) {
      const double lhs = log_rising_factorial(x, n + 1) - log_rising_factorial(x, n);
      CHECK(lhs == doctest::Approx(std::log(x + n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("stirling numbers: anchors and enumeration") {
  CHECK(log_stirling1_unsigned(1, 1) == 0.0);
  CHECK(log_stirling1_unsigned(9, 9) == doctest::Approx(0.0));
  // Count permutations of 4 elements with exactly 2 cycles directly.
  int with_two_cycles = 0;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    std::array<bool, 4> seen{};
    int cycles = 0;
    for (int start = 0; start < 4; ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (int v = start; !seen[v]; v = perm[v]) seen[v] = true;
    }
    if (cycles == 2) ++with_two_cycles;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(with_two_cycles == 11);
  CHECK(log_stirling1_unsigned(4, 2) == doctest::Approx(std::log(11.0)).epsilon(1e-13));
}

TEST_CASE("stirling row sums equal ln n!") {
  for (int n : {2, 5, 17, 42, 60}) {
    double row = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= n; ++k) row = log_add(row, log_stirling1_unsigned(n, k));
    CHECK(row == doctest::Approx(log_factorial(n)).epsilon(1e-10));
  }
}

TEST_CASE("signed_log_sum basics") {
  auto one = signed_log_sum(std::vector<SignedLog>{SignedLog::from_log(1.0, +1)});
  CHECK(one.result.value() == doctest::Approx(std::exp(1.0)));
  CHECK(one.cancellation_digits == 0.0);

  auto cancel = signed_log_sum(
      std::vector<SignedLog>{SignedLog::from_log(5.0, +1), SignedLog::from_log(5.0, -1)});
  CHECK(cancel.result.sign == 0);
  CHECK(std::isinf(cancel.cancellation_digits));

  // Known residual: e^10 - e^10 + 3 * 1e-3, built from exact doubles.
  std::vector<SignedLog> terms{SignedLog::from_log(10.0, +1), SignedLog::from_log(10.0, -1),
                               SignedLog::from_value(1e-3), SignedLog::from_value(1e-3),
                               SignedLog::from_value(1e-3)};
  auto resid = signed_log_sum(terms);
  CHECK(resid.result.value() == doctest::Approx(3e-3).epsilon(1e-9));
  CHECK(resid.cancellation_digits > 6.0);
  CHECK(resid.max_term_log == doctest::Approx(10.0));
}

TEST_CASE("signed_log_sum permutation invariance when well-conditioned") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> mag(-3.0, 3.0);
  std::vector<SignedLog> terms;
  for (int i = 0; i < 64; ++i)
    terms.push_back(SignedLog::from_log(mag(gen), i % 3 == 0 ? -1 : +1));
  auto base = signed_log_sum(terms);
  REQUIRE(base.cancellation_digits < 3.0);
  for (int rep = 0; rep < 10; ++rep) {
    std::shuffle(terms.begin(), terms.end(), gen);
    auto again = signed_log_sum(terms);
    CHECK(again.result.value() ==
          doctest::Approx(base.result.value()).epsilon(1e-12));
  }
}

TEST_CASE("log_poisson_pmf") {
  CHECK(log_poisson_pmf(0.0, 0) == 0.0);
  CHECK(std::isinf(log_poisson_pmf(0.0, 3)));
  CHECK(log_poisson_pmf(2.0, 0) == doctest::Approx(-2.0));
  const double direct = -9.0 + 9.0 * std::log(9.0) - log_factorial(9);
  CHECK(log_poisson_pmf(9.0, 9) == doctest::Approx(direct));
  CHECK(std::exp(log_poisson_pmf(9.0, 9)) == doctest::Approx(0.13176).epsilon(1e-4));
}

TEST_CASE("adaptive quadrature hits known integrals") {
  auto r1 = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, 3.141592653589793);
  CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-12));
  auto r2 = integrate_to_infinity([](double u) { return std::exp(-u) * u; }, 0.0);
  CHECK(r2.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("beta_mixture_poisson_pmf normalizes and matches anchors") {
  // Sum over k for (l=3, n=10, theta=2.5).
  double total = 0.0;
  double tail = 1.0;
  int k = 0;
  while (tail > 1e-12 && k < 400) {
    const double p = beta_mixture_poisson_pmf(3, 10, 2.5, k);
    total += p;
    tail = p;
    ++k;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-8));

  // l = n: the single-factor pgf (1 + theta(1-z)/(n-1))^{-1} is geometric.
  const int n = 7;
  const double theta = 1.7;
  const double succ = (n - 1.0) / (n - 1.0 + theta);
  for (int kk = 0; kk < 8; ++kk) {
    const double geom = succ * std::pow(1.0 - succ, kk);
    CHECK(beta_mixture_poisson_pmf(n, n, theta, kk) == doctest::Approx(geom).epsilon(1e-8));
  }

  // (l=2, n=2, theta=1, k=0) is P(S_2 = 0) = 1/(1+theta) = 0.5.
  CHECK(beta_mixture_poisson_pmf(2, 2, 1.0, 0) == doctest::Approx(0.5).epsilon(1e-9));
}
