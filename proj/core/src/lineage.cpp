// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/lineage.hpp"

#include <mpfr.h>
#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "esf/error.hpp"
#include "esf/signed_log.hpp"
#include "esf/special.hpp"

namespace esf {

namespace {

// The double path computes per-term logs through lgamma, whose ~1e-13
// relative term error is amplified by cancellation; past two lost digits the
// quad recurrence path (term error ~1e-31) takes over.
constexpr double kDoubleGuardDigits = 2.0;
constexpr double kQuadGuardDigits = 25.0;

void validate(const LineageLawParams& p, int k) {
  if (!p.infinite_n() && p.n < 1) throw DomainError("ancestors_pmf: n must be >= 1 or infinite");
  if (p.theta < 0.0 || p.t < 0.0) throw DomainError("ancestors_pmf: need theta >= 0, t >= 0");
  if (k < 0 || (!p.infinite_n() && k > p.n)) throw DomainError("ancestors_pmf: k out of range");
  if (p.infinite_n() && p.t <= 0.0)
    throw DomainError("ancestors_pmf: infinite n requires t > 0");
}

// Series evaluation in double precision via per-term logs.  For k = 0 the
// j = 0 term equals +1 exactly and is added up front.
CancellationReport series_double(int n, double theta, double t, int k) {
  const bool inf_n = (n == kInfiniteN);
  std::vector<SignedLog> terms;
  const double log_gamma_kth = (k + theta > 0.0) ? std::lgamma(k + theta) : 0.0;
  const double log_kfact = log_factorial(k);
  const int j_hi = inf_n ? 1 << 22 : n;
  double max_log_seen = -1e308;
  int decay_run = 0;
  if (k == 0) terms.push_back(SignedLog::from_value(1.0));  // j = 0 term
  for (int j = std::max(k, 1); j <= j_hi; ++j) {
    // (k+theta)_(j-1) vanishes identically when k = 0 and theta = 0, j >= 2.
    if (k + theta == 0.0 && j >= 2) break;
    double lt = -0.5 * j * (j + theta - 1) * t + std::log(2 * j + theta - 1);
    lt += (j >= 2) ? std::lgamma(k + theta + j - 1) - log_gamma_kth : 0.0;
    lt -= log_kfact + log_factorial(j - k);
    if (!inf_n) {
      lt += std::lgamma(n + 1.0) - std::lgamma(n - j + 1.0);
      lt -= std::lgamma(n + theta + j) - std::lgamma(n + theta);
    }
    terms.push_back(SignedLog::from_log(lt, ((j - k) % 2 == 0) ? +1 : -1));
    if (inf_n) {
      if (lt > max_log_seen) {
        max_log_seen = lt;
        decay_run = 0;
      } else if (lt < max_log_seen - 80.0) {
        if (++decay_run >= 3) break;
      }
    }
  }
  return signed_log_sum(terms);
}

struct QuadSum {
  double value = 0.0;
  double cancellation_digits = 0.0;
};

// Middle rung: the recurrence in __float128 (term error ~1e-33).
QuadSum series_quad(int n, double theta, double t, int k) {
  const bool inf_n = (n == kInfiniteN);
  std::vector<__float128> terms;
  const __float128 th = theta;
  const __float128 tq = t;
  if (k == 0) terms.push_back(1);
  const int j0 = std::max(k, 1);
  __float128 term = expq(__float128(-0.5) * j0 * (j0 + th - 1) * tq) * (2 * j0 + th - 1);
  for (int i = 0; i < j0 - 1; ++i) term *= (k + th + i);  // (k+theta)_(j0-1)
  for (int i = 2; i <= k; ++i) term /= i;                 // 1 / k!
  for (int i = 2; i <= j0 - k; ++i) term /= i;            // 1 / (j0-k)!
  if (!inf_n)
    for (int i = 0; i < j0; ++i) term *= (n - i) / (n + th + i);
  if ((j0 - k) % 2 != 0) term = -term;

  const int j_hi = inf_n ? 1 << 22 : n;
  __float128 max_abs = 0;
  int decay_run = 0;
  for (int j = j0; j <= j_hi; ++j) {
    if (k + theta == 0.0 && j >= 2) break;
    terms.push_back(term);
    const __float128 a = fabsq(term);
    if (a > max_abs) {
      max_abs = a;
      decay_run = 0;
    } else if (inf_n && a < max_abs * __float128(1e-30)) {
      if (++decay_run >= 3) break;
    }
    term *= -expq(__float128(-0.5) * (2 * j + th) * tq) * (2 * j + th + 1) / (2 * j + th - 1);
    term *= (k + th + j - 1) / (j + 1 - k);
    if (!inf_n) term *= (n - j) / (n + th + j);
  }
  std::sort(terms.begin(), terms.end(),
            [](__float128 a, __float128 b) { return fabsq(a) > fabsq(b); });
  __float128 sum = 0;
  for (const auto& v : terms) sum += v;
  QuadSum out;
  out.value = static_cast<double>(sum);
  if (max_abs > 0) {
    const double ratio = (sum == 0) ? 0.0 : static_cast<double>(fabsq(sum) / max_abs);
    out.cancellation_digits =
        (ratio == 0.0) ? std::numeric_limits<double>::infinity() : std::max(0.0, -std::log10(ratio));
  }
  return out;
}

// Last rung of the precision ladder: the same recurrence in MPFR.  Every
// theta- and t-dependent factor is formed in working precision; a double
// subexpression would cap term accuracy at ~1e-16 relative, which deep
// cancellation turns into garbage.  Returns true and fills *value once the
// working precision leaves at least 12 significant digits.
bool series_mpfr(int n, double theta, double t, int k, double* value) {
  const bool inf_n = (n == kInfiniteN);
  const int j_hi = inf_n ? 1 << 22 : n;
  for (mpfr_prec_t prec = 256; prec <= 8192; prec *= 2) {
    mpfr_t sum, term, max_abs, tmp, fac, th, tq;
    mpfr_inits2(prec, sum, term, max_abs, tmp, fac, th, tq, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(th, theta, MPFR_RNDN);
    mpfr_set_d(tq, t, MPFR_RNDN);
    mpfr_set_zero(sum, 1);
    mpfr_set_zero(max_abs, 1);
    if (k == 0) mpfr_set_d(sum, 1.0, MPFR_RNDN);
    const int j0 = std::max(k, 1);
    // rho_{j0} = exp(-j0 (j0 + theta - 1) t / 2)
    mpfr_add_si(tmp, th, j0 - 1, MPFR_RNDN);
    mpfr_mul_si(tmp, tmp, j0, MPFR_RNDN);
    mpfr_mul(tmp, tmp, tq, MPFR_RNDN);
    mpfr_mul_d(tmp, tmp, -0.5, MPFR_RNDN);
    mpfr_exp(term, tmp, MPFR_RNDN);
    mpfr_add_si(fac, th, 2 * j0 - 1, MPFR_RNDN);  // 2 j0 + theta - 1
    mpfr_mul(term, term, fac, MPFR_RNDN);
    for (int i = 0; i < j0 - 1; ++i) {  // (k + theta)_(j0 - 1)
      mpfr_add_si(fac, th, k + i, MPFR_RNDN);
      mpfr_mul(term, term, fac, MPFR_RNDN);
    }
    for (int i = 2; i <= k; ++i) mpfr_div_ui(term, term, i, MPFR_RNDN);
    for (int i = 2; i <= j0 - k; ++i) mpfr_div_ui(term, term, i, MPFR_RNDN);
    if (!inf_n) {
      for (int i = 0; i < j0; ++i) {  // n_[j0] / (n + theta)_(j0)
        mpfr_mul_ui(term, term, n - i, MPFR_RNDN);
        mpfr_add_si(fac, th, n + i, MPFR_RNDN);
        mpfr_div(term, term, fac, MPFR_RNDN);
      }
    }
    if ((j0 - k) % 2 != 0) mpfr_neg(term, term, MPFR_RNDN);
    int decay_run = 0;
    for (int j = j0; j <= j_hi; ++j) {
      if (k + theta == 0.0 && j >= 2) break;
      mpfr_add(sum, sum, term, MPFR_RNDN);
      mpfr_abs(tmp, term, MPFR_RNDN);
      if (mpfr_cmp(tmp, max_abs) > 0) {
        mpfr_set(max_abs, tmp, MPFR_RNDN);
        decay_run = 0;
      } else if (inf_n) {
        mpfr_mul_d(fac, max_abs, 1e-40, MPFR_RNDN);
        if (mpfr_cmp(tmp, fac) < 0 && ++decay_run >= 3) break;
      }
      // term_{j+1} = -term_j exp(-(2j+theta)t/2) (2j+theta+1)/(2j+theta-1)
      //              (k+theta+j-1)/(j+1-k) [(n-j)/(n+theta+j)]
      mpfr_add_si(tmp, th, 2 * j, MPFR_RNDN);
      mpfr_mul(tmp, tmp, tq, MPFR_RNDN);
      mpfr_mul_d(tmp, tmp, -0.5, MPFR_RNDN);
      mpfr_exp(tmp, tmp, MPFR_RNDN);
      mpfr_mul(term, term, tmp, MPFR_RNDN);
      mpfr_neg(term, term, MPFR_RNDN);
      mpfr_add_si(fac, th, 2 * j + 1, MPFR_RNDN);
      mpfr_mul(term, term, fac, MPFR_RNDN);
      mpfr_add_si(fac, th, 2 * j - 1, MPFR_RNDN);
      mpfr_div(term, term, fac, MPFR_RNDN);
      mpfr_add_si(fac, th, k + j - 1, MPFR_RNDN);
      mpfr_mul(term, term, fac, MPFR_RNDN);
      mpfr_div_ui(term, term, j + 1 - k, MPFR_RNDN);
      if (!inf_n) {
        mpfr_mul_ui(term, term, n - j, MPFR_RNDN);
        mpfr_add_si(fac, th, n + j, MPFR_RNDN);
        mpfr_div(term, term, fac, MPFR_RNDN);
      }
    }
    double out = mpfr_get_d(sum, MPFR_RNDN);
    double cancelled = 0.0;
    if (mpfr_sgn(max_abs) > 0) {
      if (mpfr_zero_p(sum)) {
        cancelled = 1e9;
      } else {
        mpfr_abs(tmp, sum, MPFR_RNDN);
        mpfr_div(tmp, max_abs, tmp, MPFR_RNDN);
        mpfr_log10(tmp, tmp, MPFR_RNDN);
        cancelled = std::max(0.0, mpfr_get_d(tmp, MPFR_RNDN));
      }
    }
    mpfr_clears(sum, term, max_abs, tmp, fac, th, tq, static_cast<mpfr_ptr>(nullptr));
    const double prec_digits = prec * 0.30103;
    if (cancelled <= prec_digits - 12.0) {
      *value = out;
      return true;
    }
    // A value this deep under the leading terms is numerically zero.
    if (prec == 8192) {
      *value = 0.0;
      return std::abs(out) < 1e-280;
    }
  }
  return false;
}

}  // namespace

double ancestors_pmf(const LineageLawParams& params, int k) {
  validate(params, k);
  const double theta = params.theta;
  if (!params.infinite_n() && params.t == 0.0) return k == params.n ? 1.0 : 0.0;
  if (theta == 0.0 && k == 0) return 0.0;

  auto rep = series_double(params.n, theta, params.t, k);
  if (rep.cancellation_digits <= kDoubleGuardDigits) {
    double v = rep.result.value();
    return std::clamp(v, 0.0, 1.0);
  }
  auto quad = series_quad(params.n, theta, params.t, k);
  if (quad.cancellation_digits <= kQuadGuardDigits) return std::clamp(quad.value, 0.0, 1.0);
  double value = 0.0;
  if (series_mpfr(params.n, theta, params.t, k, &value)) return std::clamp(value, 0.0, 1.0);
  throw PrecisionLossError("ancestors_pmf: alternating series cancelled beyond the guard",
                           quad.cancellation_digits);
}

double ancestors_falling_moment(const LineageLawParams& params, int r) {
  if (r < 1) throw DomainError("ancestors_falling_moment: r must be >= 1");
  validate(params, std::min(r, params.infinite_n() ? r : params.n));
  const int n = params.n;
  const double theta = params.theta;
  const double t = params.t;
  if (!params.infinite_n() && t == 0.0) {
    if (r > n) return 0.0;
    return std::exp(log_falling_factorial(n, r));
  }
  // All terms are positive: accumulate in log space until they stop mattering.
  double log_sum = -std::numeric_limits<double>::infinity();
  const int j_hi = params.infinite_n() ? (1 << 22) : n;
  for (int j = r; j <= j_hi; ++j) {
    double lt = -0.5 * j * (j + theta - 1) * t + std::log(2 * j + theta - 1);
    lt += log_binomial(j - 1, r - 1);
    lt += (theta + j > 0 && r >= 2) ? log_rising_factorial(theta + j, r - 1) : 0.0;
    if (!params.infinite_n()) {
      lt += std::lgamma(n + 1.0) - std::lgamma(n - j + 1.0);
      lt -= std::lgamma(n + theta + j) - std::lgamma(n + theta);
    }
    log_sum = log_add(log_sum, lt);
    if (lt < log_sum + std::log(1e-16) && j > r + 3) break;
  }
  return std::exp(log_sum);
}

double event_time_density(const LineageLawParams& params, int l) {
  if (l < 2 || (!params.infinite_n() && l > params.n))
    throw DomainError("event_time_density: need 2 <= l <= n");
  // Exit rate from l lines times the occupation probability: the hitting
  // density of the next level.  (Integrates to 1 over t.)
  return 0.5 * l * (l + params.theta - 1) * ancestors_pmf(params, l);
}

namespace detail {

std::complex<double> ancestors_pmf_complex(int n, std::complex<double> theta, double t, int k) {
  using C = std::complex<double>;
  C sum = (k == 0) ? C(1.0) : C(0.0);
  const int j0 = std::max(k, 1);
  // First term by direct (ratio-balanced) products.
  C term = std::exp(-0.5 * static_cast<double>(j0) * (static_cast<double>(j0) - 1.0 + theta) * t);
  term *= 2.0 * j0 + theta - 1.0;
  for (int i = 0; i < j0 - 1; ++i) term *= (static_cast<double>(k) + theta + static_cast<double>(i));
  for (int i = 2; i <= k; ++i) term /= static_cast<double>(i);
  for (int i = 2; i <= j0 - k; ++i) term /= static_cast<double>(i);
  for (int i = 0; i < j0; ++i) term *= static_cast<double>(n - i) / (static_cast<double>(n) + theta + static_cast<double>(i));
  if ((j0 - k) % 2 != 0) term = -term;
  for (int j = j0; j <= n; ++j) {
    sum += term;
    term *= -std::exp(-0.5 * (2.0 * j + theta) * t) * (2.0 * j + theta + 1.0) / (2.0 * j + theta - 1.0);
    term *= (static_cast<double>(k) + theta + static_cast<double>(j - 1)) / static_cast<double>(j + 1 - k);
    term *= static_cast<double>(n - j) / (static_cast<double>(n) + theta + static_cast<double>(j));
  }
  return sum;
}

std::complex<double> ancestors_mean_complex(int n, std::complex<double> theta, double t) {
  using C = std::complex<double>;
  C sum = 0.0;
  C ratio = 1.0;  // n_[k] / (n+theta)_(k), updated incrementally
  for (int k = 1; k <= n; ++k) {
    ratio *= static_cast<double>(n - k + 1) / (static_cast<double>(n) + theta + static_cast<double>(k - 1));
    C rho = std::exp(-0.5 * static_cast<double>(k) * (static_cast<double>(k) - 1.0 + theta) * t);
    sum += rho * (2.0 * k + theta - 1.0) * ratio;
  }
  return sum;
}

}  // namespace detail

}  // namespace esf
