// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/special.hpp"

#include <limits>
#include <mutex>
#include <vector>

#include "esf/error.hpp"
#include "esf/signed_log.hpp"

namespace esf {

double log_rising_factorial(double x, int n) {
  if (n < 0) throw DomainError("log_rising_factorial: n must be >= 0");
  if (n == 0) return 0.0;
  if (x <= 0.0) throw DomainError("log_rising_factorial: x must be positive");
  if (x > 1e-4) return std::lgamma(x + n) - std::lgamma(x);
  // lgamma differences lose accuracy for tiny x; take the product directly.
  double lr = std::log(x);
  for (int j = 1; j < n; ++j) lr += std::log(x + j);
  return lr;
}

double log_falling_factorial(double x, int n) {
  if (n < 0) throw DomainError("log_falling_factorial: n must be >= 0");
  if (n == 0) return 0.0;
  if (x - n + 1 <= 0.0) throw DomainError("log_falling_factorial: nonpositive factor");
  return std::lgamma(x + 1) - std::lgamma(x - n + 1);
}

namespace {

// Cached rows of ln|S_k^n|.  rows[n][k-1] holds ln|S_k^n| for k = 1..n.
class StirlingTable {
 public:
  double get(int n, int k) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) < n) grow_row();
    return rows_[n - 1][k - 1];
  }

 private:
  void grow_row() {
    int n = static_cast<int>(rows_.size()) + 1;
    std::vector<double> row(n);
    if (n == 1) {
      row[0] = 0.0;  // |S_1^1| = 1
    } else {
      const auto& prev = rows_.back();
      for (int k = 1; k <= n; ++k) {
        // |S_k^n| = |S_{k-1}^{n-1}| + (n-1) |S_k^{n-1}|
        double a = (k >= 2) ? prev[k - 2] : -std::numeric_limits<double>::infinity();
        double b = (k <= n - 1) ? std::log(static_cast<double>(n - 1)) + prev[k - 1]
                                : -std::numeric_limits<double>::infinity();
        row[k - 1] = log_add(a, b);
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<double>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

double log_stirling1_unsigned(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw DomainError("log_stirling1_unsigned: need 1 <= k <= n");
  return stirling_table().get(n, k);
}

double log_poisson_pmf(double lambda, int s) {
  if (lambda < 0.0 || s < 0) throw DomainError("log_poisson_pmf: need lambda >= 0, s >= 0");
  if (lambda == 0.0) return s == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return -lambda + s * std::log(lambda) - log_factorial(s);
}

}  // namespace esf
