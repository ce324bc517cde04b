// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/signed_log.hpp"

#include <algorithm>

namespace esf {

CancellationReport signed_log_sum(std::span<const SignedLog> terms) {
  CancellationReport report;
  std::vector<SignedLog> sorted;
  sorted.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.sign != 0) sorted.push_back(t);
  }
  if (sorted.empty()) {
    report.cancellation_digits = 0.0;
    return report;
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const SignedLog& a, const SignedLog& b) { return a.log_magnitude > b.log_magnitude; });

  const double max_log = sorted.front().log_magnitude;
  report.max_term_log = max_log;

  // Kahan summation of terms rescaled by exp(-max_log).
  double sum = 0.0, comp = 0.0;
  for (const auto& t : sorted) {
    double x = t.sign * std::exp(t.log_magnitude - max_log);
    double y = x - comp;
    double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }

  if (sum == 0.0) {
    report.result = SignedLog::zero();
    report.cancellation_digits = std::numeric_limits<double>::infinity();
    return report;
  }
  report.result = SignedLog::from_log(max_log + std::log(std::abs(sum)), sum > 0 ? +1 : -1);
  report.cancellation_digits = std::max(0.0, -std::log10(std::abs(sum)));
  return report;
}

}  // namespace esf
