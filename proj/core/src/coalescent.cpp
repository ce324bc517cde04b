// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/coalescent.hpp"

#include <algorithm>
#include <cmath>

#include "esf/error.hpp"

namespace esf {

CoalescentTimes sample_coalescent_times(int n, const TimeModel& model, Xoshiro256pp& rng) {
  if (n < 2) throw DomainError("sample_coalescent_times: n must be >= 2");
  CoalescentTimes out;
  out.n = n;
  out.t.resize(n - 1);
  out.w.resize(n - 1);
  double now = 0.0;
  double length = 0.0;
  for (int level = n; level >= 2; --level) {
    const double pair_rate = 0.5 * level * (level - 1);
    const double e = rng.exponential();
    double dt;
    if (model.is_constant_rate()) {
      dt = e / pair_rate;
    } else {
      // Solve C(a,2) (e^{beta (now+dt)} - e^{beta now}) / beta = e.
      dt = std::log1p(model.beta * e * std::exp(-model.beta * now) / pair_rate) / model.beta;
    }
    out.t[n - level] = dt;
    now += dt;
    out.w[n - level] = now;
    length += level * dt;
  }
  out.total_length = length;
  return out;
}

int ancestor_count_at(const CoalescentTimes& times, double t) {
  if (t < 0.0) throw DomainError("ancestor_count_at: t must be >= 0");
  // Right-continuous count: the merge at W_j has already happened at t = W_j,
  // so J counts the W_j <= t.
  auto it = std::upper_bound(times.w.begin(), times.w.end(), t);
  const int j = static_cast<int>(it - times.w.begin()) + 1;
  return times.n - j + 1;
}

TreeLengths tree_lengths_at(const CoalescentTimes& times, double t) {
  if (t < 0.0) throw DomainError("tree_lengths_at: t must be >= 0");
  const int n = times.n;
  const double total = times.total_length;
  TreeLengths out;
  const int a = ancestor_count_at(times, t);  // n - J + 1
  if (a == n) {
    out.recent = static_cast<double>(n) * t;
  } else if (a == 1) {
    out.recent = total;
  } else {
    double sum = 0.0;
    for (int level = n; level > a; --level) sum += level * times.holding(level);
    out.recent = sum + a * (t - times.w[n - a - 1]);
  }
  // Force the exact-sum contract.  recent carries O(n eps) summation error,
  // so nudging it by an ulp is free; the nudge breaks round-to-even ties
  // that would otherwise make recent + ancient miss total from both sides.
  double recent = out.recent;
  for (int nudge = 0; nudge < 5; ++nudge) {
    double ancient = total - recent;
    for (int pass = 0; pass < 3 && recent + ancient != total; ++pass)
      ancient += total - (recent + ancient);
    if (recent + ancient == total) {
      out.recent = recent;
      out.ancient = ancient;
      return out;
    }
    const int step = nudge / 2 + 1;
    double next = recent;
    for (int i = 0; i < step; ++i)
      next = std::nextafter(next, nudge % 2 == 0 ? total : -total);
    recent = next;
  }
  out.ancient = total - out.recent;
  return out;
}

}  // namespace esf
