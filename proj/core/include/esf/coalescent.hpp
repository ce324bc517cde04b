// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "esf/rng.hpp"
#include "esf/time_model.hpp"

namespace esf {

/// One simulated set of coalescence times for a sample of n: the holding
/// times T_n..T_2, their partial sums W_1..W_{n-1} (W_{n-1} is the tree
/// height), and the total branch length L_n = sum_l l T_l.
struct CoalescentTimes {
  int n = 0;
  std::vector<double> t;  // t[j] = T_{n-j}, j = 0..n-2
  std::vector<double> w;  // w[j] = W_{j+1}
  double total_length = 0.0;

  double height() const { return w.back(); }
  double holding(int level) const { return t[n - level]; }  // T_level, level in 2..n
};

/// Draws T_n..T_2.  Constant model: T_l ~ Exp(l(l-1)/2).  Exponential
/// growth: with a lines extant at backward time u the coalescence intensity
/// is C(a,2) e^{beta u}; the next event time solves the integrated hazard in
/// closed form.  beta == 0 follows the constant code path, so fixed seeds
/// give identical draws.
CoalescentTimes sample_coalescent_times(int n, const TimeModel& model, Xoshiro256pp& rng);

/// A_n(t) = n - J + 1 where J indexes the bin of t among W_1..W_{n-1},
/// counted right-continuously: the merge at W_j is in force at t = W_j.
/// t = 0 gives n, t >= W_{n-1} gives 1.
int ancestor_count_at(const CoalescentTimes& times, double t);

struct TreeLengths {
  double recent = 0.0;   // branch length accumulated in (0, t]
  double ancient = 0.0;  // remaining length from t to the root
};

/// Splits L_n into the recent and ancient parts at time t; the two parts
/// sum to total_length exactly (the ancient part is adjusted by the
/// final-bit residual).
TreeLengths tree_lengths_at(const CoalescentTimes& times, double t);

}  // namespace esf
