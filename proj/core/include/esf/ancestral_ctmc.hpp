// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "esf/rng.hpp"

namespace esf {

/// State of the backward mutation/coalescence counting process
/// (S~_n(t), K~_n(t), B_n(t), A_n^theta(t)): accumulated mutations, new
/// haplotypes created by those mutations, mutant lines, and never-mutant
/// lines.  a = b + a_theta is the plain ancestor count.
struct AncestralState {
  int s = 0;
  int k = 0;
  int b = 0;
  int a_theta = 0;

  int lines() const { return b + a_theta; }
};

/// Runs the four-rate CTMC from (0, 0, 0, n) to time t:
///   mutation on a mutant line        rate theta b / 2   -> s+1
///   first mutation on a clean line   rate theta a_th/2  -> s+1, k+1, b+1, a_th-1
///   coalescence touching mutants     rate (b(b-1) + 2 b a_th)/2 -> b-1
///   coalescence of two clean lines   rate a_th(a_th-1)/2        -> a_th-1
/// Marginally, lines() ~ A_n(t) and a_theta ~ A_n^theta(t).
AncestralState simulate_ska(int n, double theta, double t, Xoshiro256pp& rng);

}  // namespace esf
