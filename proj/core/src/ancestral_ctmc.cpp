// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/ancestral_ctmc.hpp"

#include "esf/error.hpp"

namespace esf {

AncestralState simulate_ska(int n, double theta, double t, Xoshiro256pp& rng) {
  if (n < 1 || theta <= 0.0 || t < 0.0)
    throw DomainError("simulate_ska: need n >= 1, theta > 0, t >= 0");
  AncestralState st{0, 0, 0, n};
  double now = 0.0;
  while (true) {
    const double b = st.b;
    const double at = st.a_theta;
    const double r_mut_b = 0.5 * theta * b;
    const double r_mut_new = 0.5 * theta * at;
    const double r_coal_b = 0.5 * (b * (b - 1) + 2.0 * b * at);
    const double r_coal_t = 0.5 * at * (at - 1);
    const double total = r_mut_b + r_mut_new + r_coal_b + r_coal_t;
    if (total <= 0.0) return st;
    now += rng.exponential(total);
    if (now > t) return st;
    double u = rng.uniform() * total;
    if ((u -= r_mut_b) < 0.0) {
      ++st.s;
    } else if ((u -= r_mut_new) < 0.0) {
      ++st.s;
      ++st.k;
      ++st.b;
      --st.a_theta;
    } else if ((u -= r_coal_b) < 0.0) {
      --st.b;
    } else {
      --st.a_theta;
    }
  }
}

}  // namespace esf
