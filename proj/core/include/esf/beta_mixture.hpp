// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace esf {

/// Probability of k mutations arising while the sample of n has at least l
/// ancestors: a Poisson(-theta log X) mixture with X ~ Beta(l-1, n-l+1),
///
///   B(l-1, n-l+1)^{-1} Int_0^1 x^{l-2} (1-x)^{n-l} x^theta (-theta ln x)^k / k! dx,
///
/// evaluated by adaptive quadrature after the substitution u = -ln x, which
/// removes the logarithmic endpoint singularity.  Requires 2 <= l <= n
/// (l - 1 >= 1 and l - 1 < n), theta > 0, k >= 0.
double beta_mixture_poisson_pmf(int l, int n, double theta, int k);

}  // namespace esf
