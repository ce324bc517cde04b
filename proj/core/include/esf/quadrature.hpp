// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace esf {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Legendre integration of f over [a, b] to absolute
/// tolerance abs_tol.  Each panel is judged by comparing a 15-point rule
/// against its bisection; panels are split until the local error bound is
/// met.  Throws QuadratureError if the subdivision limit is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-12, int max_depth = 48);

/// Integrates f over [a, +inf) by mapping successive unit panels until the
/// contribution falls below abs_tol; f must decay to zero.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       double abs_tol = 1e-12);

}  // namespace esf
