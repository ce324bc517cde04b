// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/quadrature.hpp"

#include <array>
#include <cmath>

#include "esf/error.hpp"

namespace esf {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric half stored).
constexpr std::array<double, 8> kNodes = {
    0.0,
    0.2011940939974345223006283,
    0.3941513470775633698972074,
    0.5709721726085388475372267,
    0.7244177313601700474161861,
    0.8482065834104272162006483,
    0.9372733924007059043077589,
    0.9879925180204854284895657,
};
constexpr std::array<double, 8> kWeights = {
    0.2025782419255612728806202,
    0.1984314853271115764561183,
    0.1861610000155622110268006,
    0.1662692058169939335532009,
    0.1395706779261543144478048,
    0.1071592204671719350118695,
    0.0703660474881081247092674,
    0.0307532419961172683546284,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = kWeights[0] * f(c);
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kNodes[i];
    sum += kWeights[i] * (f(c + dx) + f(c - dx));
  }
  return sum * h;
}

void adapt(const std::function<double(double)>& f, double a, double b, double whole,
           double abs_tol, int depth, int max_depth, QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double left = gl15(f, a, m);
  const double right = gl15(f, m, b);
  const double err = std::abs(left + right - whole);
  if (err < abs_tol || depth >= max_depth) {
    if (depth >= max_depth && err >= abs_tol)
      throw QuadratureError("adaptive quadrature: subdivision limit reached", err);
    out.value += left + right;
    out.error_estimate += err;
    return;
  }
  adapt(f, a, m, left, 0.5 * abs_tol, depth + 1, max_depth, out);
  adapt(f, m, b, right, 0.5 * abs_tol, depth + 1, max_depth, out);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_depth) {
  QuadratureResult out;
  if (a == b) return out;
  adapt(f, a, b, gl15(f, a, b), abs_tol, 0, max_depth, out);
  return out;
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       double abs_tol) {
  QuadratureResult out;
  double lo = a;
  double width = 1.0;
  int quiet_panels = 0;
  for (int panel = 0; panel < 400; ++panel) {
    auto piece = integrate_adaptive(f, lo, lo + width, abs_tol);
    out.value += piece.value;
    out.error_estimate += piece.error_estimate;
    lo += width;
    if (std::abs(piece.value) < abs_tol) {
      if (++quiet_panels >= 3) return out;
    } else {
      quiet_panels = 0;
    }
    width *= 1.5;
  }
  throw QuadratureError("semi-infinite quadrature: integrand did not decay", out.error_estimate);
}

}  // namespace esf
