// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/prior.hpp"

#include <cmath>

#include "esf/error.hpp"

namespace esf {

ThetaPrior ThetaPrior::fixed(double value) {
  if (value <= 0.0) throw DomainError("ThetaPrior: fixed theta must be > 0");
  return {Kind::kFixed, value, 0.0};
}

ThetaPrior ThetaPrior::uniform(double low, double high) {
  if (low < 0.0 || high <= low) throw DomainError("ThetaPrior: need 0 <= low < high");
  return {Kind::kUniform, low, high};
}

ThetaPrior ThetaPrior::gamma(double shape, double rate) {
  if (shape <= 0.0 || rate <= 0.0) throw DomainError("ThetaPrior: need shape, rate > 0");
  return {Kind::kGamma, shape, rate};
}

namespace {

// Marsaglia-Tsang squeeze for Gamma(shape, 1), shape >= 1; the shape < 1
// boost uses the standard u^(1/shape) trick.
double gamma_draw(double shape, Xoshiro256pp& rng) {
  if (shape < 1.0) {
    const double u = rng.uniform();
    return gamma_draw(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    // Polar Box-Muller normal draw.
    double x;
    {
      const double u1 = rng.uniform();
      const double u2 = rng.uniform();
      x = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
    const double v3 = std::pow(1.0 + c * x, 3);
    if (v3 <= 0.0) continue;
    const double u = rng.uniform();
    if (std::log(u) < 0.5 * x * x + d - d * v3 + d * std::log(v3)) return d * v3;
  }
}

}  // namespace

double ThetaPrior::sample(Xoshiro256pp& rng) const {
  switch (kind) {
    case Kind::kFixed:
      return a;
    case Kind::kUniform:
      return a + (b - a) * rng.uniform();
    case Kind::kGamma:
      return gamma_draw(a, rng) / b;
  }
  throw DomainError("ThetaPrior: unknown kind");
}

}  // namespace esf
