// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "esf/rng.hpp"

namespace esf {

/// Prior over the scaled mutation rate theta: degenerate (fixed), uniform
/// on [low, high], or Gamma(shape, rate).
struct ThetaPrior {
  enum class Kind { kFixed, kUniform, kGamma };

  Kind kind = Kind::kFixed;
  double a = 1.0;  // fixed value | low | shape
  double b = 0.0;  // unused      | high | rate

  static ThetaPrior fixed(double value);
  static ThetaPrior uniform(double low, double high);
  static ThetaPrior gamma(double shape, double rate);

  double sample(Xoshiro256pp& rng) const;
  bool is_fixed() const { return kind == Kind::kFixed; }
};

}  // namespace esf
