// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "esf/error.hpp"

namespace esf {

/// Population-size model for coalescence intensities.  Time runs backward
/// from the present; under exponential growth the relative size at time t
/// back is e^{-beta t}, so the pair-coalescence intensity scales by
/// e^{beta t} while the mutation intensity stays theta/2 per line.
/// beta == 0 reduces to the constant-size model and shares its code paths.
struct TimeModel {
  enum class Kind { kConstant, kExpGrowth };

  Kind kind = Kind::kConstant;
  double beta = 0.0;

  static TimeModel constant() { return {Kind::kConstant, 0.0}; }
  static TimeModel exp_growth(double beta) {
    if (beta < 0.0) throw DomainError("TimeModel: beta must be >= 0");
    return {Kind::kExpGrowth, beta};
  }

  bool is_constant_rate() const { return beta == 0.0; }
};

}  // namespace esf
