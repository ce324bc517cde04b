// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace esf {

/// Invalid argument outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An alternating series cancelled beyond the precision guard; the computed
/// value carries fewer correct digits than the caller can rely on.
class PrecisionLossError : public std::runtime_error {
 public:
  PrecisionLossError(const std::string& what, double cancellation_digits)
      : std::runtime_error(what), cancellation_digits_(cancellation_digits) {}
  double cancellation_digits() const { return cancellation_digits_; }

 private:
  double cancellation_digits_;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_tolerance)
      : std::runtime_error(what), achieved_tolerance_(achieved_tolerance) {}
  double achieved_tolerance() const { return achieved_tolerance_; }

 private:
  double achieved_tolerance_;
};

/// A rejection run produced no accepted draws within the proposal budget.
class ZeroAcceptanceError : public std::runtime_error {
 public:
  ZeroAcceptanceError(const std::string& what, unsigned long long proposals)
      : std::runtime_error(what), proposals_(proposals) {}
  unsigned long long proposals() const { return proposals_; }

 private:
  unsigned long long proposals_;
};

/// Dataset or CLI input could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace esf
