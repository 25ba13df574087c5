// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace tfp {

/// Geometric continuation of a coefficient sequence: starting right after the
/// explicit prefix, entries are a, a*r, a*r^2, ...  Requires a >= 0 and
/// 0 <= r < 1, so the continuation is always absolutely summable.
struct GeometricTail {
  double a = 0.0;
  double r = 0.0;

  bool operator==(const GeometricTail&) const = default;
};

/// A nonnegative sequence c_0, c_1, ... given by a finite explicit prefix and
/// an optional geometric tail.  All infinite functionals of the sequence
/// (sums, first moments, power-series values and derivatives) are evaluated
/// in closed form; nothing is ever truncated.
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  explicit CoefficientSequence(std::vector<double> explicit_part,
                               std::optional<GeometricTail> tail = std::nullopt);

  double at(std::size_t i) const;

  /// Total mass: sum of the explicit prefix plus a/(1-r) for the tail.
  double sum() const;

  /// Sum of the first `count` entries.
  double prefix_sum(std::size_t count) const;

  /// Sum over indices i >= first.
  double tail_sum_from(std::size_t first) const;

  /// Weighted mass sum_i (i + offset) * c_i.
  double moment1(long offset = 0) const;

  /// Power series value sum_i c_i z^i; the tail contributes
  /// a * z^p / (1 - r z) with p the explicit prefix length.
  double series_at(double z) const;

  /// First derivative of the power series at z.
  double series_d1(double z) const;

  /// Second derivative of the power series at z.
  double series_d2(double z) const;

  CoefficientSequence scaled(double factor) const;

  std::size_t explicit_count() const { return explicit_.size(); }
  const std::vector<double>& explicit_part() const { return explicit_; }
  bool has_tail() const { return tail_.has_value(); }
  const std::optional<GeometricTail>& tail() const { return tail_; }

  /// True when every entry of the infinite sequence is > 0 (requires a
  /// positive geometric tail with r > 0).
  bool strictly_positive() const;

  bool operator==(const CoefficientSequence&) const = default;

 private:
  std::vector<double> explicit_;
  std::optional<GeometricTail> tail_;
};

}  // namespace tfp
