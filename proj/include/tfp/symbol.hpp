// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "tfp/coefficients.hpp"

namespace tfp {

/// Two-sided coefficient description of an infinite nonnegative Toeplitz
/// operator that is banded above: finitely many superdiagonals t_{-1}..t_{-n}
/// with t_{-n} > 0, a diagonal t_0, and a summable subdiagonal sequence
/// t_1, t_2, ...  Row k reads ... t_2 t_1 t_0 t_{-1} ... t_{-n} 0 0 ...
class ToeplitzSymbol {
 public:
  /// `upper` lists t_{-1}, ..., t_{-n} in order of increasing |offset|;
  /// the last entry (t_{-n}) must be positive.
  ToeplitzSymbol(std::vector<double> upper, double diag, CoefficientSequence lower);

  /// Upper bandwidth n.
  std::size_t bandwidth() const { return upper_.size(); }

  double diag() const { return diag_; }

  /// t_{-i} for i >= 1 (zero beyond the band).
  double upper_coeff(std::size_t i) const;

  /// t_i for i >= 1.
  double lower_coeff(std::size_t i) const { return lower_.at(i - 1); }

  const std::vector<double>& upper() const { return upper_; }
  const CoefficientSequence& lower() const { return lower_; }

  /// Row coefficients read left to right as a power series:
  /// index i carries t_{i-n}, so index 0 is t_{-n} and index n is t_0.
  const CoefficientSequence& row_series() const { return row_series_; }

  /// sum_{i=-n}^{inf} t_i, the l1 operator norm.
  double total_sum() const { return row_series_.sum(); }

  /// sum_{i=1}^{n} t_{-i}.
  double upper_sum() const;

  /// sum_{i=0}^{inf} t_i, the contraction constant of the
  /// lower-triangular-plus-diagonal part.
  double lower_plus_diag_sum() const { return diag_ + lower_.sum(); }

 private:
  std::vector<double> upper_;
  double diag_;
  CoefficientSequence lower_;
  CoefficientSequence row_series_;
};

/// Row generating function sum_{i>=0} t_{i-n} z^i for z in [0,1]; the
/// geometric tail is summed in closed form.  Throws std::domain_error for
/// z outside [0,1].
double eval_tau(const ToeplitzSymbol& symbol, double z);

/// First moment sum_{i>=0} i * t_{i-n} of the row series (index 0 weights
/// t_{-n} by zero).
double first_moment(const ToeplitzSymbol& symbol);

/// Result of the root-convexity check: whether tau^(1/n) has a nondecreasing
/// derivative on [0,1], decided through the sign surrogate
/// h(z) = tau''(z) tau(z) - (1 - 1/n) (tau'(z))^2.
struct RootConvexityReport {
  bool holds = false;
  double min_h = 0.0;
  double argmin_z = 0.0;
  std::size_t grid_points = 0;
  double tolerance = 0.0;
};

/// Samples h on a uniform grid over [0,1] and accepts when min h >= -tolerance.
/// For n = 1 the subtracted term vanishes and the check always holds.
RootConvexityReport check_root_convexity(const ToeplitzSymbol& symbol,
                                         std::size_t grid_points = 1001,
                                         double tolerance = 1e-12);

}  // namespace tfp
