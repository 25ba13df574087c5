// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tfp/coefficients.hpp"
#include "tfp/symbol.hpp"

namespace tfp {

/// Decomposition T = T1 + T2 by offset sign: T1 keeps the diagonal and
/// everything below it, T2 the strictly-above-diagonal part.  alpha is the
/// l1 operator norm of T1 (its common column sum).
struct SplitOperators {
  double diag = 0.0;
  CoefficientSequence lower;           // t_1, t_2, ...
  CoefficientSequence upper;           // t_{-1}, t_{-2}, ...
  CoefficientSequence lower_with_diag; // t_0, t_1, ... (T1's column)
  double alpha = 0.0;

  bool contraction_applicable() const { return alpha < 1.0; }
  double upper_sum() const { return upper.sum(); }
};

SplitOperators split(const ToeplitzSymbol& symbol);

/// Split of a general lower/upper coefficient pair (lower index 0 = diagonal).
SplitOperators split(const CoefficientSequence& lower_with_diag,
                     const CoefficientSequence& upper);

/// ||T1 x||_1 / ||x||_1 for a finitely supported nonnegative vector.  The
/// image head is applied by convolution and the image mass past the head is
/// accumulated through closed-form column tails, so the full infinite image
/// mass enters the ratio.
double contraction_ratio(const SplitOperators& split, const std::vector<double>& x);

struct ContractionAudit {
  double alpha = 0.0;
  double max_ratio = 0.0;
  bool pass = false;  // max_ratio <= alpha + 1e-10
  std::size_t trials = 0;
  std::size_t support_len = 0;
  std::uint64_t rng_seed = 0;
};

/// Seeded random search for a contraction-ratio violation: `trials`
/// nonnegative vectors with `support_len` uniform entries.  Evidence, not a
/// proof; the draw is reproducible from the recorded seed.
ContractionAudit audit_contraction(const SplitOperators& split, std::size_t trials,
                                   std::size_t support_len, std::uint64_t rng_seed);

/// A nonnegative sequence whose mass beyond what is stored carries an
/// explicit certificate: either the stored representation is exact (finite
/// support or geometric tail), or `tail_slack` bounds the unstored remainder.
struct CertifiedVector {
  CoefficientSequence seq;
  double tail_slack = 0.0;

  static CertifiedVector finite(std::vector<double> entries);
  static CertifiedVector geometric(std::vector<double> prefix, GeometricTail tail);
  static CertifiedVector bounded_tail(std::vector<double> prefix, double slack);

  double mass_bound() const { return seq.sum() + tail_slack; }
  double tail_bound_from(std::size_t first) const {
    return seq.tail_sum_from(first) + tail_slack;
  }

  /// Rescaled so the certified mass bound equals 1.
  CertifiedVector l1_normalized() const;
};

struct EquismallnessReport {
  double epsilon = 0.0;
  std::size_t n_epsilon = 0;
  std::size_t family_size = 0;
  double max_tail_observed = 0.0;  // largest image-tail bound at n_epsilon
};

/// Finds the smallest N such that for every family member m the image-tail
/// bound (sum_i t_{-i}) * sum_{k>=N} m_k drops to epsilon or below.  Exact
/// on stored prefixes, a certified bound on the rest.
EquismallnessReport audit_equismallness(const SplitOperators& split, double epsilon,
                                        const std::vector<CertifiedVector>& family);

}  // namespace tfp
