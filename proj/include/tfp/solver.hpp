// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tfp/symbol.hpp"

namespace tfp {

/// Entries below -kSignZeroBand count as negative; entries with
/// |x| <= kSignZeroBand count as zero hits.  Keeps floating round-off from
/// masquerading as sign information.
inline constexpr double kSignZeroBand = 1e-14;

/// The free initial entries x_0 .. x_{n-1}; all strictly positive.
struct SeedVector {
  explicit SeedVector(std::vector<double> values);
  std::vector<double> entries;
};

/// The all-ones seed of length n.  Together with the forward recurrence this
/// realizes the equal-entry start whose iterates stay positive whenever the
/// total coefficient mass is at most one.
SeedVector ones_seed(const ToeplitzSymbol& symbol);

enum class Normalization { raw, unit_l1, x0_equals_1 };

struct SolutionPrefix {
  std::vector<double> entries;  // x_0 .. x_N
  SeedVector seed;
  std::optional<std::size_t> first_negative_index;
  std::optional<std::size_t> first_zero_index;  // |x| <= kSignZeroBand
  double residual_max = 0.0;                    // filled by verify_residual
  Normalization normalization = Normalization::raw;
};

/// Runs the exact coordinate recurrence
///   x_{j+n} = [ (1 - t_0) x_j - sum_{i=1}^{j} t_i x_{j-i}
///               - sum_{i=1}^{n-1} t_{-i} x_{j+i} ] / t_{-n}
/// for j = 0 .. n_terms - n, producing entries x_0 .. x_{n_terms}.
/// A nonpositive entry does not stop the run; its index is recorded.
SolutionPrefix solve_recurrence(const ToeplitzSymbol& symbol, const SeedVector& seed,
                                std::size_t n_terms);

/// Dense re-application oracle: computes (Tx)_j for every window index from
/// the stored entries alone (the sums are finite, so there is no truncation
/// error), stores and returns max_j |(Tx)_j - x_j|.
double verify_residual(const ToeplitzSymbol& symbol, SolutionPrefix& prefix);

/// Rescaled copy: unit_l1 divides by the l1 norm of the computed prefix,
/// x0_equals_1 divides by the first entry.
SolutionPrefix normalized(const SolutionPrefix& prefix, Normalization mode);

enum class SumCase { SumAboveOne, SumEqualsOne, SumBelowOne };
enum class BoundedVerdict { Bounded, Unbounded, BoundedIffMoment, Unknown };

struct ClassificationReport {
  SumCase sum_case = SumCase::SumEqualsOne;
  double total_sum = 0.0;
  double first_moment = 0.0;
  std::size_t moment_bound_n = 0;
  BoundedVerdict bounded_verdict = BoundedVerdict::Unknown;
  bool verdict_requires_root_convexity = false;
  RootConvexityReport root_convexity;
  std::optional<double> limit_value;  // n = 1, balanced mass, moment < 1; for x_0 = 1
};

/// Trichotomy on the total coefficient mass (tie band 1e-12 around 1):
/// above one all positive solutions are bounded and vanish at infinity;
/// below one any positive solution is unbounded; exactly one is the boundary
/// case where the first moment against the bandwidth decides, conditional on
/// the root-convexity check whose report is attached.
ClassificationReport classify(const ToeplitzSymbol& symbol, std::size_t grid_points = 1001,
                              double tolerance = 1e-12);

/// For n = 1 with total mass 1 and first moment < 1, the entries converge to
///   x_0 * t_{-1} / (1 - sum_{i>=1} i t_{i-1}).
double tail_limit(const ToeplitzSymbol& symbol, double x0);

enum class SummabilityVerdict { Summable, Diverging, Inconclusive };

struct SummabilityReport {
  std::vector<double> partial_sums;
  double tail_ratio_estimate = 0.0;  // mean of x_k / x_{k-1} over the last window
  SummabilityVerdict verdict = SummabilityVerdict::Inconclusive;
};

/// Ratio diagnostic over the last `window` consecutive entry pairs of a
/// positive prefix.  Summable needs the mean ratio below 1 - 1e-6 with the
/// windowed increments actually shrinking; Diverging needs it above 1 + 1e-6.
SummabilityReport summability_diagnostic(const SolutionPrefix& prefix, std::size_t window);

}  // namespace tfp
