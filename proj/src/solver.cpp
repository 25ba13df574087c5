// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tfp {

namespace {

constexpr double kMassTieBand = 1e-12;

// Subdiagonal coefficients t_1 .. t_count as a flat array.  Tail values are
// chained products so consecutive entries stay consistent with each other.
std::vector<double> lower_coefficients(const ToeplitzSymbol& symbol, std::size_t count) {
  std::vector<double> t(count + 1, 0.0);
  const auto& lower = symbol.lower();
  const std::size_t e = lower.explicit_count();
  for (std::size_t i = 1; i <= count && i <= e; ++i) t[i] = lower.explicit_part()[i - 1];
  if (lower.has_tail()) {
    double v = lower.tail()->a;
    for (std::size_t i = e + 1; i <= count; ++i) {
      t[i] = v;
      v *= lower.tail()->r;
    }
  }
  return t;
}

}  // namespace

SeedVector::SeedVector(std::vector<double> values) : entries(std::move(values)) {
  if (entries.empty()) throw std::invalid_argument("seed: at least one entry required");
  for (double x : entries) {
    if (!std::isfinite(x) || x <= 0.0)
      throw std::invalid_argument("seed: entries must be finite and > 0");
  }
}

SeedVector ones_seed(const ToeplitzSymbol& symbol) {
  return SeedVector(std::vector<double>(symbol.bandwidth(), 1.0));
}

SolutionPrefix solve_recurrence(const ToeplitzSymbol& symbol, const SeedVector& seed,
                                std::size_t n_terms) {
  const std::size_t n = symbol.bandwidth();
  if (seed.entries.size() != n)
    throw std::invalid_argument("solve_recurrence: seed length must equal the bandwidth");
  if (n_terms < n)
    throw std::invalid_argument("solve_recurrence: n_terms must be at least the bandwidth");

  SolutionPrefix out{std::vector<double>(n_terms + 1, 0.0), seed, std::nullopt, std::nullopt,
                     0.0, Normalization::raw};
  auto& x = out.entries;
  std::copy(seed.entries.begin(), seed.entries.end(), x.begin());

  const std::vector<double> t_low = lower_coefficients(symbol, n_terms);
  const double t_minus_n = symbol.upper_coeff(n);
  const double one_minus_diag = 1.0 - symbol.diag();

  for (std::size_t j = 0; j + n <= n_terms; ++j) {
    double acc = one_minus_diag * x[j];
    for (std::size_t i = 1; i <= j; ++i) acc -= t_low[i] * x[j - i];
    for (std::size_t i = 1; i < n; ++i) acc -= symbol.upper_coeff(i) * x[j + i];
    const double v = acc / t_minus_n;
    x[j + n] = v;
    if (v < -kSignZeroBand) {
      if (!out.first_negative_index) out.first_negative_index = j + n;
    } else if (std::abs(v) <= kSignZeroBand) {
      if (!out.first_zero_index) out.first_zero_index = j + n;
    }
  }
  return out;
}

double verify_residual(const ToeplitzSymbol& symbol, SolutionPrefix& prefix) {
  const std::size_t n = symbol.bandwidth();
  const auto& x = prefix.entries;
  if (x.size() < n + 1)
    throw std::invalid_argument("verify_residual: prefix needs at least n+1 entries");

  double worst = 0.0;
  for (std::size_t j = 0; j + n < x.size(); ++j) {
    double image = symbol.diag() * x[j];
    for (std::size_t i = 1; i <= j; ++i) image += symbol.lower_coeff(i) * x[j - i];
    for (std::size_t i = 1; i <= n; ++i) image += symbol.upper_coeff(i) * x[j + i];
    worst = std::max(worst, std::abs(image - x[j]));
  }
  prefix.residual_max = worst;
  return worst;
}

SolutionPrefix normalized(const SolutionPrefix& prefix, Normalization mode) {
  SolutionPrefix out = prefix;
  out.normalization = mode;
  if (mode == Normalization::raw) return out;

  double scale = 0.0;
  if (mode == Normalization::x0_equals_1) {
    scale = prefix.entries.front();
    if (scale <= 0.0)
      throw std::invalid_argument("normalized: first entry must be positive for x0 scaling");
  } else {
    for (double v : prefix.entries) scale += std::abs(v);
    if (scale <= 0.0)
      throw std::invalid_argument("normalized: zero prefix cannot be given unit norm");
  }
  for (double& v : out.entries) v /= scale;
  for (double& v : out.seed.entries) v /= scale;
  out.residual_max = prefix.residual_max / scale;
  return out;
}

ClassificationReport classify(const ToeplitzSymbol& symbol, std::size_t grid_points,
                              double tolerance) {
  ClassificationReport report;
  report.total_sum = symbol.total_sum();
  report.first_moment = first_moment(symbol);
  report.moment_bound_n = symbol.bandwidth();
  report.root_convexity = check_root_convexity(symbol, grid_points, tolerance);

  const double gap = report.total_sum - 1.0;
  if (gap > kMassTieBand) {
    report.sum_case = SumCase::SumAboveOne;
    report.bounded_verdict = BoundedVerdict::Bounded;
  } else if (gap < -kMassTieBand) {
    report.sum_case = SumCase::SumBelowOne;
    report.bounded_verdict = BoundedVerdict::Unbounded;
  } else {
    report.sum_case = SumCase::SumEqualsOne;
    report.verdict_requires_root_convexity = true;
    const double n = static_cast<double>(symbol.bandwidth());
    const double moment_gap = report.first_moment - n;
    if (std::abs(moment_gap) <= tolerance) {
      report.bounded_verdict = BoundedVerdict::Unknown;
    } else if (!report.root_convexity.holds) {
      // The moment test is only decisive under root convexity; without it
      // the boundary criterion stays a conditional statement.
      report.bounded_verdict = BoundedVerdict::BoundedIffMoment;
    } else {
      report.bounded_verdict =
          moment_gap < 0.0 ? BoundedVerdict::Bounded : BoundedVerdict::Unbounded;
    }
    if (symbol.bandwidth() == 1 && report.first_moment < 1.0 &&
        std::abs(moment_gap) > tolerance) {
      report.limit_value = tail_limit(symbol, 1.0);
    }
  }
  return report;
}

double tail_limit(const ToeplitzSymbol& symbol, double x0) {
  if (symbol.bandwidth() != 1)
    throw std::invalid_argument("tail_limit: only defined for bandwidth 1");
  if (std::abs(symbol.total_sum() - 1.0) > kMassTieBand)
    throw std::invalid_argument("tail_limit: total coefficient mass must equal 1");
  if (!(x0 > 0.0)) throw std::invalid_argument("tail_limit: x0 must be positive");
  const double denom = 1.0 - first_moment(symbol);
  if (denom <= 0.0)
    throw std::invalid_argument("tail_limit: weighted moment must stay below 1");
  return x0 * symbol.upper_coeff(1) / denom;
}

SummabilityReport summability_diagnostic(const SolutionPrefix& prefix, std::size_t window) {
  if (prefix.first_negative_index)
    throw std::invalid_argument("summability_diagnostic: prefix must be positive");
  if (window == 0) throw std::invalid_argument("summability_diagnostic: window must be >= 1");
  const auto& x = prefix.entries;
  if (x.size() < 2)
    throw std::invalid_argument("summability_diagnostic: need at least two entries");

  SummabilityReport report;
  report.partial_sums.reserve(x.size());
  double acc = 0.0;
  for (double v : x) {
    acc += v;
    report.partial_sums.push_back(acc);
  }

  const std::size_t w = std::min(window, x.size() - 1);
  double ratio_sum = 0.0;
  double ratio_max = 0.0;
  bool degenerate = false;
  for (std::size_t k = x.size() - w; k < x.size(); ++k) {
    if (x[k - 1] <= 1e-300) {  // underflow guard only; tiny positive tails are fine
      degenerate = true;
      break;
    }
    const double r = x[k] / x[k - 1];
    ratio_sum += r;
    ratio_max = std::max(ratio_max, r);
  }
  if (degenerate) {
    report.tail_ratio_estimate = 0.0;
    report.verdict = SummabilityVerdict::Inconclusive;
    return report;
  }
  report.tail_ratio_estimate = ratio_sum / static_cast<double>(w);

  constexpr double kRatioBand = 1e-6;
  if (report.tail_ratio_estimate < 1.0 - kRatioBand && ratio_max < 1.0) {
    report.verdict = SummabilityVerdict::Summable;
  } else if (report.tail_ratio_estimate > 1.0 + kRatioBand) {
    report.verdict = SummabilityVerdict::Diverging;
  } else {
    report.verdict = SummabilityVerdict::Inconclusive;
  }
  return report;
}

}  // namespace tfp
