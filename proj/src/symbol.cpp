// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/symbol.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tfp {

namespace {

CoefficientSequence build_row_series(const std::vector<double>& upper, double diag,
                                     const CoefficientSequence& lower) {
  std::vector<double> coeffs;
  coeffs.reserve(upper.size() + 1 + lower.explicit_count());
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) coeffs.push_back(*it);
  coeffs.push_back(diag);
  for (double c : lower.explicit_part()) coeffs.push_back(c);
  return CoefficientSequence(std::move(coeffs), lower.tail());
}

}  // namespace

ToeplitzSymbol::ToeplitzSymbol(std::vector<double> upper, double diag, CoefficientSequence lower)
    : upper_(std::move(upper)),
      diag_(diag),
      lower_(std::move(lower)),
      row_series_(build_row_series(upper_, diag_, lower_)) {
  if (upper_.empty())
    throw std::invalid_argument("toeplitz symbol: at least one superdiagonal required");
  for (double c : upper_) {
    if (!std::isfinite(c) || c < 0.0)
      throw std::invalid_argument("toeplitz symbol: superdiagonal entries must be finite and >= 0");
  }
  if (upper_.back() <= 0.0)
    throw std::invalid_argument("toeplitz symbol: outermost superdiagonal t_{-n} must be > 0");
  if (!std::isfinite(diag_) || diag_ < 0.0)
    throw std::invalid_argument("toeplitz symbol: diagonal must be finite and >= 0");
}

double ToeplitzSymbol::upper_coeff(std::size_t i) const {
  if (i == 0 || i > upper_.size()) return 0.0;
  return upper_[i - 1];
}

double ToeplitzSymbol::upper_sum() const {
  double acc = 0.0;
  for (double c : upper_) acc += c;
  return acc;
}

double eval_tau(const ToeplitzSymbol& symbol, double z) {
  if (!(z >= 0.0 && z <= 1.0))
    throw std::domain_error("eval_tau: z must lie in [0,1]");
  return symbol.row_series().series_at(z);
}

double first_moment(const ToeplitzSymbol& symbol) {
  return symbol.row_series().moment1(0);
}

RootConvexityReport check_root_convexity(const ToeplitzSymbol& symbol, std::size_t grid_points,
                                         double tolerance) {
  if (grid_points < 2)
    throw std::invalid_argument("check_root_convexity: at least two grid points required");
  const auto& tau = symbol.row_series();
  const double n = static_cast<double>(symbol.bandwidth());
  const double weight = 1.0 - 1.0 / n;

  RootConvexityReport report;
  report.grid_points = grid_points;
  report.tolerance = tolerance;
  report.min_h = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double z = static_cast<double>(k) / static_cast<double>(grid_points - 1);
    const double d1 = tau.series_d1(z);
    const double h = tau.series_d2(z) * tau.series_at(z) - weight * d1 * d1;
    if (h < report.min_h) {
      report.min_h = h;
      report.argmin_z = z;
    }
  }
  report.holds = report.min_h >= -tolerance;
  return report;
}

}  // namespace tfp
