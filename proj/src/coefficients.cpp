// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace tfp {

namespace {

double ipow(double z, std::size_t k) {
  double acc = 1.0;
  for (std::size_t i = 0; i < k; ++i) acc *= z;
  return acc;
}

}  // namespace

CoefficientSequence::CoefficientSequence(std::vector<double> explicit_part,
                                         std::optional<GeometricTail> tail)
    : explicit_(std::move(explicit_part)), tail_(tail) {
  for (double c : explicit_) {
    if (!std::isfinite(c) || c < 0.0)
      throw std::invalid_argument("coefficient sequence: entries must be finite and >= 0");
  }
  if (tail_) {
    if (!std::isfinite(tail_->a) || tail_->a < 0.0)
      throw std::invalid_argument("coefficient sequence: tail amplitude must be finite and >= 0");
    if (!std::isfinite(tail_->r) || tail_->r < 0.0 || tail_->r >= 1.0)
      throw std::invalid_argument("coefficient sequence: tail ratio must satisfy 0 <= r < 1");
  }
}

double CoefficientSequence::at(std::size_t i) const {
  if (i < explicit_.size()) return explicit_[i];
  if (!tail_) return 0.0;
  return tail_->a * std::pow(tail_->r, static_cast<double>(i - explicit_.size()));
}

double CoefficientSequence::sum() const {
  double acc = 0.0;
  for (double c : explicit_) acc += c;
  if (tail_) acc += tail_->a / (1.0 - tail_->r);
  return acc;
}

double CoefficientSequence::prefix_sum(std::size_t count) const {
  double acc = 0.0;
  const std::size_t head = std::min(count, explicit_.size());
  for (std::size_t i = 0; i < head; ++i) acc += explicit_[i];
  if (tail_ && count > explicit_.size()) {
    const auto k = static_cast<double>(count - explicit_.size());
    acc += tail_->a * (1.0 - std::pow(tail_->r, k)) / (1.0 - tail_->r);
  }
  return acc;
}

double CoefficientSequence::tail_sum_from(std::size_t first) const {
  double acc = 0.0;
  for (std::size_t i = first; i < explicit_.size(); ++i) acc += explicit_[i];
  if (tail_) {
    const std::size_t start = first > explicit_.size() ? first - explicit_.size() : 0;
    acc += tail_->a * std::pow(tail_->r, static_cast<double>(start)) / (1.0 - tail_->r);
  }
  return acc;
}

double CoefficientSequence::moment1(long offset) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < explicit_.size(); ++i)
    acc += (static_cast<double>(i) + static_cast<double>(offset)) * explicit_[i];
  if (tail_) {
    // sum_{k>=0} (E + k + offset) a r^k with E the prefix length
    const double e = static_cast<double>(explicit_.size()) + static_cast<double>(offset);
    const double q = 1.0 - tail_->r;
    acc += tail_->a * (e / q + tail_->r / (q * q));
  }
  return acc;
}

double CoefficientSequence::series_at(double z) const {
  double acc = 0.0;
  double zp = 1.0;
  for (double c : explicit_) {
    acc += c * zp;
    zp *= z;
  }
  if (tail_) acc += tail_->a * zp / (1.0 - tail_->r * z);  // zp == z^E here
  return acc;
}

double CoefficientSequence::series_d1(double z) const {
  double acc = 0.0;
  for (std::size_t i = 1; i < explicit_.size(); ++i)
    acc += static_cast<double>(i) * explicit_[i] * ipow(z, i - 1);
  if (tail_) {
    const std::size_t p = explicit_.size();
    const double a = tail_->a, r = tail_->r;
    const double q = 1.0 - r * z;
    if (p >= 1) acc += a * static_cast<double>(p) * ipow(z, p - 1) / q;
    acc += a * r * ipow(z, p) / (q * q);
  }
  return acc;
}

double CoefficientSequence::series_d2(double z) const {
  double acc = 0.0;
  for (std::size_t i = 2; i < explicit_.size(); ++i)
    acc += static_cast<double>(i) * static_cast<double>(i - 1) * explicit_[i] * ipow(z, i - 2);
  if (tail_) {
    const std::size_t p = explicit_.size();
    const double a = tail_->a, r = tail_->r;
    const double q = 1.0 - r * z;
    if (p >= 2)
      acc += a * static_cast<double>(p) * static_cast<double>(p - 1) * ipow(z, p - 2) / q;
    if (p >= 1) acc += 2.0 * a * static_cast<double>(p) * r * ipow(z, p - 1) / (q * q);
    acc += 2.0 * a * r * r * ipow(z, p) / (q * q * q);
  }
  return acc;
}

CoefficientSequence CoefficientSequence::scaled(double factor) const {
  if (!std::isfinite(factor) || factor < 0.0)
    throw std::invalid_argument("coefficient sequence: scale factor must be finite and >= 0");
  std::vector<double> e = explicit_;
  for (double& c : e) c *= factor;
  std::optional<GeometricTail> t = tail_;
  if (t) t->a *= factor;
  return CoefficientSequence(std::move(e), t);
}

bool CoefficientSequence::strictly_positive() const {
  for (double c : explicit_)
    if (c <= 0.0) return false;
  return tail_ && tail_->a > 0.0 && tail_->r > 0.0;
}

}  // namespace tfp
