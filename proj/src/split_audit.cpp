// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/split_audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tfp {

SplitOperators split(const ToeplitzSymbol& symbol) {
  return split(
      [&] {
        std::vector<double> with_diag{symbol.diag()};
        for (double c : symbol.lower().explicit_part()) with_diag.push_back(c);
        return CoefficientSequence(std::move(with_diag), symbol.lower().tail());
      }(),
      CoefficientSequence(symbol.upper()));
}

SplitOperators split(const CoefficientSequence& lower_with_diag,
                     const CoefficientSequence& upper) {
  if (lower_with_diag.explicit_count() == 0)
    throw std::invalid_argument("split: lower sequence must include the diagonal entry");
  SplitOperators s;
  s.diag = lower_with_diag.at(0);
  std::vector<double> strict(lower_with_diag.explicit_part().begin() + 1,
                             lower_with_diag.explicit_part().end());
  s.lower = CoefficientSequence(std::move(strict), lower_with_diag.tail());
  s.upper = upper;
  s.lower_with_diag = lower_with_diag;
  s.alpha = lower_with_diag.sum();
  return s;
}

double contraction_ratio(const SplitOperators& split, const std::vector<double>& x) {
  if (x.empty()) throw std::invalid_argument("contraction_ratio: empty vector");
  double norm = 0.0;
  for (double v : x) {
    if (!(v >= 0.0)) throw std::invalid_argument("contraction_ratio: vector must be nonnegative");
    norm += v;
  }
  if (norm <= 0.0) throw std::invalid_argument("contraction_ratio: vector must have positive mass");

  const auto& col = split.lower_with_diag;
  double image_mass = 0.0;
  // image head on [0, len): (T1 x)_q = sum_{i<=q} t_i x_{q-i}
  for (std::size_t q = 0; q < x.size(); ++q) {
    double entry = 0.0;
    for (std::size_t i = 0; i <= q; ++i) entry += col.at(i) * x[q - i];
    image_mass += entry;
  }
  // image mass past the head, column by column in closed form
  for (std::size_t j = 0; j < x.size(); ++j) image_mass += x[j] * col.tail_sum_from(x.size() - j);
  return image_mass / norm;
}

ContractionAudit audit_contraction(const SplitOperators& split, std::size_t trials,
                                   std::size_t support_len, std::uint64_t rng_seed) {
  if (trials == 0) throw std::invalid_argument("audit_contraction: trials must be >= 1");
  if (support_len == 0) throw std::invalid_argument("audit_contraction: support must be >= 1");

  ContractionAudit audit;
  audit.alpha = split.alpha;
  audit.trials = trials;
  audit.support_len = support_len;
  audit.rng_seed = rng_seed;

  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> x(support_len);
  for (std::size_t t = 0; t < trials; ++t) {
    double mass = 0.0;
    do {
      mass = 0.0;
      for (double& v : x) {
        v = dist(rng);
        mass += v;
      }
    } while (mass <= 0.0);
    audit.max_ratio = std::max(audit.max_ratio, contraction_ratio(split, x));
  }
  audit.pass = audit.max_ratio <= split.alpha + 1e-10;
  return audit;
}

CertifiedVector CertifiedVector::finite(std::vector<double> entries) {
  return CertifiedVector{CoefficientSequence(std::move(entries)), 0.0};
}

CertifiedVector CertifiedVector::geometric(std::vector<double> prefix, GeometricTail tail) {
  return CertifiedVector{CoefficientSequence(std::move(prefix), tail), 0.0};
}

CertifiedVector CertifiedVector::bounded_tail(std::vector<double> prefix, double slack) {
  if (!std::isfinite(slack) || slack < 0.0)
    throw std::invalid_argument("certified vector: tail bound must be finite and >= 0");
  return CertifiedVector{CoefficientSequence(std::move(prefix)), slack};
}

CertifiedVector CertifiedVector::l1_normalized() const {
  const double mass = mass_bound();
  if (mass <= 0.0)
    throw std::invalid_argument("certified vector: zero mass cannot be normalized");
  return CertifiedVector{seq.scaled(1.0 / mass), tail_slack / mass};
}

EquismallnessReport audit_equismallness(const SplitOperators& split, double epsilon,
                                        const std::vector<CertifiedVector>& family) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("audit_equismallness: epsilon must be > 0");
  if (family.empty()) throw std::invalid_argument("audit_equismallness: empty family");

  const double upper_mass = split.upper_sum();
  EquismallnessReport report;
  report.epsilon = epsilon;
  report.family_size = family.size();

  constexpr std::size_t kSearchCap = 1u << 24;
  for (std::size_t cut = 0;; ++cut) {
    double worst = 0.0;
    for (const CertifiedVector& m : family)
      worst = std::max(worst, upper_mass * m.tail_bound_from(cut));
    if (worst <= epsilon) {
      report.n_epsilon = cut;
      report.max_tail_observed = worst;
      return report;
    }
    if (cut >= kSearchCap)
      throw std::runtime_error(
          "audit_equismallness: certified tail bounds too weak for the requested epsilon");
  }
}

}  // namespace tfp
