// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace tfp {

namespace {

struct SizeOutcome {
  PerronResult perron;
  std::vector<double> unit_head;  // eigenvector rescaled to coordinate 0 = 1
  double residual = 0.0;
  double unused_mass = 0.0;
};

// Residual of the padded vector against the full spec's row q equation:
// everything the available coordinates can reach is applied exactly; the row
// mass falling past the last available column is reported as a separate
// bound, not folded into the residual.
double row_defect(const GeneralMatrixSpec& spec, const std::vector<double>& w, std::size_t q) {
  double image = 0.0;
  for (std::size_t c = 0; c < w.size(); ++c)
    image += spec.coeff(q + 1, static_cast<long>(q) - static_cast<long>(c)) * w[c];
  return std::abs(image - w[q]);
}

SizeOutcome solve_size(const GeneralMatrixSpec& spec, std::size_t j,
                       const TruncationStudyOptions& options) {
  SizeOutcome out;
  const DenseMatrix block = truncate(spec, j, TruncationKind::LeadingPrincipal);
  out.perron = perron_solve(block, options.tol, options.max_iter);

  const double head = out.perron.vec.empty() ? 0.0 : out.perron.vec.front();
  if (head > 0.0) {
    out.unit_head = out.perron.vec;
    for (double& x : out.unit_head) x /= head;
  }

  if (!out.unit_head.empty()) {
    for (std::size_t q = 0; q < options.prefix_len; ++q) {
      out.residual = std::max(out.residual, row_defect(spec, out.unit_head, q));
      out.unused_mass = std::max(
          out.unused_mass, spec.row_upper_sum(q + 1) - spec.row_upper_prefix_sum(q + 1, j - q));
    }
  }
  return out;
}

}  // namespace

TruncationStudy truncation_study(const GeneralMatrixSpec& spec,
                                 const std::vector<std::size_t>& sizes,
                                 const TruncationStudyOptions& options) {
  if (sizes.empty()) throw std::invalid_argument("truncation_study: no sizes given");
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
    throw std::invalid_argument("truncation_study: sizes must be strictly increasing");
  if (options.prefix_len == 0 || options.prefix_len > sizes.front())
    throw std::invalid_argument("truncation_study: prefix_len must be in [1, min size]");

  std::vector<SizeOutcome> outcomes(sizes.size());
  if (options.threads > 1 && sizes.size() > 1) {
    std::vector<std::future<SizeOutcome>> slots;
    slots.reserve(sizes.size());
    for (std::size_t k = 0; k < sizes.size(); ++k)
      slots.push_back(std::async(std::launch::async,
                                 [&, k] { return solve_size(spec, sizes[k], options); }));
    for (std::size_t k = 0; k < sizes.size(); ++k) outcomes[k] = slots[k].get();
  } else {
    for (std::size_t k = 0; k < sizes.size(); ++k) outcomes[k] = solve_size(spec, sizes[k], options);
  }

  TruncationStudy study;
  study.sizes = sizes;
  study.prefix_len = options.prefix_len;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const SizeOutcome& o = outcomes[k];
    study.eigenvalues.push_back(o.perron.lambda);
    study.converged.push_back(o.perron.converged);
    study.iterations.push_back(o.perron.iterations);
    study.vectors.push_back(o.unit_head);
    study.residuals_vs_full.push_back(o.residual);
    study.unused_upper_mass.push_back(o.unused_mass);
    if (k > 0) {
      const auto& a = outcomes[k - 1].unit_head;
      const auto& b = o.unit_head;
      double dist = std::numeric_limits<double>::quiet_NaN();
      if (!a.empty() && !b.empty()) {
        dist = 0.0;
        for (std::size_t q = 0; q < options.prefix_len; ++q) dist += std::abs(a[q] - b[q]);
      }
      study.prefix_distances.push_back(dist);
    }
  }
  return study;
}

}  // namespace tfp
