// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "tfp/general.hpp"
#include "tfp/perron.hpp"

namespace tfp {

/// Convergence record over a family of growing leading principal sections.
/// Per size j: the dominant eigenpair of the (j+1)x(j+1) block and the
/// defect of its padded eigenvector against the full matrix's leading row
/// equations.  `prefix_distances` holds l1 gaps between consecutive sizes'
/// vectors on the common prefix (one fewer entry than sizes), each vector
/// rescaled so coordinate 0 equals 1.
struct TruncationStudy {
  std::vector<std::size_t> sizes;
  std::vector<double> eigenvalues;
  std::vector<bool> converged;
  std::vector<std::size_t> iterations;
  std::vector<std::vector<double>> vectors;  // x0 = 1 scaling, full length j+1
  std::vector<double> prefix_distances;
  std::vector<double> residuals_vs_full;   // max over the first prefix_len rows
  std::vector<double> unused_upper_mass;   // row coefficient mass past column j
  std::size_t prefix_len = 0;
};

struct TruncationStudyOptions {
  double tol = 1e-10;
  std::size_t max_iter = 200000;
  std::size_t prefix_len = 10;
  unsigned threads = 1;
};

/// Runs perron_solve on the LeadingPrincipal section for each requested size
/// (sizes must be strictly increasing, prefix_len <= smallest size).  Sizes
/// are solved independently, optionally across threads, and aggregated in
/// size order.
TruncationStudy truncation_study(const GeneralMatrixSpec& spec,
                                 const std::vector<std::size_t>& sizes,
                                 const TruncationStudyOptions& options);

}  // namespace tfp
