// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "tfp/general.hpp"

namespace tfp {

struct PerronResult {
  double lambda = 0.0;
  std::vector<double> vec;  // unit l1 norm, nonnegative
  std::size_t iterations = 0;
  bool converged = false;
  bool damped = false;  // averaging kicked in to break an oscillation
};

/// Power iteration with l1 normalization, started from the all-ones vector.
/// Stops when consecutive normalized iterates differ by less than `tol` in
/// l1.  A period-2 oscillation (iterate matching its second predecessor) is
/// broken by averaging the two successive iterates.  The eigenvalue estimate
/// is the image mass of the final normalized vector.
PerronResult perron_solve(const DenseMatrix& m, double tol, std::size_t max_iter);

/// Same iteration from a caller-supplied nonnegative start vector.
PerronResult perron_solve(const DenseMatrix& m, double tol, std::size_t max_iter,
                          std::vector<double> start);

}  // namespace tfp
