// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/perron.hpp"

#include <cmath>
#include <stdexcept>

namespace tfp {

namespace {

double l1_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += std::abs(x);
  return acc;
}

double l1_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

void normalize_l1(std::vector<double>& v, double norm) {
  for (double& x : v) x /= norm;
}

}  // namespace

PerronResult perron_solve(const DenseMatrix& m, double tol, std::size_t max_iter) {
  return perron_solve(m, tol, max_iter, std::vector<double>(m.size(), 1.0));
}

PerronResult perron_solve(const DenseMatrix& m, double tol, std::size_t max_iter,
                          std::vector<double> start) {
  if (!(tol > 0.0)) throw std::invalid_argument("perron_solve: tol must be positive");
  if (max_iter == 0) throw std::invalid_argument("perron_solve: max_iter must be >= 1");
  if (start.size() != m.size())
    throw std::invalid_argument("perron_solve: start vector dimension mismatch");
  for (double x : start)
    if (!(x >= 0.0)) throw std::invalid_argument("perron_solve: start vector must be nonnegative");

  PerronResult result;
  const double start_norm = l1_norm(start);
  if (start_norm <= 0.0)
    throw std::invalid_argument("perron_solve: start vector must have positive mass");
  normalize_l1(start, start_norm);

  std::vector<double> v = std::move(start);
  std::vector<double> prev_prev;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    std::vector<double> w = m.apply(v);
    const double mass = l1_norm(w);
    result.iterations = it;
    if (mass <= 0.0) {
      // v lies in the kernel: an exact eigenvector for eigenvalue 0.
      result.lambda = 0.0;
      result.vec = std::move(v);
      result.converged = true;
      return result;
    }
    normalize_l1(w, mass);
    if (l1_dist(w, v) < tol) {
      result.lambda = l1_norm(m.apply(w));
      result.vec = std::move(w);
      result.converged = true;
      return result;
    }
    if (!prev_prev.empty() && l1_dist(w, prev_prev) < tol) {
      // Period-2 cycle: average the two alternating iterates.
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = 0.5 * (w[i] + v[i]);
      normalize_l1(w, l1_norm(w));
      result.damped = true;
      prev_prev.clear();
      v = std::move(w);
      continue;
    }
    prev_prev = std::move(v);
    v = std::move(w);
  }
  result.lambda = l1_norm(m.apply(v));
  result.vec = std::move(v);
  result.converged = false;
  return result;
}

}  // namespace tfp
