// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "tfp/general.hpp"
#include "tfp/perron.hpp"
#include "tfp/solver.hpp"
#include "tfp/truncation.hpp"

using tfp::CoefficientSequence;
using tfp::DenseMatrix;
using tfp::GeneralMatrixSpec;
using tfp::GeometricTail;
using tfp::ToeplitzSymbol;
using tfp::TruncationKind;

namespace {

// lower t_i^(j) = 0.1 * 0.5^i * (1 + 0.5/j), upper t_{-i}^(j) = 0.45 * 0.5^(i-1) * (1 + 0.5/j)
GeneralMatrixSpec parametric_example() {
  return GeneralMatrixSpec::parametric(CoefficientSequence({}, GeometricTail{0.1, 0.5}),
                                       CoefficientSequence({}, GeometricTail{0.45, 0.5}), 0.5,
                                       /*strictly_positive=*/true);
}

// rows 2, 3, ... sum to 0.4 + 0.5 = 0.9 (row 1 to 0.7); the sub-diagonal mass
// keeps the sections irreducible
GeneralMatrixSpec row_sum_09_example() {
  return GeneralMatrixSpec::parametric(CoefficientSequence({0.2, 0.2}),
                                       CoefficientSequence({}, GeometricTail{0.25, 0.5}), 0.0);
}

}  // namespace

TEST_CASE("parametric generator values and row factors") {
  const GeneralMatrixSpec spec = parametric_example();
  CHECK(spec.row_factor(1) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(spec.row_factor(2) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(spec.coeff(1, 0) == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(spec.coeff(1, -1) == doctest::Approx(0.675).epsilon(1e-15));
  CHECK(spec.coeff(2, 1) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(spec.coeff(2, 0) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("strict positivity validation") {
  CHECK_THROWS_AS(GeneralMatrixSpec::parametric(CoefficientSequence({0.2}),
                                                CoefficientSequence({0.1}), 0.0,
                                                /*strictly_positive=*/true),
                  std::invalid_argument);
  CHECK_NOTHROW(parametric_example());
}

TEST_CASE("hypothesis audit on the parametric example") {
  const auto report =
      tfp::check_hypotheses(parametric_example(), 32, tfp::TailSupremumMode::ClosedForm);
  CHECK(report.contraction_sum == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(report.contraction_pass);
  CHECK(report.upper_mass_sup == doctest::Approx(1.35).epsilon(1e-14));
  CHECK(report.upper_mass_finite);
  CHECK(report.row_total_liminf == doctest::Approx(1.1).epsilon(1e-14));
  CHECK(report.row_total_pass);

  // the scanned estimate agrees on the suprema and stays above the limit
  const auto scanned =
      tfp::check_hypotheses(parametric_example(), 64, tfp::TailSupremumMode::ScannedRows);
  CHECK(scanned.contraction_sum == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(scanned.upper_mass_sup == doctest::Approx(1.35).epsilon(1e-12));
  CHECK(scanned.row_total_liminf >= 1.1);
  CHECK(scanned.row_total_pass);
}

TEST_CASE("hypothesis audit on a constant-Toeplitz spec") {
  const ToeplitzSymbol symbol({0.8}, 0.2, CoefficientSequence({0.2}));
  const auto spec = GeneralMatrixSpec::constant_toeplitz(symbol);
  const auto report = tfp::check_hypotheses(spec, 16, tfp::TailSupremumMode::ClosedForm);
  CHECK(report.contraction_sum == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(report.contraction_pass);
  CHECK(report.upper_mass_sup == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(report.row_total_liminf == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(report.row_total_pass);
}

TEST_CASE("hypothesis audit flags row totals below one") {
  const auto report =
      tfp::check_hypotheses(row_sum_09_example(), 16, tfp::TailSupremumMode::ClosedForm);
  CHECK(report.row_total_liminf == doctest::Approx(0.9).epsilon(1e-14));
  CHECK_FALSE(report.row_total_pass);
}

TEST_CASE("table specs audit over the stored rows only") {
  std::vector<GeneralMatrixSpec::Row> rows;
  for (int j = 1; j <= 6; ++j) {
    GeneralMatrixSpec::Row row;
    row.lower = CoefficientSequence({0.2 + 0.01 * j}, GeometricTail{0.05, 0.5});
    row.upper = CoefficientSequence({0.4}, GeometricTail{0.1, 0.25});
    rows.push_back(row);
  }
  const auto spec = GeneralMatrixSpec::table(rows);
  const auto report = tfp::check_hypotheses(spec, 6, tfp::TailSupremumMode::ScannedRows);
  // per-row lower mass is (0.2 + 0.01 j) + 0.1; the supremum sits on row 6
  CHECK(report.contraction_sum == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(report.upper_mass_sup == doctest::Approx(0.4 + 0.1 / 0.75).epsilon(1e-12));
  CHECK(report.rows_examined == 6);
  CHECK_THROWS_AS(tfp::check_hypotheses(spec, 7, tfp::TailSupremumMode::ScannedRows),
                  std::invalid_argument);
  CHECK_THROWS_AS(tfp::check_hypotheses(spec, 6, tfp::TailSupremumMode::ClosedForm),
                  std::invalid_argument);
}

TEST_CASE("sections of a banded constant-Toeplitz spec") {
  const ToeplitzSymbol symbol({0.6}, 0.2, CoefficientSequence({0.2}));
  const auto spec = GeneralMatrixSpec::constant_toeplitz(symbol);
  for (auto kind : {TruncationKind::ToeplitzFromRow, TruncationKind::LeadingPrincipal}) {
    const DenseMatrix m = tfp::truncate(spec, 2, kind);
    REQUIRE(m.size() == 3);
    const double expect[3][3] = {{0.2, 0.6, 0.0}, {0.2, 0.2, 0.6}, {0.0, 0.2, 0.2}};
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) CHECK(m(r, c) == doctest::Approx(expect[r][c]));
  }

  const DenseMatrix tiny = tfp::truncate(spec, 0, TruncationKind::LeadingPrincipal);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny(0, 0) == 0.2);
}

TEST_CASE("leading principal section of the parametric example") {
  const DenseMatrix m = tfp::truncate(parametric_example(), 1, TruncationKind::LeadingPrincipal);
  REQUIRE(m.size() == 2);
  CHECK(m(0, 0) == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(m(0, 1) == doctest::Approx(0.675).epsilon(1e-15));
  CHECK(m(1, 0) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(m(1, 1) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("the two section kinds coincide for row-constant specs") {
  const ToeplitzSymbol symbol({0.5}, 0.2, CoefficientSequence({0.1}, GeometricTail{0.05, 0.5}));
  const auto spec = GeneralMatrixSpec::constant_toeplitz(symbol);
  for (std::size_t j : {0u, 1u, 4u, 9u}) {
    const DenseMatrix a = tfp::truncate(spec, j, TruncationKind::ToeplitzFromRow);
    const DenseMatrix b = tfp::truncate(spec, j, TruncationKind::LeadingPrincipal);
    for (std::size_t r = 0; r <= j; ++r)
      for (std::size_t c = 0; c <= j; ++c) CHECK(a(r, c) == b(r, c));
  }
}

TEST_CASE("table sections reject out-of-range rows") {
  std::vector<GeneralMatrixSpec::Row> rows(2);
  rows[0].lower = CoefficientSequence({0.2});
  rows[0].upper = CoefficientSequence({0.3});
  rows[1].lower = CoefficientSequence({0.2, 0.1});
  rows[1].upper = CoefficientSequence({0.3});
  const auto spec = GeneralMatrixSpec::table(rows);
  CHECK_NOTHROW(tfp::truncate(spec, 1, TruncationKind::LeadingPrincipal));
  CHECK_THROWS_AS(tfp::truncate(spec, 2, TruncationKind::LeadingPrincipal),
                  std::invalid_argument);
  CHECK_THROWS_AS(tfp::truncate(spec, 2, TruncationKind::ToeplitzFromRow),
                  std::invalid_argument);
}

TEST_CASE("dominant eigenpair of small hand cases") {
  DenseMatrix one(1);
  one(0, 0) = 0.5;
  const auto r1 = tfp::perron_solve(one, 1e-12, 100);
  CHECK(r1.converged);
  CHECK(r1.lambda == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r1.vec == std::vector<double>{1.0});

  DenseMatrix swap(2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  // the symmetric start is already the fixed point
  const auto r2 = tfp::perron_solve(swap, 1e-12, 100);
  CHECK(r2.converged);
  CHECK(r2.lambda == doctest::Approx(1.0).epsilon(1e-12));
  // an asymmetric start alternates until the damping step merges the cycle
  const auto r3 = tfp::perron_solve(swap, 1e-12, 100, {0.3, 0.7});
  CHECK(r3.converged);
  CHECK(r3.damped);
  CHECK(r3.lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r3.vec[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r3.vec[1] == doctest::Approx(0.5).epsilon(1e-12));

  DenseMatrix two(2);
  two(0, 0) = 0.2;
  two(0, 1) = 0.6;
  two(1, 0) = 0.2;
  two(1, 1) = 0.2;
  const auto r4 = tfp::perron_solve(two, 1e-14, 10000);
  CHECK(r4.converged);
  CHECK(r4.lambda == doctest::Approx(0.2 + std::sqrt(0.12)).epsilon(1e-10));
  const auto image = two.apply(r4.vec);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(image[i] == doctest::Approx(r4.lambda * r4.vec[i]).epsilon(1e-9));
}

TEST_CASE("eigenvalue estimates respect row-sum bounds and scaling") {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = dim(rng);
    DenseMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = unit(rng);
    const double tol = 1e-12;
    const auto result = tfp::perron_solve(m, tol, 100000);
    REQUIRE(result.converged);
    CHECK(result.lambda >= m.min_row_sum() - 10 * tol);
    CHECK(result.lambda <= m.max_row_sum() + 10 * tol);

    const auto image = m.apply(result.vec);
    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i) defect += std::abs(image[i] - result.lambda * result.vec[i]);
    CHECK(defect <= 10 * tol);

    const auto scaled = tfp::perron_solve(m.scaled(3.0), tol, 100000);
    REQUIRE(scaled.converged);
    CHECK(scaled.lambda == doctest::Approx(3.0 * result.lambda).epsilon(1e-9));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(scaled.vec[i] == doctest::Approx(result.vec[i]).epsilon(1e-8));
  }
}

TEST_CASE("non-convergence is reported, not hidden") {
  DenseMatrix two(2);
  two(0, 0) = 0.2;
  two(0, 1) = 0.6;
  two(1, 0) = 0.2;
  two(1, 1) = 0.2;
  const auto r = tfp::perron_solve(two, 1e-14, 2);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
  CHECK(r.lambda <= two.max_row_sum() + 1e-12);
}

TEST_CASE("section study shrinks prefix gaps and matches the recurrence") {
  const ToeplitzSymbol symbol({0.8}, 0.2, CoefficientSequence({0.2}));
  const auto spec = GeneralMatrixSpec::constant_toeplitz(symbol);
  tfp::TruncationStudyOptions options;
  options.tol = 1e-10;
  options.max_iter = 200000;
  options.prefix_len = 20;
  const auto study = tfp::truncation_study(spec, {20, 40, 80}, options);

  REQUIRE(study.sizes.size() == 3);
  REQUIRE(study.prefix_distances.size() == 2);
  for (bool ok : study.converged) CHECK(ok);
  CHECK(study.prefix_distances[1] < study.prefix_distances[0]);

  // eigenvalues stay within the row-sum envelope of the sections
  for (double lambda : study.eigenvalues) CHECK(lambda <= 1.2 + 1e-9);

  // the largest section reproduces the recurrence ray on the shared prefix
  const auto exact = tfp::solve_recurrence(symbol, tfp::SeedVector({1.0}), 20);
  const auto& approx = study.vectors.back();
  double gap = 0.0;
  for (std::size_t k = 0; k < 20; ++k) gap += std::abs(approx[k] - exact.entries[k]);
  CHECK(gap < 5e-2);
}

TEST_CASE("single-size study has no distances") {
  const auto spec = GeneralMatrixSpec::constant_toeplitz(
      ToeplitzSymbol({0.8}, 0.2, CoefficientSequence({0.2})));
  tfp::TruncationStudyOptions options;
  options.prefix_len = 5;
  const auto study = tfp::truncation_study(spec, {5}, options);
  CHECK(study.sizes.size() == 1);
  CHECK(study.prefix_distances.empty());
  CHECK(study.eigenvalues.size() == 1);
}

TEST_CASE("study eigenvalues sit below the deficient row mass") {
  tfp::TruncationStudyOptions options;
  options.prefix_len = 5;
  const auto study = tfp::truncation_study(row_sum_09_example(), {5, 10, 20}, options);
  for (std::size_t k = 0; k < study.sizes.size(); ++k) {
    CHECK(study.converged[k]);
    CHECK(study.eigenvalues[k] <= 0.9 + 1e-9);
  }
}

TEST_CASE("study input validation") {
  const auto spec = GeneralMatrixSpec::constant_toeplitz(
      ToeplitzSymbol({0.8}, 0.2, CoefficientSequence({0.2})));
  tfp::TruncationStudyOptions options;
  CHECK_THROWS_AS(tfp::truncation_study(spec, {}, options), std::invalid_argument);
  CHECK_THROWS_AS(tfp::truncation_study(spec, {10, 10}, options), std::invalid_argument);
  CHECK_THROWS_AS(tfp::truncation_study(spec, {10, 5}, options), std::invalid_argument);
  options.prefix_len = 11;
  CHECK_THROWS_AS(tfp::truncation_study(spec, {10, 20}, options), std::invalid_argument);
}

TEST_CASE("threaded study aggregates identically to the serial one") {
  const auto spec = parametric_example();
  tfp::TruncationStudyOptions serial;
  serial.prefix_len = 6;
  tfp::TruncationStudyOptions threaded = serial;
  threaded.threads = 4;
  const auto a = tfp::truncation_study(spec, {6, 12, 24}, serial);
  const auto b = tfp::truncation_study(spec, {6, 12, 24}, threaded);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.prefix_distances == b.prefix_distances);
  CHECK(a.residuals_vs_full == b.residuals_vs_full);
}
