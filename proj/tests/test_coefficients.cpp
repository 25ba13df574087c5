// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tfp/coefficients.hpp"

using tfp::CoefficientSequence;
using tfp::GeometricTail;

TEST_CASE("entry access over prefix and tail") {
  const CoefficientSequence seq({0.3, 0.1}, GeometricTail{0.2, 0.5});
  CHECK(seq.at(0) == 0.3);
  CHECK(seq.at(1) == 0.1);
  CHECK(seq.at(2) == 0.2);
  CHECK(seq.at(3) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(seq.at(10) == doctest::Approx(0.2 * std::pow(0.5, 8)).epsilon(1e-15));

  const CoefficientSequence finite({1.0, 2.0});
  CHECK(finite.at(2) == 0.0);
  CHECK(finite.at(100) == 0.0);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(CoefficientSequence({-0.1}), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientSequence({}, GeometricTail{-1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientSequence({}, GeometricTail{1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientSequence({}, GeometricTail{1.0, -0.1}), std::invalid_argument);
}

TEST_CASE("closed-form sums match brute-force summation") {
  const CoefficientSequence cases[] = {
      CoefficientSequence({0.5, 0.2}),
      CoefficientSequence({0.5, 0.2}, GeometricTail{0.1, 0.5}),
      CoefficientSequence({}, GeometricTail{1.0, 0.9}),
      CoefficientSequence({0.0, 0.0, 0.7}, GeometricTail{0.3, 0.25}),
  };
  for (const auto& seq : cases) {
    CHECK(seq.sum() == doctest::Approx(oracle::brute_sum(seq)).epsilon(1e-9));
    CHECK(seq.moment1(0) == doctest::Approx(oracle::brute_moment1(seq, 0)).epsilon(1e-9));
    CHECK(seq.moment1(3) == doctest::Approx(oracle::brute_moment1(seq, 3)).epsilon(1e-9));
    for (std::size_t first : {0u, 1u, 2u, 5u, 17u})
      CHECK(seq.tail_sum_from(first) ==
            doctest::Approx(oracle::brute_tail_sum_from(seq, first)).epsilon(1e-9));
    for (std::size_t count : {0u, 1u, 3u, 10u})
      CHECK(seq.prefix_sum(count) + seq.tail_sum_from(count) ==
            doctest::Approx(seq.sum()).epsilon(1e-12));
  }
}

TEST_CASE("series values and derivatives match term-by-term evaluation") {
  const CoefficientSequence seq({0.4, 0.0, 0.1}, GeometricTail{0.2, 0.6});
  for (double z : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    CHECK(seq.series_at(z) == doctest::Approx(oracle::brute_series(seq, z)).epsilon(1e-9));
    CHECK(seq.series_d1(z) == doctest::Approx(oracle::brute_series_d1(seq, z)).epsilon(1e-9));
    CHECK(seq.series_d2(z) == doctest::Approx(oracle::brute_series_d2(seq, z)).epsilon(1e-9));
  }

  // tail starting at index 0 exercises the p = 0 guards
  const CoefficientSequence pure_tail({}, GeometricTail{0.5, 0.5});
  CHECK(pure_tail.series_at(0.0) == 0.5);
  CHECK(pure_tail.series_d1(0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(pure_tail.series_d2(0.0) == doctest::Approx(2 * 0.5 * 0.25).epsilon(1e-15));
  for (double z : {0.3, 1.0}) {
    CHECK(pure_tail.series_d1(z) ==
          doctest::Approx(oracle::brute_series_d1(pure_tail, z)).epsilon(1e-9));
    CHECK(pure_tail.series_d2(z) ==
          doctest::Approx(oracle::brute_series_d2(pure_tail, z)).epsilon(1e-9));
  }
}

TEST_CASE("randomized sequences agree with the brute-force oracle") {
  std::mt19937_64 rng(991);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> len(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> ex(len(rng));
    for (double& c : ex) c = unit(rng);
    std::optional<GeometricTail> tail;
    if (unit(rng) < 0.7) tail = GeometricTail{unit(rng), 0.95 * unit(rng)};
    const CoefficientSequence seq(ex, tail);
    CHECK(seq.sum() == doctest::Approx(oracle::brute_sum(seq)).epsilon(1e-9));
    const double z = unit(rng);
    CHECK(seq.series_at(z) == doctest::Approx(oracle::brute_series(seq, z)).epsilon(1e-9));
    CHECK(seq.series_d1(z) == doctest::Approx(oracle::brute_series_d1(seq, z)).epsilon(1e-8));
  }
}

TEST_CASE("scaling is linear in every functional") {
  const CoefficientSequence seq({0.3, 0.1}, GeometricTail{0.2, 0.5});
  const CoefficientSequence twice = seq.scaled(2.0);
  CHECK(twice.sum() == doctest::Approx(2.0 * seq.sum()).epsilon(1e-15));
  CHECK(twice.moment1(1) == doctest::Approx(2.0 * seq.moment1(1)).epsilon(1e-15));
  CHECK(twice.series_at(0.7) == doctest::Approx(2.0 * seq.series_at(0.7)).epsilon(1e-15));
}

TEST_CASE("strict positivity needs a positive infinite tail") {
  CHECK(CoefficientSequence({0.1}, GeometricTail{0.2, 0.5}).strictly_positive());
  CHECK_FALSE(CoefficientSequence({0.1}).strictly_positive());
  CHECK_FALSE(CoefficientSequence({0.0}, GeometricTail{0.2, 0.5}).strictly_positive());
  CHECK_FALSE(CoefficientSequence({0.1}, GeometricTail{0.2, 0.0}).strictly_positive());
  CHECK_FALSE(CoefficientSequence({0.1}, GeometricTail{0.0, 0.5}).strictly_positive());
}
