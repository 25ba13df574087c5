// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tfp/symbol.hpp"

using tfp::CoefficientSequence;
using tfp::GeometricTail;
using tfp::ToeplitzSymbol;

namespace {

ToeplitzSymbol band1(double t_m1, double t0, std::vector<double> lower,
                     std::optional<GeometricTail> tail = std::nullopt) {
  return ToeplitzSymbol({t_m1}, t0, CoefficientSequence(std::move(lower), tail));
}

}  // namespace

TEST_CASE("construction validates the band") {
  CHECK_THROWS_AS(ToeplitzSymbol({}, 0.2, CoefficientSequence()), std::invalid_argument);
  CHECK_THROWS_AS(ToeplitzSymbol({0.5, 0.0}, 0.2, CoefficientSequence()),
                  std::invalid_argument);
  CHECK_THROWS_AS(ToeplitzSymbol({-0.5}, 0.2, CoefficientSequence()), std::invalid_argument);
  CHECK_THROWS_AS(ToeplitzSymbol({0.5}, -0.2, CoefficientSequence()), std::invalid_argument);
}

TEST_CASE("row series lays the coefficients out in reading order") {
  const ToeplitzSymbol sym({0.2, 0.4}, 0.1, CoefficientSequence({0.1}));
  // t_{-2} t_{-1} t_0 t_1
  CHECK(sym.row_series().at(0) == 0.4);
  CHECK(sym.row_series().at(1) == 0.2);
  CHECK(sym.row_series().at(2) == 0.1);
  CHECK(sym.row_series().at(3) == 0.1);
  CHECK(sym.row_series().at(4) == 0.0);
  CHECK(sym.upper_coeff(1) == 0.2);
  CHECK(sym.upper_coeff(2) == 0.4);
  CHECK(sym.upper_coeff(3) == 0.0);
  CHECK(sym.lower_coeff(1) == 0.1);
  CHECK(sym.lower_coeff(2) == 0.0);
}

TEST_CASE("generating function values") {
  CHECK(tfp::eval_tau(band1(0.6, 0.2, {0.2}), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(tfp::eval_tau(band1(1.0, 0.0, {}), 0.0) == 1.0);
  // geometric lower tail summed in closed form at z = 1
  CHECK(tfp::eval_tau(band1(0.5, 0.2, {}, GeometricTail{0.1, 0.5}), 1.0) ==
        doctest::Approx(0.9).epsilon(1e-15));
  CHECK_THROWS_AS(tfp::eval_tau(band1(1.0, 0.0, {}), -0.1), std::domain_error);
  CHECK_THROWS_AS(tfp::eval_tau(band1(1.0, 0.0, {}), 1.1), std::domain_error);
}

TEST_CASE("mass functionals") {
  const ToeplitzSymbol a = band1(0.8, 0.2, {0.2});
  CHECK(a.total_sum() == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(a.upper_sum() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(a.lower_plus_diag_sum() == doctest::Approx(0.4).epsilon(1e-15));

  const ToeplitzSymbol b = band1(1.0, 0.0, {});
  CHECK(b.total_sum() == 1.0);
  CHECK(b.lower_plus_diag_sum() == 0.0);

  const ToeplitzSymbol c = band1(0.5, 0.2, {0.1});
  CHECK(c.total_sum() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(c.lower_plus_diag_sum() == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("first moment of the row series") {
  CHECK(tfp::first_moment(band1(0.6, 0.2, {0.2})) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(tfp::first_moment(band1(1.0, 0.0, {})) == 0.0);
  const ToeplitzSymbol wide({0.2, 0.4}, 0.1, CoefficientSequence());
  CHECK(tfp::first_moment(wide) == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("root convexity check on hand cases") {
  // n = 2, only t_{-2} and t_0: h(z) = 0.2(0.4 + 0.1 z^2) - 0.5 (0.2 z)^2 = 0.08
  const ToeplitzSymbol flat({0.0, 0.4}, 0.1, CoefficientSequence());
  const auto ok = tfp::check_root_convexity(flat, 101, 1e-12);
  CHECK(ok.holds);
  CHECK(ok.min_h == doctest::Approx(0.08).epsilon(1e-12));

  // n = 2 with a linear series: h = -0.5 * 0.2^2 = -0.02 everywhere
  const ToeplitzSymbol bad({0.2, 0.4}, 0.0, CoefficientSequence());
  const auto fail = tfp::check_root_convexity(bad, 101, 1e-12);
  CHECK_FALSE(fail.holds);
  CHECK(fail.min_h == doctest::Approx(-0.02).epsilon(1e-12));
}

TEST_CASE("properties over randomized symbols") {
  oracle::SymbolSampler sampler(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const ToeplitzSymbol sym = sampler.sample();

    // value at 1 equals the total mass
    CHECK(tfp::eval_tau(sym, 1.0) == doctest::Approx(sym.total_sum()).epsilon(1e-12));

    // nondecreasing in z
    double prev = tfp::eval_tau(sym, 0.0);
    for (int k = 1; k <= 16; ++k) {
      const double cur = tfp::eval_tau(sym, k / 16.0);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }

    CHECK(tfp::first_moment(sym) >= 0.0);

    // bandwidth 1 always passes the convexity check
    if (sym.bandwidth() == 1) CHECK(tfp::check_root_convexity(sym).holds);
  }
}

TEST_CASE("first moment vanishes exactly for the bare shift") {
  CHECK(tfp::first_moment(band1(1.0, 0.0, {})) == 0.0);
  const ToeplitzSymbol shifted({0.0, 0.7}, 0.0, CoefficientSequence());
  CHECK(tfp::first_moment(shifted) == 0.0);
  // any extra mass above index 0 makes it positive
  CHECK(tfp::first_moment(band1(1.0, 0.1, {})) > 0.0);
}
