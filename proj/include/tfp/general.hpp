// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "tfp/coefficients.hpp"
#include "tfp/symbol.hpp"

namespace tfp {

/// Dense square nonnegative matrix, row major.  Small: only holds finite
/// sections of the infinite operators.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  std::vector<double> apply(const std::vector<double>& v) const;
  double row_sum(std::size_t r) const;
  double min_row_sum() const;
  double max_row_sum() const;
  DenseMatrix scaled(double factor) const;

  void write_csv(std::ostream& os) const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Row-varying nonnegative infinite matrix.  Row j (1-based) reads
///   t_{j-1}^{(j)} ... t_1^{(j)} t_0^{(j)} t_{-1}^{(j)} t_{-2}^{(j)} ...
/// Two generator rules are supported:
///  - table: explicit per-row coefficient pairs up to a maximum row;
///  - parametric: base coefficient pair scaled by the row factor 1 + e/j
///    on both sides of the diagonal.
class GeneralMatrixSpec {
 public:
  struct Row {
    CoefficientSequence lower;  // index i carries t_i^{(j)}; index 0 is the diagonal
    CoefficientSequence upper;  // index i carries t_{-(i+1)}^{(j)}

    bool operator==(const Row&) const = default;
  };

  static GeneralMatrixSpec table(std::vector<Row> rows, bool strictly_positive = false);
  static GeneralMatrixSpec parametric(CoefficientSequence lower_base,
                                      CoefficientSequence upper_base, double row_factor_e,
                                      bool strictly_positive = false);

  /// Row-constant spec equal to a banded Toeplitz symbol.
  static GeneralMatrixSpec constant_toeplitz(const ToeplitzSymbol& symbol);

  bool is_parametric() const { return parametric_; }
  bool strictly_positive_mode() const { return strictly_positive_; }
  double row_factor_e() const { return row_factor_e_; }

  /// Largest row the generator can produce (SIZE_MAX when parametric).
  std::size_t max_row() const;

  /// 1 + e/row for the parametric rule, 1 for tables.
  double row_factor(std::size_t row) const;

  /// t_offset^{(row)}; offset >= 0 selects the diagonal-and-below sequence,
  /// offset < 0 the above-diagonal one.  Defined for every offset, including
  /// positions left of column zero which the hypothesis sums still range over.
  double coeff(std::size_t row, long offset) const;

  double row_upper_sum(std::size_t row) const;
  double row_upper_prefix_sum(std::size_t row, std::size_t count) const;
  double row_lower_prefix_sum(std::size_t row, std::size_t count) const;

  /// Row mass as it appears in the matrix: the `row` on-and-below-diagonal
  /// entries plus the full upper sum.
  double row_total(std::size_t row) const;

  const CoefficientSequence& parametric_lower() const;
  const CoefficientSequence& parametric_upper() const;
  const std::vector<Row>& rows() const { return rows_; }

 private:
  GeneralMatrixSpec() = default;
  void validate_strict() const;
  const Row& row_at(std::size_t row) const;

  bool parametric_ = false;
  bool strictly_positive_ = false;
  double row_factor_e_ = 0.0;
  CoefficientSequence lower_base_;
  CoefficientSequence upper_base_;
  std::vector<Row> rows_;
};

enum class TailSupremumMode { ScannedRows, ClosedForm };

struct HypothesisReport {
  double contraction_sum = 0.0;   // sum_i sup_k t_i^{(k+1)}
  bool contraction_pass = false;  // < 1
  double upper_mass_sup = 0.0;    // sup_k sum_{i>=1} t_{-i}^{(k)}
  bool upper_mass_finite = false;
  double row_total_liminf = 0.0;  // liminf_k of the row masses
  bool row_total_pass = false;    // > 1
  std::size_t rows_examined = 0;
};

/// Audits the three admissibility conditions: the column-wise supremum mass
/// below one (contraction of the lower part), finite supremum of the upper
/// row masses, and row totals staying above one in the limit.  ClosedForm is
/// exact and only available for parametric specs; ScannedRows estimates the
/// extremes from the first `rows_to_scan` rows (the liminf from the later
/// half of that range) and never claims more than the scanned range.
HypothesisReport check_hypotheses(const GeneralMatrixSpec& spec, std::size_t rows_to_scan,
                                  TailSupremumMode mode);

enum class TruncationKind { ToeplitzFromRow, LeadingPrincipal };

/// (j+1)x(j+1) section: ToeplitzFromRow replicates row j+1's coefficients
/// along every diagonal; LeadingPrincipal is the top-left block of the full
/// matrix.
DenseMatrix truncate(const GeneralMatrixSpec& spec, std::size_t j, TruncationKind kind);

}  // namespace tfp
