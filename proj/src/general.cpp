// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/general.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tfp {

std::vector<double> DenseMatrix::apply(const std::vector<double>& v) const {
  if (v.size() != n_) throw std::invalid_argument("dense matrix: dimension mismatch");
  std::vector<double> out(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    double acc = 0.0;
    const double* row = data_.data() + r * n_;
    for (std::size_t c = 0; c < n_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

double DenseMatrix::row_sum(std::size_t r) const {
  double acc = 0.0;
  for (std::size_t c = 0; c < n_; ++c) acc += (*this)(r, c);
  return acc;
}

double DenseMatrix::min_row_sum() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < n_; ++r) best = std::min(best, row_sum(r));
  return best;
}

double DenseMatrix::max_row_sum() const {
  double best = 0.0;
  for (std::size_t r = 0; r < n_; ++r) best = std::max(best, row_sum(r));
  return best;
}

DenseMatrix DenseMatrix::scaled(double factor) const {
  DenseMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * factor;
  return out;
}

void DenseMatrix::write_csv(std::ostream& os) const {
  char buf[32];
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", (*this)(r, c));
      os << buf << (c + 1 == n_ ? '\n' : ',');
    }
  }
}

GeneralMatrixSpec GeneralMatrixSpec::table(std::vector<Row> rows, bool strictly_positive) {
  if (rows.empty()) throw std::invalid_argument("general spec: table needs at least one row");
  GeneralMatrixSpec spec;
  spec.parametric_ = false;
  spec.strictly_positive_ = strictly_positive;
  spec.rows_ = std::move(rows);
  if (strictly_positive) spec.validate_strict();
  return spec;
}

GeneralMatrixSpec GeneralMatrixSpec::parametric(CoefficientSequence lower_base,
                                                CoefficientSequence upper_base,
                                                double row_factor_e, bool strictly_positive) {
  if (!std::isfinite(row_factor_e) || row_factor_e < 0.0)
    throw std::invalid_argument("general spec: row factor parameter must be finite and >= 0");
  GeneralMatrixSpec spec;
  spec.parametric_ = true;
  spec.strictly_positive_ = strictly_positive;
  spec.row_factor_e_ = row_factor_e;
  spec.lower_base_ = std::move(lower_base);
  spec.upper_base_ = std::move(upper_base);
  if (strictly_positive) spec.validate_strict();
  return spec;
}

GeneralMatrixSpec GeneralMatrixSpec::constant_toeplitz(const ToeplitzSymbol& symbol) {
  std::vector<double> lower{symbol.diag()};
  for (double c : symbol.lower().explicit_part()) lower.push_back(c);
  return parametric(CoefficientSequence(std::move(lower), symbol.lower().tail()),
                    CoefficientSequence(symbol.upper()), 0.0);
}

void GeneralMatrixSpec::validate_strict() const {
  if (parametric_) {
    if (!lower_base_.strictly_positive() || !upper_base_.strictly_positive())
      throw std::invalid_argument(
          "general spec: strictly positive mode requires positive entries on both sides");
    return;
  }
  for (const Row& row : rows_) {
    if (!row.lower.strictly_positive() || !row.upper.strictly_positive())
      throw std::invalid_argument(
          "general spec: strictly positive mode requires positive entries in every row");
  }
}

std::size_t GeneralMatrixSpec::max_row() const {
  return parametric_ ? std::numeric_limits<std::size_t>::max() : rows_.size();
}

double GeneralMatrixSpec::row_factor(std::size_t row) const {
  if (row == 0) throw std::invalid_argument("general spec: rows are 1-based");
  if (!parametric_) return 1.0;
  return 1.0 + row_factor_e_ / static_cast<double>(row);
}

const GeneralMatrixSpec::Row& GeneralMatrixSpec::row_at(std::size_t row) const {
  if (row == 0 || row > rows_.size())
    throw std::invalid_argument("general spec: row index outside the stored table");
  return rows_[row - 1];
}

double GeneralMatrixSpec::coeff(std::size_t row, long offset) const {
  if (parametric_) {
    const double f = row_factor(row);
    if (offset >= 0) return lower_base_.at(static_cast<std::size_t>(offset)) * f;
    return upper_base_.at(static_cast<std::size_t>(-offset - 1)) * f;
  }
  const Row& r = row_at(row);
  if (offset >= 0) return r.lower.at(static_cast<std::size_t>(offset));
  return r.upper.at(static_cast<std::size_t>(-offset - 1));
}

double GeneralMatrixSpec::row_upper_sum(std::size_t row) const {
  if (parametric_) return upper_base_.sum() * row_factor(row);
  return row_at(row).upper.sum();
}

double GeneralMatrixSpec::row_upper_prefix_sum(std::size_t row, std::size_t count) const {
  if (parametric_) return upper_base_.prefix_sum(count) * row_factor(row);
  return row_at(row).upper.prefix_sum(count);
}

double GeneralMatrixSpec::row_lower_prefix_sum(std::size_t row, std::size_t count) const {
  if (parametric_) return lower_base_.prefix_sum(count) * row_factor(row);
  return row_at(row).lower.prefix_sum(count);
}

double GeneralMatrixSpec::row_total(std::size_t row) const {
  return row_lower_prefix_sum(row, row) + row_upper_sum(row);
}

const CoefficientSequence& GeneralMatrixSpec::parametric_lower() const {
  if (!parametric_) throw std::invalid_argument("general spec: not a parametric spec");
  return lower_base_;
}

const CoefficientSequence& GeneralMatrixSpec::parametric_upper() const {
  if (!parametric_) throw std::invalid_argument("general spec: not a parametric spec");
  return upper_base_;
}

namespace {

// sum_i sup over the given rows of t_i^{(row)}, i >= 0.  Explicit prefixes
// are compared index by index; once every row is in its geometric regime the
// remaining supremum sum is sandwiched by the summed row tails, which are
// driven below double resolution before being added.
double scanned_contraction_sum(const GeneralMatrixSpec& spec, std::size_t rows_to_scan) {
  std::size_t longest_prefix = 1;
  for (std::size_t row = 1; row <= rows_to_scan; ++row) {
    const CoefficientSequence& lower =
        spec.is_parametric() ? spec.parametric_lower() : spec.rows()[row - 1].lower;
    longest_prefix = std::max(longest_prefix, lower.explicit_count());
    if (spec.is_parametric()) break;  // a single base sequence covers all rows
  }

  double acc = 0.0;
  std::size_t i = 0;
  for (;; ++i) {
    double sup = 0.0;
    for (std::size_t row = 1; row <= rows_to_scan; ++row)
      sup = std::max(sup, spec.coeff(row, static_cast<long>(i)));
    acc += sup;
    if (i + 1 < longest_prefix) continue;
    double remainder = 0.0;
    for (std::size_t row = 1; row <= rows_to_scan; ++row) {
      const CoefficientSequence& lower =
          spec.is_parametric() ? spec.parametric_lower() : spec.rows()[row - 1].lower;
      remainder += lower.tail_sum_from(i + 1) * spec.row_factor(row);
    }
    if (remainder <= 1e-16 * acc + 1e-300) {
      acc += remainder;
      break;
    }
  }
  return acc;
}

}  // namespace

HypothesisReport check_hypotheses(const GeneralMatrixSpec& spec, std::size_t rows_to_scan,
                                  TailSupremumMode mode) {
  if (rows_to_scan == 0)
    throw std::invalid_argument("check_hypotheses: must scan at least one row");
  if (!spec.is_parametric() && rows_to_scan > spec.max_row())
    throw std::invalid_argument("check_hypotheses: scan range exceeds the stored table");
  if (mode == TailSupremumMode::ClosedForm && !spec.is_parametric())
    throw std::invalid_argument("check_hypotheses: closed-form mode needs a parametric spec");

  HypothesisReport report;
  report.rows_examined = rows_to_scan;

  if (mode == TailSupremumMode::ClosedForm) {
    // The row factor 1 + e/j is largest at j = 1 and tends to 1, so the
    // suprema sit on row 1 and the liminf is the factor-free base mass.
    const double sup_factor = spec.row_factor(1);
    report.contraction_sum = spec.parametric_lower().sum() * sup_factor;
    report.upper_mass_sup = spec.parametric_upper().sum() * sup_factor;
    report.row_total_liminf = spec.parametric_lower().sum() + spec.parametric_upper().sum();
  } else {
    report.contraction_sum = scanned_contraction_sum(spec, rows_to_scan);
    double upper_sup = 0.0;
    for (std::size_t row = 1; row <= rows_to_scan; ++row)
      upper_sup = std::max(upper_sup, spec.row_upper_sum(row));
    report.upper_mass_sup = upper_sup;
    double liminf = std::numeric_limits<double>::infinity();
    for (std::size_t row = (rows_to_scan + 1) / 2; row <= rows_to_scan; ++row)
      liminf = std::min(liminf, spec.row_total(std::max<std::size_t>(row, 1)));
    report.row_total_liminf = liminf;
  }

  report.contraction_pass = report.contraction_sum < 1.0;
  report.upper_mass_finite = std::isfinite(report.upper_mass_sup);
  report.row_total_pass = report.row_total_liminf > 1.0;
  return report;
}

DenseMatrix truncate(const GeneralMatrixSpec& spec, std::size_t j, TruncationKind kind) {
  const std::size_t dim = j + 1;
  if (!spec.is_parametric() && dim > spec.max_row())
    throw std::invalid_argument("truncate: requested rows outside the stored table");
  DenseMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t source_row = kind == TruncationKind::ToeplitzFromRow ? j + 1 : r + 1;
    for (std::size_t c = 0; c < dim; ++c)
      m(r, c) = spec.coeff(source_row, static_cast<long>(r) - static_cast<long>(c));
  }
  return m;
}

}  // namespace tfp
