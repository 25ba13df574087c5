// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfp/general.hpp"
#include "tfp/solver.hpp"
#include "tfp/symbol.hpp"

namespace tfp {

/// Parse failure with the offending line and the dotted field path.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

enum class ModelKind { toeplitz, general_table, general_parametric };

struct SolverBlock {
  std::optional<std::vector<double>> seed;
  std::size_t n_terms = 200;
  Normalization normalization = Normalization::raw;
  double tolerance = 1e-12;  // classification tie tolerance
  std::size_t summability_window = 10;

  bool operator==(const SolverBlock&) const = default;
};

struct StudyBlock {
  std::vector<std::size_t> sizes{20, 40, 80};
  std::size_t prefix_len = 10;
  double tol = 1e-10;
  std::size_t max_iter = 200000;

  bool operator==(const StudyBlock&) const = default;
};

/// In-memory form of a model file: one matrix description plus solver and
/// study settings.  The text format is line oriented,
///
///   block_name {
///     key = value [value ...]
///   }
///
/// with `#` comments; see docs/model-format.md for the full grammar.
struct ModelFile {
  ModelKind kind = ModelKind::toeplitz;
  std::optional<ToeplitzSymbol> symbol;   // kind == toeplitz
  std::optional<GeneralMatrixSpec> spec;  // general kinds
  SolverBlock solver;
  StudyBlock study;

  static ModelFile parse_text(const std::string& text);
  static ModelFile load(const std::string& path);  // wraps I/O errors in std::system_error

  /// Canonical rendering; numbers carry 17 significant digits so a written
  /// model re-parses to bit-identical fields.
  void write(std::ostream& os) const;

  GeneralMatrixSpec as_general() const;  // constant-Toeplitz wrapper when toeplitz
};

bool model_equal(const ModelFile& a, const ModelFile& b);

}  // namespace tfp
