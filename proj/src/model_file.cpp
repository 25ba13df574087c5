// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/model_file.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace tfp {

namespace {

struct KeyValue {
  std::string key;
  std::vector<std::string> values;
  std::size_t line = 0;
  bool used = false;
};

struct Block {
  std::string name;
  std::size_t line = 0;
  std::vector<KeyValue> entries;
};

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<Block> lex_blocks(const std::string& text) {
  std::vector<Block> blocks;
  Block* open = nullptr;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trimmed(raw);
    if (line.empty()) continue;
    if (line == "}") {
      if (!open) throw ParseError(line_no, "", "unmatched '}'");
      open = nullptr;
      continue;
    }
    if (line.back() == '{') {
      if (open) throw ParseError(line_no, open->name, "missing '}' before new block");
      const std::string name = trimmed(line.substr(0, line.size() - 1));
      if (name.empty() || name.find_first_of(" \t=") != std::string::npos)
        throw ParseError(line_no, name, "malformed block header");
      blocks.push_back(Block{name, line_no, {}});
      open = &blocks.back();
      continue;
    }
    const auto eq = line.find('=');
    if (!open || eq == std::string::npos)
      throw ParseError(line_no, "", "expected 'key = value' inside a block");
    KeyValue kv;
    kv.key = trimmed(line.substr(0, eq));
    kv.line = line_no;
    if (kv.key.empty()) throw ParseError(line_no, open->name, "empty key");
    std::istringstream vals(line.substr(eq + 1));
    std::string tok;
    while (vals >> tok) kv.values.push_back(tok);
    for (const KeyValue& prev : open->entries)
      if (prev.key == kv.key)
        throw ParseError(line_no, open->name + "." + kv.key, "duplicate key");
    open->entries.push_back(std::move(kv));
  }
  if (open) throw ParseError(line_no, open->name, "unterminated block");
  return blocks;
}

double parse_double(const std::string& tok, std::size_t line, const std::string& field) {
  double value = 0.0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, field, "not a number: '" + tok + "'");
  if (!std::isfinite(value)) throw ParseError(line, field, "value must be finite");
  return value;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const std::string& field) {
  std::size_t value = 0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, field, "not a positive integer: '" + tok + "'");
  return value;
}

class BlockReader {
 public:
  BlockReader(Block& block, std::string path) : block_(block), path_(std::move(path)) {}

  ~BlockReader() = default;

  const KeyValue* find(const std::string& key) {
    for (KeyValue& kv : block_.entries)
      if (kv.key == key) {
        kv.used = true;
        return &kv;
      }
    return nullptr;
  }

  std::optional<std::vector<double>> number_list(const std::string& key, bool nonnegative) {
    const KeyValue* kv = find(key);
    if (!kv) return std::nullopt;
    const std::string field = path_ + "." + key;
    if (kv->values.empty()) throw ParseError(kv->line, field, "expected at least one value");
    std::vector<double> out;
    for (const std::string& tok : kv->values) {
      const double v = parse_double(tok, kv->line, field);
      if (nonnegative && v < 0.0)
        throw ParseError(kv->line, field, "negative value not allowed");
      out.push_back(v);
    }
    return out;
  }

  std::optional<double> number(const std::string& key, bool nonnegative) {
    const KeyValue* kv = find(key);
    if (!kv) return std::nullopt;
    const std::string field = path_ + "." + key;
    if (kv->values.size() != 1) throw ParseError(kv->line, field, "expected exactly one value");
    const double v = parse_double(kv->values[0], kv->line, field);
    if (nonnegative && v < 0.0) throw ParseError(kv->line, field, "negative value not allowed");
    return v;
  }

  std::optional<std::size_t> count(const std::string& key) {
    const KeyValue* kv = find(key);
    if (!kv) return std::nullopt;
    const std::string field = path_ + "." + key;
    if (kv->values.size() != 1) throw ParseError(kv->line, field, "expected exactly one value");
    return parse_count(kv->values[0], kv->line, field);
  }

  std::optional<std::vector<std::size_t>> count_list(const std::string& key) {
    const KeyValue* kv = find(key);
    if (!kv) return std::nullopt;
    const std::string field = path_ + "." + key;
    if (kv->values.empty()) throw ParseError(kv->line, field, "expected at least one value");
    std::vector<std::size_t> out;
    for (const std::string& tok : kv->values) out.push_back(parse_count(tok, kv->line, field));
    return out;
  }

  std::optional<bool> flag(const std::string& key) {
    const KeyValue* kv = find(key);
    if (!kv) return std::nullopt;
    const std::string field = path_ + "." + key;
    if (kv->values.size() != 1 || (kv->values[0] != "true" && kv->values[0] != "false"))
      throw ParseError(kv->line, field, "expected true or false");
    return kv->values[0] == "true";
  }

  std::optional<std::string> word(const std::string& key) {
    const KeyValue* kv = find(key);
    if (!kv) return std::nullopt;
    if (kv->values.size() != 1)
      throw ParseError(kv->line, path_ + "." + key, "expected exactly one value");
    return kv->values[0];
  }

  std::optional<GeometricTail> tail(const std::string& key) {
    const KeyValue* kv = find(key);
    if (!kv) return std::nullopt;
    const std::string field = path_ + "." + key;
    if (kv->values.size() != 2)
      throw ParseError(kv->line, field, "expected two values: amplitude and ratio");
    GeometricTail t;
    t.a = parse_double(kv->values[0], kv->line, field);
    t.r = parse_double(kv->values[1], kv->line, field);
    if (t.a < 0.0) throw ParseError(kv->line, field, "tail amplitude must be >= 0");
    if (t.r < 0.0 || t.r >= 1.0) throw ParseError(kv->line, field, "tail ratio must be in [0,1)");
    return t;
  }

  void reject_unknown() const {
    for (const KeyValue& kv : block_.entries)
      if (!kv.used) throw ParseError(kv.line, path_ + "." + kv.key, "unknown key");
  }

 private:
  Block& block_;
  std::string path_;
};

CoefficientSequence sequence_from(BlockReader& reader, const std::string& list_key,
                                  const std::string& tail_key) {
  auto values = reader.number_list(list_key, /*nonnegative=*/true);
  auto tail = reader.tail(tail_key);
  return CoefficientSequence(values.value_or(std::vector<double>{}), tail);
}

void render_number(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void render_list(std::ostream& os, const std::string& key, const std::vector<double>& values) {
  os << "  " << key << " =";
  for (double v : values) {
    os << ' ';
    render_number(os, v);
  }
  os << '\n';
}

void render_sequence(std::ostream& os, const std::string& key,
                     const CoefficientSequence& seq) {
  if (!seq.explicit_part().empty()) render_list(os, key, seq.explicit_part());
  if (seq.has_tail()) {
    os << "  " << key << "_tail = ";
    render_number(os, seq.tail()->a);
    os << ' ';
    render_number(os, seq.tail()->r);
    os << '\n';
  }
}

const char* normalization_name(Normalization n) {
  switch (n) {
    case Normalization::raw: return "raw";
    case Normalization::unit_l1: return "unit_l1";
    case Normalization::x0_equals_1: return "x0_equals_1";
  }
  return "raw";
}

}  // namespace

ParseError::ParseError(std::size_t line, std::string field, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (field.empty() ? std::string{} : ": " + field) + ": " + message),
      line_(line),
      field_(std::move(field)) {}

ModelFile ModelFile::parse_text(const std::string& text) {
  std::vector<Block> blocks = lex_blocks(text);

  auto take_block = [&](const std::string& name) -> Block* {
    for (Block& b : blocks)
      if (b.name == name) return &b;
    return nullptr;
  };

  Block* model_block = take_block("model");
  if (!model_block) throw ParseError(1, "model", "missing model block");

  ModelFile model;
  bool strict = false;
  {
    BlockReader reader(*model_block, "model");
    const auto kind = reader.word("kind");
    if (!kind) throw ParseError(model_block->line, "model.kind", "missing kind");
    if (*kind == "toeplitz") model.kind = ModelKind::toeplitz;
    else if (*kind == "general-table") model.kind = ModelKind::general_table;
    else if (*kind == "general-parametric") model.kind = ModelKind::general_parametric;
    else
      throw ParseError(model_block->line, "model.kind",
                       "unknown kind '" + *kind + "' (toeplitz, general-table, general-parametric)");
    strict = reader.flag("strict_positive").value_or(false);
    reader.reject_unknown();
  }

  if (model.kind == ModelKind::toeplitz) {
    Block* coeff = take_block("coefficients");
    if (!coeff) throw ParseError(model_block->line, "coefficients", "missing coefficients block");
    BlockReader reader(*coeff, "coefficients");
    auto upper = reader.number_list("upper", /*nonnegative=*/true);
    if (!upper) throw ParseError(coeff->line, "coefficients.upper", "missing superdiagonals");
    const double diag = reader.number("diag", /*nonnegative=*/true).value_or(0.0);
    CoefficientSequence lower = sequence_from(reader, "lower", "lower_tail");
    reader.reject_unknown();
    if (upper->back() <= 0.0)
      throw ParseError(coeff->line, "coefficients.upper", "last superdiagonal must be > 0");
    model.symbol.emplace(std::move(*upper), diag, std::move(lower));
  } else if (model.kind == ModelKind::general_parametric) {
    Block* coeff = take_block("coefficients");
    if (!coeff) throw ParseError(model_block->line, "coefficients", "missing coefficients block");
    BlockReader reader(*coeff, "coefficients");
    CoefficientSequence lower = sequence_from(reader, "lower", "lower_tail");
    CoefficientSequence upper = sequence_from(reader, "upper", "upper_tail");
    const double e = reader.number("row_factor", /*nonnegative=*/true).value_or(0.0);
    reader.reject_unknown();
    if (lower.explicit_count() == 0 && !lower.has_tail())
      throw ParseError(coeff->line, "coefficients.lower", "missing diagonal-and-lower values");
    try {
      model.spec = GeneralMatrixSpec::parametric(std::move(lower), std::move(upper), e, strict);
    } catch (const std::invalid_argument& err) {
      throw ParseError(coeff->line, "coefficients", err.what());
    }
  } else {
    std::vector<GeneralMatrixSpec::Row> rows;
    std::size_t row_index = 0;
    for (Block& block : blocks) {
      if (block.name != "row") continue;
      ++row_index;
      BlockReader reader(block, "row[" + std::to_string(row_index) + "]");
      GeneralMatrixSpec::Row row;
      row.lower = sequence_from(reader, "lower", "lower_tail");
      row.upper = sequence_from(reader, "upper", "upper_tail");
      reader.reject_unknown();
      if (row.lower.explicit_count() == 0 && !row.lower.has_tail())
        throw ParseError(block.line, "row[" + std::to_string(row_index) + "].lower",
                         "missing diagonal-and-lower values");
      rows.push_back(std::move(row));
    }
    if (rows.empty())
      throw ParseError(model_block->line, "row", "general-table model needs at least one row block");
    try {
      model.spec = GeneralMatrixSpec::table(std::move(rows), strict);
    } catch (const std::invalid_argument& err) {
      throw ParseError(model_block->line, "row", err.what());
    }
  }

  if (Block* solver = take_block("solver")) {
    BlockReader reader(*solver, "solver");
    if (auto seed = reader.number_list("seed", /*nonnegative=*/false)) {
      for (double v : *seed)
        if (v <= 0.0) throw ParseError(solver->line, "solver.seed", "seed entries must be > 0");
      model.solver.seed = std::move(*seed);
    }
    if (auto n = reader.count("n_terms")) {
      if (*n == 0) throw ParseError(solver->line, "solver.n_terms", "must be >= 1");
      model.solver.n_terms = *n;
    }
    if (auto w = reader.count("summability_window")) {
      if (*w == 0) throw ParseError(solver->line, "solver.summability_window", "must be >= 1");
      model.solver.summability_window = *w;
    }
    if (auto tol = reader.number("tolerance", /*nonnegative=*/true))
      model.solver.tolerance = *tol;
    if (auto norm = reader.word("normalization")) {
      if (*norm == "raw") model.solver.normalization = Normalization::raw;
      else if (*norm == "unit_l1") model.solver.normalization = Normalization::unit_l1;
      else if (*norm == "x0_equals_1") model.solver.normalization = Normalization::x0_equals_1;
      else
        throw ParseError(solver->line, "solver.normalization",
                         "expected raw, unit_l1 or x0_equals_1");
    }
    reader.reject_unknown();
  }

  if (Block* study = take_block("study")) {
    BlockReader reader(*study, "study");
    if (auto sizes = reader.count_list("sizes")) {
      if (!std::is_sorted(sizes->begin(), sizes->end()) ||
          std::adjacent_find(sizes->begin(), sizes->end()) != sizes->end())
        throw ParseError(study->line, "study.sizes", "sizes must be strictly increasing");
      model.study.sizes = std::move(*sizes);
    }
    if (auto p = reader.count("prefix_len")) {
      if (*p == 0) throw ParseError(study->line, "study.prefix_len", "must be >= 1");
      model.study.prefix_len = *p;
    }
    if (auto tol = reader.number("tol", /*nonnegative=*/true)) {
      if (*tol <= 0.0) throw ParseError(study->line, "study.tol", "must be > 0");
      model.study.tol = *tol;
    }
    if (auto m = reader.count("max_iter")) {
      if (*m == 0) throw ParseError(study->line, "study.max_iter", "must be >= 1");
      model.study.max_iter = *m;
    }
    reader.reject_unknown();
  }

  for (const Block& b : blocks) {
    if (b.name == "model" || b.name == "solver" || b.name == "study") continue;
    if (b.name == "coefficients" && model.kind != ModelKind::general_table) continue;
    if (b.name == "row" && model.kind == ModelKind::general_table) continue;
    throw ParseError(b.line, b.name, "unexpected block for this model kind");
  }
  return model;
}

ModelFile ModelFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::system_error(errno, std::generic_category(), "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str());
}

void ModelFile::write(std::ostream& os) const {
  os << "model {\n  kind = ";
  switch (kind) {
    case ModelKind::toeplitz: os << "toeplitz"; break;
    case ModelKind::general_table: os << "general-table"; break;
    case ModelKind::general_parametric: os << "general-parametric"; break;
  }
  os << '\n';
  if (spec && spec->strictly_positive_mode()) os << "  strict_positive = true\n";
  os << "}\n";

  if (kind == ModelKind::toeplitz) {
    os << "coefficients {\n";
    render_list(os, "upper", symbol->upper());
    os << "  diag = ";
    render_number(os, symbol->diag());
    os << '\n';
    render_sequence(os, "lower", symbol->lower());
    os << "}\n";
  } else if (kind == ModelKind::general_parametric) {
    os << "coefficients {\n";
    render_sequence(os, "lower", spec->parametric_lower());
    render_sequence(os, "upper", spec->parametric_upper());
    os << "  row_factor = ";
    render_number(os, spec->row_factor_e());
    os << '\n' << "}\n";
  } else {
    for (const auto& row : spec->rows()) {
      os << "row {\n";
      render_sequence(os, "lower", row.lower);
      render_sequence(os, "upper", row.upper);
      os << "}\n";
    }
  }

  os << "solver {\n";
  if (solver.seed) render_list(os, "seed", *solver.seed);
  os << "  n_terms = " << solver.n_terms << '\n';
  os << "  normalization = " << normalization_name(solver.normalization) << '\n';
  os << "  tolerance = ";
  render_number(os, solver.tolerance);
  os << '\n';
  os << "  summability_window = " << solver.summability_window << '\n';
  os << "}\n";

  os << "study {\n  sizes =";
  for (std::size_t s : study.sizes) os << ' ' << s;
  os << '\n';
  os << "  prefix_len = " << study.prefix_len << '\n';
  os << "  tol = ";
  render_number(os, study.tol);
  os << '\n';
  os << "  max_iter = " << study.max_iter << '\n';
  os << "}\n";
}

GeneralMatrixSpec ModelFile::as_general() const {
  if (spec) return *spec;
  return GeneralMatrixSpec::constant_toeplitz(*symbol);
}

bool model_equal(const ModelFile& a, const ModelFile& b) {
  if (a.kind != b.kind || !(a.solver == b.solver) || !(a.study == b.study)) return false;
  if (a.symbol.has_value() != b.symbol.has_value()) return false;
  if (a.symbol && !(a.symbol->upper() == b.symbol->upper() &&
                    a.symbol->diag() == b.symbol->diag() &&
                    a.symbol->lower() == b.symbol->lower()))
    return false;
  if (a.spec.has_value() != b.spec.has_value()) return false;
  if (a.spec) {
    const auto& s = *a.spec;
    const auto& t = *b.spec;
    if (s.is_parametric() != t.is_parametric() ||
        s.strictly_positive_mode() != t.strictly_positive_mode())
      return false;
    if (s.is_parametric()) {
      if (!(s.parametric_lower() == t.parametric_lower() &&
            s.parametric_upper() == t.parametric_upper() &&
            s.row_factor_e() == t.row_factor_e()))
        return false;
    } else if (!(s.rows() == t.rows())) {
      return false;
    }
  }
  return true;
}

}  // namespace tfp
