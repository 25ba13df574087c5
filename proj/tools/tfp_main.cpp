// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0
//
// tfp: batch front-end for the fixed-point toolkit.  Subcommands ingest a
// model file, dispatch to the solver/checker routines and emit JSON reports
// on stdout (CSV tables via --out).  Progress and warnings go to stderr.
//
// Exit codes: 0 success, 2 model parse failure, 3 usage or model-kind
// mismatch, 4 I/O failure, 5 total numerical failure, 6 hypothesis gate.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tfp/model_file.hpp"
#include "tfp/perron.hpp"
#include "tfp/report_json.hpp"
#include "tfp/solver.hpp"
#include "tfp/split_audit.hpp"
#include "tfp/truncation.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;
constexpr int kExitIo = 4;
constexpr int kExitNumerical = 5;
constexpr int kExitHypothesisGate = 6;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

tfp::ModelFile load_model(const std::string& path) { return tfp::ModelFile::load(path); }

const tfp::ToeplitzSymbol& require_toeplitz(const tfp::ModelFile& model) {
  if (model.kind != tfp::ModelKind::toeplitz || !model.symbol)
    throw UsageFailure("this command needs a toeplitz model");
  return *model.symbol;
}

const tfp::GeneralMatrixSpec& require_general(const tfp::ModelFile& model) {
  if (!model.spec) throw UsageFailure("this command needs a general matrix model");
  return *model.spec;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::system_error(errno, std::generic_category(), "cannot write '" + path + "'");
  return out;
}

void write_solution_csv(std::ostream& os, const std::vector<double>& entries) {
  os << "index,value\n";
  for (std::size_t i = 0; i < entries.size(); ++i)
    os << i << ',' << format_value(entries[i]) << '\n';
}

unsigned threads_from_env() {
  const char* raw = std::getenv("THREADS");
  if (!raw) return 1;
  const long v = std::strtol(raw, nullptr, 10);
  return v > 1 ? static_cast<unsigned>(v) : 1;
}

int cmd_classify(const std::string& model_path, std::size_t grid_points, double tolerance_flag) {
  const tfp::ModelFile model = load_model(model_path);
  const auto& symbol = require_toeplitz(model);
  const double tolerance = tolerance_flag >= 0.0 ? tolerance_flag : model.solver.tolerance;
  const tfp::ClassificationReport report = tfp::classify(symbol, grid_points, tolerance);
  nlohmann::json j = tfp::to_json(report);
  j["schema_version"] = tfp::kReportSchemaVersion;
  j["kind"] = "classification";
  emit(j);
  return 0;
}

int cmd_solve(const std::string& model_path, std::size_t n_terms_arg,
              const std::vector<double>& seed_arg, const std::string& normalize_arg,
              const std::string& out_path) {
  const tfp::ModelFile model = load_model(model_path);
  const auto& symbol = require_toeplitz(model);

  const std::size_t n_terms = n_terms_arg > 0 ? n_terms_arg : model.solver.n_terms;
  if (n_terms < symbol.bandwidth())
    throw UsageFailure("n_terms must be at least the bandwidth n");

  std::vector<double> seed_values;
  if (!seed_arg.empty()) seed_values = seed_arg;
  else if (model.solver.seed) seed_values = *model.solver.seed;
  else seed_values = std::vector<double>(symbol.bandwidth(), 1.0);
  if (seed_values.size() != symbol.bandwidth())
    throw UsageFailure("seed length must equal the bandwidth n");
  for (double v : seed_values)
    if (!(v > 0.0)) throw UsageFailure("seed entries must be > 0");

  tfp::Normalization normalization = model.solver.normalization;
  if (!normalize_arg.empty()) {
    if (normalize_arg == "raw") normalization = tfp::Normalization::raw;
    else if (normalize_arg == "unit_l1") normalization = tfp::Normalization::unit_l1;
    else if (normalize_arg == "x0_equals_1") normalization = tfp::Normalization::x0_equals_1;
    else throw UsageFailure("--normalize expects raw, unit_l1 or x0_equals_1");
  }

  tfp::SolutionPrefix prefix =
      tfp::solve_recurrence(symbol, tfp::SeedVector(seed_values), n_terms);
  tfp::verify_residual(symbol, prefix);
  const tfp::SolutionPrefix result = tfp::normalized(prefix, normalization);

  nlohmann::json summary{
      {"schema_version", tfp::kReportSchemaVersion},
      {"kind", "solve_summary"},
      {"n_terms", n_terms},
      {"seed", seed_values},
      {"normalization", tfp::to_string(normalization)},
      {"residual_max", prefix.residual_max},
      {"first_negative_index", nullptr},
      {"first_zero_index", nullptr},
  };
  if (prefix.first_negative_index) summary["first_negative_index"] = *prefix.first_negative_index;
  if (prefix.first_zero_index) summary["first_zero_index"] = *prefix.first_zero_index;
  if (!prefix.first_negative_index) {
    const tfp::SummabilityReport sums =
        tfp::summability_diagnostic(prefix, model.solver.summability_window);
    summary["summability"] = tfp::to_json(sums);
  } else {
    summary["summability"] = nullptr;
  }

  if (!out_path.empty()) {
    std::ofstream csv = open_output(out_path);
    write_solution_csv(csv, result.entries);
    if (!csv) throw std::system_error(EIO, std::generic_category(), "short write");
    summary["csv_path"] = out_path;
  } else {
    nlohmann::json entries = nlohmann::json::array();
    for (double v : result.entries) entries.push_back(v);
    summary["entries"] = entries;
  }
  emit(summary);
  return 0;
}

int cmd_truncate_study(const std::string& model_path, std::vector<std::size_t> sizes,
                       std::size_t prefix_len, double tol, std::size_t max_iter,
                       const std::string& vectors_dir, const std::string& matrices_dir) {
  const tfp::ModelFile model = load_model(model_path);
  const tfp::GeneralMatrixSpec spec = model.as_general();

  tfp::TruncationStudyOptions options;
  options.tol = tol > 0.0 ? tol : model.study.tol;
  options.max_iter = max_iter > 0 ? max_iter : model.study.max_iter;
  options.threads = threads_from_env();
  if (sizes.empty()) sizes = model.study.sizes;
  options.prefix_len = prefix_len > 0 ? prefix_len : model.study.prefix_len;
  options.prefix_len = std::min(options.prefix_len, sizes.front());

  const tfp::TruncationStudy study = tfp::truncation_study(spec, sizes, options);

  bool any_converged = false;
  for (std::size_t k = 0; k < study.sizes.size(); ++k) {
    if (study.converged[k]) {
      any_converged = true;
    } else {
      std::cerr << "warning: size " << study.sizes[k] << " not converged after "
                << study.iterations[k] << " iterations\n";
    }
  }
  if (!any_converged) throw NumericalFailure("no truncation size converged");

  if (!matrices_dir.empty()) {
    for (std::size_t s : study.sizes) {
      std::ofstream csv = open_output(matrices_dir + "/matrix_" + std::to_string(s) + ".csv");
      tfp::truncate(spec, s, tfp::TruncationKind::LeadingPrincipal).write_csv(csv);
    }
  }
  if (!vectors_dir.empty()) {
    for (std::size_t k = 0; k < study.sizes.size(); ++k) {
      std::ofstream csv =
          open_output(vectors_dir + "/vector_" + std::to_string(study.sizes[k]) + ".csv");
      write_solution_csv(csv, study.vectors[k]);
    }
  }

  nlohmann::json j = tfp::to_json(study);
  j["schema_version"] = tfp::kReportSchemaVersion;
  j["kind"] = "truncation_study";
  j["tol"] = options.tol;
  j["max_iter"] = options.max_iter;
  j["normalization"] = "x0_equals_1";
  emit(j);
  return 0;
}

int cmd_verify_hypotheses(const std::string& model_path, std::size_t rows,
                          const std::string& mode_arg) {
  const tfp::ModelFile model = load_model(model_path);
  if (model.kind == tfp::ModelKind::toeplitz)
    throw UsageFailure("this command needs a general matrix model");
  const auto& spec = require_general(model);

  tfp::TailSupremumMode mode = spec.is_parametric() ? tfp::TailSupremumMode::ClosedForm
                                                    : tfp::TailSupremumMode::ScannedRows;
  if (!mode_arg.empty()) {
    if (mode_arg == "scanned") mode = tfp::TailSupremumMode::ScannedRows;
    else if (mode_arg == "closed-form") mode = tfp::TailSupremumMode::ClosedForm;
    else throw UsageFailure("--tail-sup-mode expects scanned or closed-form");
  }
  if (!spec.is_parametric()) rows = std::min(rows, spec.max_row());

  const tfp::HypothesisReport report = tfp::check_hypotheses(spec, rows, mode);
  nlohmann::json j = tfp::to_json(report);
  j["schema_version"] = tfp::kReportSchemaVersion;
  j["kind"] = "hypothesis_report";
  j["tail_supremum_mode"] =
      mode == tfp::TailSupremumMode::ClosedForm ? "closed-form" : "scanned";
  emit(j);
  return 0;
}

int cmd_kras_audit(const std::string& model_path, std::size_t trials, std::size_t support_len,
                   double epsilon, std::uint64_t rng_seed,
                   const std::vector<double>& family_ratios) {
  const tfp::ModelFile model = load_model(model_path);
  const auto& symbol = require_toeplitz(model);

  const tfp::SplitOperators parts = tfp::split(symbol);
  if (!parts.contraction_applicable())
    throw GateFailure("lower-part mass alpha = " + format_value(parts.alpha) +
                      " is not below 1; the contraction audit does not apply");

  const tfp::ContractionAudit contraction =
      tfp::audit_contraction(parts, trials, support_len, rng_seed);

  std::vector<tfp::CertifiedVector> family;
  for (double r : family_ratios) {
    if (!(r >= 0.0 && r < 1.0)) throw UsageFailure("family ratios must lie in [0,1)");
    family.push_back(
        tfp::CertifiedVector::geometric({}, tfp::GeometricTail{1.0, r}).l1_normalized());
  }
  const tfp::EquismallnessReport equismall = tfp::audit_equismallness(parts, epsilon, family);

  nlohmann::json j{{"schema_version", tfp::kReportSchemaVersion},
                   {"kind", "kras_audit"},
                   {"split", tfp::to_json(parts)},
                   {"contraction", tfp::to_json(contraction)},
                   {"equismallness", tfp::to_json(equismall)},
                   {"family_ratios", family_ratios}};
  emit(j);
  return 0;
}

int cmd_export(const std::string& model_path, const std::string& out_path) {
  const tfp::ModelFile model = load_model(model_path);
  if (out_path.empty()) {
    model.write(std::cout);
  } else {
    std::ofstream out = open_output(out_path);
    model.write(out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-point toolkit for infinite nonnegative Toeplitz and general matrices"};
  app.require_subcommand(1);

  std::string model_path;
  std::string out_path;
  std::size_t grid_points = 1001;
  double tolerance = -1.0;  // negative: fall back to the model's solver block

  auto* classify = app.add_subcommand("classify", "classify positive solutions of x = Tx");
  classify->add_option("model", model_path, "model file")->required();
  classify->add_option("--grid-points", grid_points, "root-convexity grid resolution");
  classify->add_option("--tolerance", tolerance, "tie tolerance")
      ->check(CLI::NonNegativeNumber);

  std::size_t n_terms = 0;
  std::vector<double> seed;
  std::string normalize_arg;
  auto* solve = app.add_subcommand("solve", "run the forward recurrence");
  solve->add_option("model", model_path, "model file")->required();
  solve->add_option("--n-terms", n_terms, "last computed index N")->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "seed entries x_0..x_{n-1}")->delimiter(',');
  solve->add_option("--normalize", normalize_arg, "raw | unit_l1 | x0_equals_1");
  solve->add_option("--out", out_path, "write the solution CSV here");

  std::vector<std::size_t> sizes;
  std::size_t prefix_len = 0;
  double study_tol = 0.0;
  std::size_t max_iter = 0;
  std::string vectors_dir, matrices_dir;
  auto* study = app.add_subcommand("truncate-study", "dominant eigenpairs of growing sections");
  study->add_option("model", model_path, "model file")->required();
  study->add_option("--sizes", sizes, "section sizes j")->delimiter(',');
  study->add_option("--prefix-len", prefix_len, "compared prefix length");
  study->add_option("--tol", study_tol, "power iteration tolerance");
  study->add_option("--max-iter", max_iter, "power iteration cap");
  study->add_option("--vectors-dir", vectors_dir, "write per-size eigenvector CSVs here");
  study->add_option("--matrices-dir", matrices_dir, "write per-size matrix CSVs here");

  std::size_t rows = 64;
  std::string mode_arg;
  auto* hyp = app.add_subcommand("verify-hypotheses", "audit the admissibility conditions");
  hyp->add_option("model", model_path, "model file")->required();
  hyp->add_option("--rows", rows, "rows to scan");
  hyp->add_option("--tail-sup-mode", mode_arg, "scanned | closed-form");

  std::size_t trials = 100;
  std::size_t support_len = 32;
  double epsilon = 1e-3;
  std::uint64_t rng_seed = 12345;
  std::vector<double> family_ratios{0.25, 0.5, 0.75, 0.9};
  auto* kras = app.add_subcommand("kras-audit", "contraction and equismallness audit");
  kras->add_option("model", model_path, "model file")->required();
  kras->add_option("--trials", trials, "random vectors to test");
  kras->add_option("--support-len", support_len, "support length of the random vectors");
  kras->add_option("--epsilon", epsilon, "equismallness target");
  kras->add_option("--rng-seed", rng_seed, "seed for the random draws");
  kras->add_option("--family-ratios", family_ratios, "geometric family ratios")->delimiter(',');

  auto* exp = app.add_subcommand("export", "re-emit a model file in canonical form");
  exp->add_option("model", model_path, "model file")->required();
  exp->add_option("--out", out_path, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(model_path, grid_points, tolerance);
    if (solve->parsed()) return cmd_solve(model_path, n_terms, seed, normalize_arg, out_path);
    if (study->parsed())
      return cmd_truncate_study(model_path, sizes, prefix_len, study_tol, max_iter, vectors_dir,
                                matrices_dir);
    if (hyp->parsed()) return cmd_verify_hypotheses(model_path, rows, mode_arg);
    if (kras->parsed())
      return cmd_kras_audit(model_path, trials, support_len, epsilon, rng_seed, family_ratios);
    if (exp->parsed()) return cmd_export(model_path, out_path);
  } catch (const tfp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::system_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GateFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitHypothesisGate;
  } catch (const NumericalFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
