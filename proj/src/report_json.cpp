// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#include "tfp/report_json.hpp"

namespace tfp {

using nlohmann::json;

const char* to_string(SumCase c) {
  switch (c) {
    case SumCase::SumAboveOne: return "SumAboveOne";
    case SumCase::SumEqualsOne: return "SumEqualsOne";
    case SumCase::SumBelowOne: return "SumBelowOne";
  }
  return "?";
}

const char* to_string(BoundedVerdict v) {
  switch (v) {
    case BoundedVerdict::Bounded: return "Bounded";
    case BoundedVerdict::Unbounded: return "Unbounded";
    case BoundedVerdict::BoundedIffMoment: return "BoundedIffMoment";
    case BoundedVerdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(SummabilityVerdict v) {
  switch (v) {
    case SummabilityVerdict::Summable: return "Summable";
    case SummabilityVerdict::Diverging: return "Diverging";
    case SummabilityVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(Normalization n) {
  switch (n) {
    case Normalization::raw: return "raw";
    case Normalization::unit_l1: return "unit_l1";
    case Normalization::x0_equals_1: return "x0_equals_1";
  }
  return "?";
}

json to_json(const RootConvexityReport& report) {
  return json{{"holds", report.holds},
              {"min_h", report.min_h},
              {"argmin_z", report.argmin_z},
              {"grid_points", report.grid_points},
              {"tolerance", report.tolerance}};
}

json to_json(const ClassificationReport& report) {
  json j{{"case", to_string(report.sum_case)},
         {"total_sum", report.total_sum},
         {"first_moment", report.first_moment},
         {"moment_bound_n", report.moment_bound_n},
         {"bounded_verdict", to_string(report.bounded_verdict)},
         {"verdict_requires_root_convexity", report.verdict_requires_root_convexity},
         {"root_convexity", to_json(report.root_convexity)}};
  if (report.limit_value) j["limit_value"] = *report.limit_value;
  else j["limit_value"] = nullptr;
  return j;
}

json to_json(const SummabilityReport& report) {
  return json{{"verdict", to_string(report.verdict)},
              {"tail_ratio_estimate", report.tail_ratio_estimate},
              {"partial_sum", report.partial_sums.empty() ? 0.0 : report.partial_sums.back()}};
}

json to_json(const HypothesisReport& report) {
  return json{{"contraction_sum", report.contraction_sum},
              {"contraction_pass", report.contraction_pass},
              {"upper_mass_sup", report.upper_mass_sup},
              {"upper_mass_finite", report.upper_mass_finite},
              {"row_total_liminf", report.row_total_liminf},
              {"row_total_pass", report.row_total_pass},
              {"rows_examined", report.rows_examined}};
}

json to_json(const TruncationStudy& study) {
  json distances = json::array();
  for (double d : study.prefix_distances) distances.push_back(d);
  return json{{"sizes", study.sizes},
              {"eigenvalues", study.eigenvalues},
              {"converged", study.converged},
              {"iterations", study.iterations},
              {"prefix_distances", distances},
              {"residuals_vs_full", study.residuals_vs_full},
              {"unused_upper_mass", study.unused_upper_mass},
              {"prefix_len", study.prefix_len}};
}

json to_json(const SplitOperators& split) {
  json j{{"alpha", split.alpha},
         {"diag", split.diag},
         {"upper_explicit", split.upper.explicit_part()},
         {"upper_sum", split.upper_sum()},
         {"lower_explicit", split.lower.explicit_part()}};
  if (split.lower.has_tail())
    j["lower_tail"] = json{{"a", split.lower.tail()->a}, {"r", split.lower.tail()->r}};
  else
    j["lower_tail"] = nullptr;
  if (split.upper.has_tail())
    j["upper_tail"] = json{{"a", split.upper.tail()->a}, {"r", split.upper.tail()->r}};
  else
    j["upper_tail"] = nullptr;
  return j;
}

json to_json(const ContractionAudit& audit) {
  return json{{"alpha", audit.alpha},
              {"max_ratio", audit.max_ratio},
              {"pass", audit.pass},
              {"trials", audit.trials},
              {"support_len", audit.support_len},
              {"rng_seed", audit.rng_seed}};
}

json to_json(const EquismallnessReport& report) {
  return json{{"epsilon", report.epsilon},
              {"n_epsilon", report.n_epsilon},
              {"family_size", report.family_size},
              {"max_tail_observed", report.max_tail_observed}};
}

}  // namespace tfp
