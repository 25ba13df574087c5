// Copyright (c) 2026 the toeplitz-fixpoint developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "tfp/general.hpp"
#include "tfp/solver.hpp"
#include "tfp/split_audit.hpp"
#include "tfp/truncation.hpp"

namespace tfp {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const RootConvexityReport& report);
nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const SummabilityReport& report);
nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const TruncationStudy& study);
nlohmann::json to_json(const SplitOperators& split);
nlohmann::json to_json(const ContractionAudit& audit);
nlohmann::json to_json(const EquismallnessReport& report);

const char* to_string(SumCase c);
const char* to_string(BoundedVerdict v);
const char* to_string(SummabilityVerdict v);
const char* to_string(Normalization n);

}  // namespace tfp
