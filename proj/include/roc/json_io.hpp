// JSON serialization of fit reports. The schema is identical across methods:
// fields that do not apply are null, never omitted. Doubles are emitted with
// 17 significant digits so output is reproducible and round-trips exactly.

#pragma once

#include <string>

#include <json.hpp>

#include "roc/analysis.hpp"

namespace roc {

nlohmann::ordered_json fit_report_to_json(const FitReport& report);

nlohmann::ordered_json test_result_to_json(const TestResult& t);

// Error document for machine-readable failure reporting.
nlohmann::ordered_json error_to_json(const std::string& kind,
                                     const std::string& message);

// Serializes with doubles formatted as %.17g (nlohmann's default dump uses
// shortest-round-trip notation instead).
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace roc
