#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lwr/bayes.hpp"
#include "lwr/capacity.hpp"
#include "lwr/scenario.hpp"

namespace lwr {

inline constexpr const char* kToolVersion = "0.1.0";

// Scenario-set document:
//   {"interval": {"lower": number | "-inf", "upper": number | "+inf"},
//    "scenarios": [{"id": int, "name": string, "cost": {"kind": ..., ...}}]}
// cost kinds and their fields:
//   "exp_linear":       b, lambda, c
//   "quadratic":        curvature, center, offset
//   "piecewise_linear": breakpoints, slopes, anchor
//   "tabulated":        x, y
// Parsing throws SchemaError with the offending field path; a parsed set has
// passed validate() and satisfies all solver preconditions.
ScenarioSet parse_scenario_set(const nlohmann::json& j);
nlohmann::json to_json(const ScenarioSet& set);

// {"p": [numbers]}; must match the scenario count.
ProbabilityVector parse_probabilities(const nlohmann::json& j, std::size_t n);

// {"voll": .., "cone": .., "standard": ..,
//  "scenarios": [{"name": .., "eeu_at_zero": .., "rate": ..}]}
CapacityStudy parse_capacity_study(const nlohmann::json& j);
nlohmann::json to_json(const CapacityStudy& study);

struct ScenarioSummary {
  std::string name;
  double minimizer = 0.0;
  double offset = 0.0;  // the scenario's own constrained minimum
};

struct CompatiblePair {
  std::string k;
  std::string l;
  double pk = 0.0;
  double pl = 0.0;
};

struct ReportProvenance {
  std::string input_digest;  // fnv1a-64 of the raw input bytes, hex
  std::string tool_version;
  double tol = 0.0;
  double activity_tol_rel = 0.0;
  double certificate_tol_rel = 0.0;
};

// Analysis result as emitted by the command-line tool.  Serialization is
// lossless: parse_run_report(to_json(r)) re-serializes byte-identically.
struct RunReport {
  std::string criterion;  // "minimax" | "lwr" | "bayes"
  double solution = 0.0;
  double objective = 0.0;
  std::optional<std::pair<std::string, std::string>> extreme_pair;  // names
  std::optional<bool> determined;            // absent (null) for bayes
  std::vector<ScenarioSummary> scenarios;
  std::optional<CompatiblePair> compatible_pair;
  ReportProvenance provenance;
};

nlohmann::json to_json(const RunReport& report);
RunReport parse_run_report(const nlohmann::json& j);

// FNV-1a 64-bit hash of the bytes, as 16 lowercase hex digits.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace lwr
