#pragma once

// Scenario ingestion: JSON batches describing a field, a place set, a finite
// quotient with a module, and requested outputs, evaluated into report
// objects.  Structural problems raise SchemaError; mathematical
// precondition failures raise EngineError.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "euchar/report.hpp"

namespace euchar {

struct ScenarioOutcome {
  std::string id;
  ordered_json report;
  bool discrepancy = false;
  // Filled only when expectations are checked; empty means all held.
  std::vector<std::string> expect_failures;
};

// A batch is a top-level array or an object {"scenarios": [...]}; empty
// batches are rejected.
std::vector<nlohmann::json> parse_batch(const std::string& text);

// Validates one scenario object against the schema and evaluates the
// requested outputs.  With check_expect set, the optional "expect" block is
// compared against computed values.
ScenarioOutcome evaluate_scenario(const nlohmann::json& scenario,
                                  bool check_expect);

}  // namespace euchar
