#pragma once

#include <nlohmann/json.hpp>

#include "gratuity/breakeven.hpp"
#include "gratuity/loan.hpp"
#include "gratuity/scenario.hpp"

// JSON mapping shared by the CLI and the HTTP service. Numbers are written at
// full double precision; optional sections are omitted rather than null.
namespace gratuity::json {

using nlohmann::json;

json to_json(const TaxPolicy& policy);
json to_json(const BreakevenResult& result);
json to_json(const LoanDecision& decision);
json to_json(const SavingsAssessment& assessment);
json to_json(const DecisionReport& report);
json to_json(const CurveSeries& series);
json to_json(const std::vector<AmortizationRow>& rows);
json to_json(const Scenario& scenario);

/// Field readers. Each throws ValidationError naming `path` (e.g. "loan.r_c")
/// when the key is missing or has the wrong type.
double number_field(const json& object, const char* key, const std::string& prefix = {});
int integer_field(const json& object, const char* key, const std::string& prefix = {});
std::string string_field(const json& object, const char* key, const std::string& prefix = {});

PolicySpec policy_from_json(const json& object, const std::string& prefix = "policy");
Scenario scenario_from_json(const json& request);

/// Parses text, mapping syntax errors to ValidationError on field "body".
json parse(std::string_view text);

} // namespace gratuity::json
