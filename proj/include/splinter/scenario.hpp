#pragma once

#include <map>
#include <string>
#include <vector>

#include "splinter/report.hpp"

namespace splinter::scen {

struct ParamSpec {
  std::string name;
  std::string kind;  // "int" or "string"
  std::string default_value;
  std::string doc;
};

struct ScenarioInfo {
  std::string name;
  std::string doc;
  std::vector<ParamSpec> params;
};

/// Stable registry listing, optionally filtered by a substring of the name.
std::vector<ScenarioInfo> list_scenarios(const std::string& filter = "");

/// Validates the name and parameters, fills defaults, runs the scenario.
/// All randomness is seed-parameterized; identical inputs give identical
/// report bytes.
Report run_scenario(const std::string& name, const std::map<std::string, std::string>& params);

/// Canonical parameter echo (defaults filled) used for cache keys.
std::string canonical_params(const std::string& name, const std::map<std::string, std::string>& params);

}  // namespace splinter::scen
