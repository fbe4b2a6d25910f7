#pragma once

#include <nlohmann/json.hpp>

#include "aapopt/oracle.hpp"
#include "aapopt/scenario.hpp"
#include "aapopt/solve.hpp"

namespace aapopt {

// Strict deserialization: every field required, exactly the documented
// snake_case names, unknown keys rejected. `path_prefix` (e.g. "scenario")
// prefixes field paths in ConfigError messages.
ScenarioParams scenario_from_json(const nlohmann::json& j, const std::string& path_prefix = "");

nlohmann::json scenario_to_json(const ScenarioParams& params);

nlohmann::json solve_result_to_json(const SolveResult& result);

nlohmann::json oracle_result_to_json(const OracleResult& result);

}  // namespace aapopt
