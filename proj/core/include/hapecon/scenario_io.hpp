#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hapecon/domain.hpp"

namespace hapecon {

/// Resolves a parsed scenario document: fills defaults for omitted fields,
/// checks every invariant and resolves platform/offer references. Throws
/// VALIDATION (naming the field) or UNKNOWN_REFERENCE.
Scenario validate_scenario(const nlohmann::json& document);

/// Parses scenario text; malformed JSON is a VALIDATION error.
Scenario parse_scenario(std::string_view text);

/// Reads and validates a scenario file; unreadable files raise IO.
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical document for a resolved scenario. Validating it again yields
/// an equal Scenario.
nlohmann::json scenario_to_json(const Scenario& scenario);

nlohmann::json path_model_to_json(const PathModel& model);
PathModel path_model_from_json(const nlohmann::json& node, const std::string& where);

}  // namespace hapecon
