#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bandit_lab/scenario.hpp"

namespace bandit_lab {

// Scenario document:
//   { "name": "...",
//     "arms": [ { "transition": [[...], ...], "rewards": [...], "states": [...] } ] }
// "states" is optional. Malformed JSON raises ParseError with line and column;
// a chain or reward violation raises the underlying error tagged with its arm.
Scenario parse_scenario_json(std::string_view text, std::string fallback_name = "custom");
Scenario load_scenario_file(const std::filesystem::path& path);

// Built-in name (S1, S2) or a path to a scenario document.
Scenario resolve_scenario(std::string_view name_or_path);

// FNV-1a 64 over a canonical rendering of every transition entry and reward,
// as 16 lowercase hex digits.
std::string scenario_hash(const Scenario& scenario);

}  // namespace bandit_lab
