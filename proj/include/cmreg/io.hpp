#pragma once

#include <string>

#include <json.hpp>

#include "cmreg/report.hpp"
#include "cmreg/sweep.hpp"

namespace cmreg {

/// Parse the versioned input document. Throws invalid_spec with context.
InputSpec parse_input(const nlohmann::json& doc);
InputSpec parse_input_text(const std::string& text);

nlohmann::json input_to_json(const InputSpec& spec);
nlohmann::json report_to_json(const Report& rep);
nlohmann::json sweep_to_json(const SweepResult& res);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// All mathematical integers appear as decimal strings.
std::string canonical_dump(const nlohmann::json& doc);

} // namespace cmreg
