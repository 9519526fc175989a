#pragma once

// Explanation rendering. The JSON layout is frozen (see docs/formats.md);
// the service and `debug-asp explain --format json` share it.

#include <string>

#include <json.hpp>

#include "aspdbg/explainer.hpp"

namespace aspdbg {

nlohmann::json substitution_json(const Substitution& theta);
nlohmann::json to_json(const Explanation& explanation, const Program& program);
nlohmann::json to_json(const ParseError& error);
nlohmann::json to_json(const Interpretation& interpretation);

/// Human-readable report.
std::string to_text(const Explanation& explanation, const Program& program);

}  // namespace aspdbg
