#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fracrank {

/// All CLI reports share one JSON shape:
/// { "command": str, "config": obj, "results": obj, "warnings": [str, ...] }.
nlohmann::json make_report(const std::string& command, nlohmann::json config,
                           nlohmann::json results,
                           std::vector<std::string> warnings = {});

/// Schema check for the shape above; on failure `why` (when given) explains.
bool validate_report(const nlohmann::json& report, std::string* why = nullptr);

/// Fixed-width numeric rendering at 6 significant digits, shared by the text
/// and CSV renderers so every format shows identical values.
std::string format_g6(double v);

}  // namespace fracrank
