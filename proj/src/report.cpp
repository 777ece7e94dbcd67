#include "fracrank/report.hpp"

#include <cstdio>

namespace fracrank {

nlohmann::json make_report(const std::string& command, nlohmann::json config,
                           nlohmann::json results, std::vector<std::string> warnings) {
    nlohmann::json rep;
    rep["command"] = command;
    rep["config"] = std::move(config);
    rep["results"] = std::move(results);
    rep["warnings"] = std::move(warnings);
    return rep;
}

bool validate_report(const nlohmann::json& report, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why != nullptr) *why = msg;
        return false;
    };
    if (!report.is_object()) return fail("report is not an object");
    if (!report.contains("command") || !report["command"].is_string())
        return fail("missing string field 'command'");
    if (!report.contains("config") || !report["config"].is_object())
        return fail("missing object field 'config'");
    if (!report.contains("results") || !report["results"].is_object())
        return fail("missing object field 'results'");
    if (!report.contains("warnings") || !report["warnings"].is_array())
        return fail("missing array field 'warnings'");
    for (const auto& w : report["warnings"])
        if (!w.is_string()) return fail("warnings must be strings");
    return true;
}

std::string format_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace fracrank
