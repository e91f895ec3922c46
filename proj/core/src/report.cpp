#include "dunklpoly/report.hpp"

#include <json.hpp>

namespace dunklpoly {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "unknown";
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["family"] = report.family;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = params;
    j["horizon"] = report.horizon;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["anchor"] = c.anchor;
        jc["status"] = status_name(c.status);
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["version"] = "0.1.0";
    return j.dump(2) + "\n";
}

}  // namespace dunklpoly
