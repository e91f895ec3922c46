#pragma once

#include <string>
#include <vector>

namespace dunklpoly {

enum class CheckStatus { pass, fail, skip };

std::string status_name(CheckStatus s);

/// One verified identity. `anchor` labels the equation the record tested
/// (e.g. "Eq. (2.17)") so reports can be cross-referenced; `witness` carries
/// the failing index/value, or an informational finding for passing checks.
struct CheckRecord {
    std::string name;
    std::string anchor;
    CheckStatus status = CheckStatus::pass;
    std::string witness;
};

using CheckList = std::vector<CheckRecord>;

struct VerificationReport {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;
    int horizon = 0;
    CheckList checks;
    double elapsed_ms = 0.0;  // kept out of the serialized payload

    bool all_passed() const;
};

/// Stable-schema JSON: {family, params, horizon, checks: [{name, anchor,
/// status, witness?}], version}. Deterministic byte-for-byte for identical
/// inputs; timing is deliberately excluded.
std::string report_to_json(const VerificationReport& report);

}  // namespace dunklpoly
