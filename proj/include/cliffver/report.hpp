#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace cliffver {

struct CheckResult {
    std::string id;
    double residual = 0.0;
    bool exact = false;  // exact-equality check; residual is 0/1 mismatch count
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params;  // canonical parameter record
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double wall_ms = 0.0;  // console only, never serialized

    bool all_pass() const;
    void add(std::string id, double residual, double tol);
    void add_exact(std::string id, bool ok, long long mismatches = -1);
};

// Canonical JSON: object keys sorted, checks sorted by id, timing excluded so
// identical (suite, params, seed) produce identical bytes.
nlohmann::json report_to_json(const SuiteReport& r);

// Writes the canonical JSON document; I/O failures carry the path.
void emit_report(const SuiteReport& r, const std::string& path);

}  // namespace cliffver
