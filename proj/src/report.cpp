#include "cliffver/report.hpp"

#include <algorithm>
#include <fstream>

namespace cliffver {

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void SuiteReport::add(std::string id, double residual, double tol) {
    checks.push_back({std::move(id), residual, false, residual < tol});
}

void SuiteReport::add_exact(std::string id, bool ok, long long mismatches) {
    double r = ok ? 0.0 : (mismatches >= 0 ? static_cast<double>(mismatches) : 1.0);
    checks.push_back({std::move(id), r, true, ok});
}

nlohmann::json report_to_json(const SuiteReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["parameters"] = r.params;
    j["seed"] = r.seed;
    std::vector<CheckResult> sorted = r.checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : sorted) {
        nlohmann::json e;
        e["id"] = c.id;
        if (c.exact)
            e["exact"] = true;
        else
            e["residual"] = c.residual;
        e["pass"] = c.pass;
        checks.push_back(std::move(e));
    }
    j["checks"] = checks;
    j["pass"] = r.all_pass();
    return j;
}

void emit_report(const SuiteReport& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file for writing: " + path);
    out << report_to_json(r).dump(2) << "\n";
    if (!out) throw std::runtime_error("failed while writing report file: " + path);
}

}  // namespace cliffver
