#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cliffver/suites.hpp"

namespace {

// exit codes: 0 pass, 1 check failure, 2 usage, 3 I/O
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verify: batch identity suites with deterministic seeds"};
    app.require_subcommand(0, 1);

    std::string suite;
    cliffver::SuiteParams params;
    std::uint64_t seed = 1;
    std::string report_path;
    std::string modes;

    app.add_option("suite", suite, "suite name: " + [] {
           std::string s;
           for (const auto& n : cliffver::kSuiteNames) s += n + " ";
           return s;
       }())
        ->required();
    app.add_option("--d", params.d, "dimension / mode-count parameter");
    app.add_option("--cutoff", params.cutoff, "Fourier cutoff");
    app.add_option("--modes", modes, "mode pair k,l");
    app.add_option("--trials", params.trials, "number of randomized trials");
    app.add_option("--tol", params.tol, "tolerance for residual checks");
    app.add_option("--points", params.points, "quadrature panel count");
    app.add_option("--seed", seed, "64-bit seed for every random draw");
    app.add_option("--report", report_path, "write the JSON report to this path");
    app.add_option("--fixture", params.fixture, "fixture name (circle, sphere, rp2, torus, all)");
    app.add_option("--modulus", params.modulus, "coefficient modulus for phase snapping");
    app.add_option("--bundle", params.bundle_path, "external transition-data JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    if (!cliffver::is_known_suite(suite)) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUsage;
    }
    if (!modes.empty()) {
        auto comma = modes.find(',');
        if (comma == std::string::npos) {
            std::cerr << "--modes expects k,l\n";
            return kExitUsage;
        }
        try {
            params.mode_k = std::stoi(modes.substr(0, comma));
            params.mode_l = std::stoi(modes.substr(comma + 1));
        } catch (const std::exception&) {
            std::cerr << "--modes expects integers k,l\n";
            return kExitUsage;
        }
    }
    if (params.tol < 0) {
        if (const char* env = std::getenv("VERIFY_TOL")) {
            try {
                params.tol = std::stod(env);
            } catch (const std::exception&) {
                std::cerr << "VERIFY_TOL is not a number\n";
                return kExitUsage;
            }
        }
    }

    cliffver::SuiteReport rep;
    try {
        rep = cliffver::run_suite(suite, params, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "suite failed: " << e.what() << "\n";
        return kExitCheckFailure;
    }

    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
        if (!c.exact) std::cout << "  residual " << c.residual;
        std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "PASS" : "FAIL") << " " << suite << " (" << rep.checks.size()
              << " checks, " << rep.wall_ms << " ms, seed " << seed << ")\n";

    if (!report_path.empty()) {
        try {
            cliffver::emit_report(rep, report_path);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kExitIo;
        }
    }
    return rep.all_pass() ? kExitPass : kExitCheckFailure;
}
