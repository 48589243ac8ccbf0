#pragma once

#include <string>

#include "cliffver/report.hpp"

namespace cliffver {

struct SuiteParams {
    int d = -1;              // dimension / mode-count parameter (suite default when < 0)
    int cutoff = 16;         // Fourier cutoff
    int mode_k = 1;
    int mode_l = -1;
    int trials = -1;         // suite default when < 0
    double tol = -1.0;       // suite default when < 0
    int points = 2048;       // quadrature panels
    std::string fixture = "all";
    long long modulus = 2;
    std::string bundle_path;
};

extern const std::vector<std::string> kSuiteNames;

bool is_known_suite(const std::string& name);

// Executes one named invariant suite; deterministic given (name, params, seed).
SuiteReport run_suite(const std::string& name, const SuiteParams& params, std::uint64_t seed);

}  // namespace cliffver
