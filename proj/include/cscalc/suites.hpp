#pragma once

#include "cscalc/report.hpp"

#include <cstdint>
#include <vector>

namespace cscalc {

struct SuiteOptions {
    uint64_t seed = 7;
    int qorder = 72;    // q-truncation in 1/24 units
    int m = 0;          // 0 = per-suite default
    int n = 0;
    int degree_cap = -1; // -1 = per-suite default
    int shears = 8;
    int terms = 60;     // numeric product truncation
    double tol = 1e-9;
    int threads = 0;    // 0 = TRANSGRESSION_THREADS env or hardware
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite (or "all"); items are computed in a work pool and merged
/// deterministically, so a fixed (seed, config) yields identical reports.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

} // namespace cscalc
