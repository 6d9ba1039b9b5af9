#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cscalc {

struct SuiteItem {
    std::string id;        // stable identity id, e.g. "dim3.phiL"
    std::string statement; // the identity being checked, in formula form
    bool pass = false;
    std::string residual;  // "0" for exact passes, else a short description
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    nlohmann::json config() const;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<SuiteItem> items;
    long elapsed_ms = 0;
    std::string timestamp;

    bool all_pass() const;
    /// Deterministic for a fixed seed and config: only "timestamp" and
    /// "elapsed_ms" vary between runs.
    nlohmann::json to_json() const;
    std::string to_text() const;
};

} // namespace cscalc
