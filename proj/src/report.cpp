#include "cscalc/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace cscalc {

nlohmann::json SuiteReport::config() const
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : config_echo)
        j[k] = v;
    return j;
}

bool SuiteReport::all_pass() const
{
    for (const auto& item : items)
        if (!item.pass)
            return false;
    return true;
}

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& item : items)
        arr.push_back({{"id", item.id},
                       {"statement", item.statement},
                       {"status", item.pass ? "pass" : "fail"},
                       {"residual", item.residual}});
    return nlohmann::json{{"suite", suite},       {"seed", seed},
                          {"config", config()},   {"timestamp", timestamp},
                          {"elapsed_ms", elapsed_ms}, {"items", arr}};
}

std::string SuiteReport::to_text() const
{
    std::ostringstream os;
    os << "suite " << suite << " (seed " << seed << ")\n";
    for (const auto& item : items) {
        os << "  [" << (item.pass ? "PASS" : "FAIL") << "] " << item.id << ": "
           << item.statement;
        if (!item.pass || item.residual != "0")
            os << "  residual=" << item.residual;
        os << "\n";
    }
    os << (all_pass() ? "all identities hold" : "FAILURES present") << " (" << items.size()
       << " items, " << elapsed_ms << " ms)\n";
    return os.str();
}

} // namespace cscalc
