#ifndef GAUGEDIM_REPORT_HPP
#define GAUGEDIM_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace gaugedim {

/// One validated invariant: pass/fail plus the witnessing sample on failure
/// and any constants the check is required to report.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;                 // empty when pass
    std::map<std::string, double> data;  // reported constants (tails, ratios, thresholds)
};

struct ValidationReport {
    std::string subject;
    std::vector<CheckItem> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckItem* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace gaugedim

#endif
