#pragma once

#include <string>
#include <vector>

namespace cliffordforge {

// One verified identity: a stable label, the verdict, and a short human
// explanation (or counterexample) shown after the machine-readable prefix.
struct Check {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;

    void add(const std::string& label, bool pass, const std::string& detail) {
        checks.push_back({label, pass, detail});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    // "CHECK <suite>.<label> PASS|FAIL  <detail>" per check.
    std::string render() const {
        std::string out;
        for (const auto& c : checks) {
            out += "CHECK " + suite + "." + c.label + (c.pass ? " PASS" : " FAIL");
            if (!c.detail.empty()) out += "  " + c.detail;
            out += "\n";
        }
        return out;
    }
};

} // namespace cliffordforge
