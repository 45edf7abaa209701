#pragma once

#include <string>
#include <vector>

namespace gueindex {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // failure context: which identity, which n
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    void merge(const CheckReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

} // namespace gueindex
