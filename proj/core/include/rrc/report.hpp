#pragma once

#include <string>
#include <vector>

namespace rrc {

// One named verification outcome; detail carries the witness on failure.
struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

// Ordered list of checks; a report passes when every check does.
struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    void absorb(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.ok, c.detail});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    std::string str() const {
        std::string out;
        for (const auto& c : checks) {
            out += (c.ok ? "[ok] " : "[FAIL] ") + c.name;
            if (!c.detail.empty()) out += ": " + c.detail;
            out += "\n";
        }
        return out;
    }
};

}  // namespace rrc
