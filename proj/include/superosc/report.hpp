#ifndef SUPEROSC_REPORT_HPP
#define SUPEROSC_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace superosc {

/// Named residual checks. A check passes when its residual is finite and at
/// most its tolerance.
class VerificationReport {
public:
    struct Check {
        std::string name;
        double residual = 0.0;
        double tolerance = 0.0;
        bool passed = false;
    };

    void add(std::string name, double residual, double tolerance) {
        const bool ok = std::isfinite(residual) && residual <= tolerance;
        checks_.push_back({std::move(name), residual, tolerance, ok});
    }

    /// Records a boolean condition (residual 0 when it holds, 1 otherwise).
    void expect(std::string name, bool condition) {
        add(std::move(name), condition ? 0.0 : 1.0, 0.0);
    }

    void merge(const VerificationReport& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks_)
            checks_.push_back({prefix + c.name, c.residual, c.tolerance, c.passed});
    }

    bool passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
    }

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(
            checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
    }

    const std::vector<Check>& checks() const { return checks_; }

    /// Worst residual among checks whose name contains `needle`.
    double max_residual(const std::string& needle) const {
        double worst = 0.0;
        for (const auto& c : checks_)
            if (c.name.find(needle) != std::string::npos) worst = std::max(worst, c.residual);
        return worst;
    }

    void print(std::ostream& out, bool failures_only = false) const {
        char buf[64];
        for (const auto& c : checks_) {
            if (failures_only && c.passed) continue;
            std::snprintf(buf, sizeof buf, "%.3e <= %.1e", c.residual, c.tolerance);
            out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << buf << '\n';
        }
    }

private:
    std::vector<Check> checks_;
};

}  // namespace superosc

#endif  // SUPEROSC_REPORT_HPP
