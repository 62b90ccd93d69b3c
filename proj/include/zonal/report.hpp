#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "zonal/wreath.hpp"

namespace zonal {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;  // empty unless the check failed or carries a note
};

struct VerificationReport {
    std::string suite;
    std::optional<GroupParams> params;
    std::string scope;  // extra context for suites without group parameters
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0;

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

// Stamps elapsed_seconds on scope exit.
class ReportTimer {
   public:
    explicit ReportTimer(VerificationReport& report)
        : report_(report), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        auto end = std::chrono::steady_clock::now();
        report_.elapsed_seconds = std::chrono::duration<double>(end - start_).count();
    }

   private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace zonal
