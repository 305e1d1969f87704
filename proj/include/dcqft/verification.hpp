#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcqft/core_numerics.hpp"
#include "dcqft/json_io.hpp"

namespace dcqft {

struct CheckResult {
    std::string group;
    std::string name;
    std::string reference;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    double elapsed_ms = 0.0;
    std::string error;  // set when the check threw
};

struct RunReport {
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    std::uint64_t seed = 20240611;
    int samples = 100;
    Tolerances tol;
};

std::vector<std::string> verification_check_names();
RunReport run_verification(const VerifyOptions& opt);

// Timings are left out unless asked for, so reports are reproducible byte for byte.
std::string format_report(const RunReport& report, bool timings = false);
Json report_to_json(const RunReport& report, bool timings = false);

}  // namespace dcqft
