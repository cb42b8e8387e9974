#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfion {

// One named check: value is the measured quantity, threshold the bound it
// was held to (0 for informational entries that only log a value).
struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0;
    double threshold = 0;
    std::string note;
};

struct VerifyOptions {
    std::uint64_t rng_seed = 20260822;
    double tol_override = 0;  // > 0 replaces every pass threshold
    int workers = 1;
    bool quick = false;       // reduced point counts, same structure
};

// The checks behind acceptance criterion 1..11.  Deterministic for a fixed
// seed; thread count never changes results or ordering.
std::vector<CheckResult> criterion_checks(int criterion, const VerifyOptions& opt);

// Short human label for a criterion group (1..11).
const char* criterion_label(int criterion);

struct RunReport {
    std::vector<CheckResult> checks;
    int failed_count() const;
    bool all_passed() const;
    // Deterministic report text: one line per check plus a summary; no
    // timestamps or timing (those belong on stdout, not in the file).
    std::string body(const VerifyOptions& opt) const;
};

RunReport run_verify(const VerifyOptions& opt);

}  // namespace hopfion
