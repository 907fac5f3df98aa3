#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace almansi {

enum class Verdict { Pass, Fail, SkippedFractional };

struct CaseResult {
    std::string suite;
    std::string id;
    Verdict verdict = Verdict::Fail;
    std::string witness; // diagnostic payload on failure
};

struct VerifyOptions {
    std::string suite = "all"; // core, ops, slice, almansi, numeric, all
    std::vector<int> dims = {3, 5};
    int max_degree = 6;
    std::uint64_t seed = 42;
    int jobs = 1;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases; // sorted by case id
    int passed = 0;
    int failed = 0;
    int skipped = 0;

    int exit_status() const { return failed == 0 ? 0 : 1; }
};

// Runs the requested suites on a worker pool; report order is deterministic
// by case id regardless of completion order.
VerificationReport run_verification(const VerifyOptions& options);

std::string report_text(const VerificationReport& report);
// One JSON record per case, newline-delimited.
std::string report_records(const VerificationReport& report);

} // namespace almansi
