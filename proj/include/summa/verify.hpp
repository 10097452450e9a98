// The full verification suite: every check the acceptance criteria require,
// run at a configurable digit count with the criterion tolerances pinned in
// code. Used by both the `verify` CLI subcommand and the acceptance test
// binary.
#pragma once

#include <string>
#include <vector>

namespace summa {

struct VerifyOptions {
    int digits = 30;
    long max_terms = 1000000;
    unsigned cutoff = 100; // default lattice cutoff (criterion checks pin their own)
};

struct CheckResult {
    std::string name;
    int criterion;        // acceptance criterion this check belongs to
    bool pass;
    std::string residual;  // decimal string, or "exact"/"0" for exact checks
    std::string tolerance; // decimal string, or "exact"
    double elapsed_ms;
    std::string detail;    // failure context, empty when passing
};

std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// One line per check; elapsed columns only when timings is set, so the
/// default rendering is bit-identical across runs.
std::string render_verify_text(const std::vector<CheckResult>& results,
                               const VerifyOptions& options, bool timings);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace summa
