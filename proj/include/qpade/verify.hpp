#pragma once

#include <string>
#include <vector>

namespace qpade {

// One named invariant check. detail carries sizes and, on failure, the first
// counterexample found.
struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyOptions {
    unsigned n_max = 20;  // main size knob for the polynomial/approximant suites
    std::vector<unsigned long> exact_primes = {2, 3, 5};     // exact identity suites
    std::vector<unsigned long> integer_primes = {2, 3, 10};  // integrality/divisibility
    std::vector<unsigned long> residual_primes = {2, 3};     // two-path residual checks
    unsigned cyclotomic_n_max = 200;
    unsigned seed = 20240519;
    // Test-only hook: perturbs one cyclotomic coefficient inside the product
    // identity check, which must then fail and be named in the report.
    bool inject_fault = false;
};

// Runs the invariant suites of every module at the configured sizes.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qpade
