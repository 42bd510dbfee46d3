// Self-contained invariant suites runnable from the CLI: generator relations,
// transformation-data identities, canonical-key soundness probes, Demazure
// monoid laws, spectral exactness checks, and Hilbert-metric inequalities.

#ifndef COXSPEC_VERIFY_HPP
#define COXSPEC_VERIFY_HPP

#include <string>
#include <vector>

namespace coxspec {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure
};

// Known suites: kappa, trans, canonical, demazure, salem, hilbert, submult.
// Empty filter runs all; unknown names throw std::invalid_argument.
std::vector<CheckResult> run_verify(const std::string& suite_filter = "");

}  // namespace coxspec

#endif
