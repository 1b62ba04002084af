// Randomized property suites shared by the unit tests and the acceptance
// runner.  Every suite uses its own fixed seed, so results are reproducible.
#ifndef SPHCOX_TESTS_PROPERTY_SUITES_HPP
#define SPHCOX_TESTS_PROPERTY_SUITES_HPP

#include <string>
#include <vector>

namespace sphcox_tests {

struct SuiteResult {
    std::string name;
    int cases = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty() && cases >= 200; }
};

std::vector<SuiteResult> run_property_suites();

} // namespace sphcox_tests

#endif
