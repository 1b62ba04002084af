#include "doctest.h"
#include "property_suites.hpp"

TEST_CASE("randomized property suites") {
    for (const auto& suite : sphcox_tests::run_property_suites()) {
        INFO(suite.name);
        for (const auto& f : suite.failures) {
            INFO(f);
        }
        CHECK(suite.failures.empty());
        CHECK(suite.cases >= 200);
    }
}
