#include "bcnrand/selftest.hpp"
#include "doctest.h"

using namespace bcn;

TEST_CASE("fast selftest passes on a healthy build") {
    const auto results = selftest::run_all(true);
    CHECK(results.size() == 8);
    for (const auto& r : results) CHECK_MESSAGE(r.pass, r.name);
    CHECK(selftest::all_passed(results));
}

TEST_CASE("a corrupted mu constant is caught and named as a modred failure") {
    auto corrupted = modred::constants();
    corrupted.mu ^= 0x40;
    const auto results = selftest::run_all(true, corrupted);
    CHECK_FALSE(selftest::all_passed(results));
    bool modred_named = false;
    for (const auto& r : results) {
        if (!r.pass) {
            CHECK(r.name.rfind("modred.", 0) == 0);
            modred_named = true;
        }
    }
    CHECK(modred_named);
}
