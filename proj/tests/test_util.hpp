// test_util.hpp — shared assertions for the unit tests.

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"

namespace qotto::testutil {

// Absolute comparison with a reported gap, for frozen reference constants.
inline void check_close(double got, double ref, double tol) {
    INFO("got=", got, " ref=", ref, " gap=", std::abs(got - ref));
    CHECK(std::abs(got - ref) <= tol);
}

inline void check_vector_close(const std::vector<double>& got,
                               const std::vector<double>& ref, double tol) {
    REQUIRE(got.size() == ref.size());
    for (size_t i = 0; i < got.size(); ++i) {
        INFO("index ", i);
        check_close(got[i], ref[i], tol);
    }
}

}  // namespace qotto::testutil
