#include "doctest.h"
#include "qmn/formulas.hpp"

using namespace qmn;

TEST_CASE("main tau formula examples") {
    CHECK(tau_formula({2, 1}, 1, 1) == 2);
    CHECK(tau_formula({3, 4}, 0, 0) == 0);
    CHECK(tau_formula({3, 1}, 1, -1) == 4);  // |m-n| tau + max(m,n) - 1
    CHECK(tau_formula({2, 2}, 1, 1) == 2);
    CHECK(tau_formula({2, 3}, -1, -1) == 0);  // -1 + |m-n|
    CHECK(tau_formula({4, 1}, -2, 1) == -6);
    CHECK_THROWS_AS(tau_formula({2, 1}, 1, 0), Error);
    CHECK_THROWS_AS(tau_formula({0, 1}, 0, 0), Error);
}

TEST_CASE("equal-winding branch follows the pipeline") {
    CHECK(tau_formula({3, 3}, 2, 1) == 3);
    CHECK(tau_formula({3, 3}, 2, -1) == 3);
    CHECK(tau_formula({3, 3}, 0, 0) == 0);   // unknot pattern: Q(U) is the unknot
    CHECK(tau_formula({3, 3}, 0, 1) == 0);
    CHECK(tau_formula({3, 3}, 0, -1) == 2);
    CHECK(tau_formula({3, 3}, -2, 1) == 0);
    CHECK(tau_formula({3, 3}, -2, -1) == 0);
    CHECK(tau_formula({1, 1}, 0, -1) == 0);  // untwisted double of eps = -1 companions
}

TEST_CASE("epsilon formula") {
    CHECK(epsilon_formula({2, 1}, 0, 0) == 0);
    CHECK(epsilon_formula({2, 1}, 1, 1) == 1);
    CHECK(epsilon_formula({4, 4}, -3, -1) == 1);
}

TEST_CASE("cable formulas") {
    CHECK(tau_cable(2, 3, 1, 1) == 3);
    CHECK(tau_cable(5, 7, 0, 0) == 12);  // (p-1)(q-1)/2
    CHECK(tau_cable(3, -4, -1, -1) == -6);
    CHECK(epsilon_cable(2, 1, 0, 0) == 0);
    CHECK(epsilon_cable(2, 3, 0, 0) == 1);
    CHECK(epsilon_cable(2, -3, 0, 0) == -1);
    CHECK(epsilon_cable(2, 9, -1, -1) == -1);
}

TEST_CASE("levine special case equals the (2,1) pattern") {
    CHECK(tau_levine(1, 1) == 2);
    CHECK(tau_levine(0, 1) == 0);
    CHECK(tau_levine(0, -1) == 1);
    for (int tau = -5; tau <= 5; ++tau)
        for (int eps : {-1, 0, 1}) {
            if (eps == 0 && tau != 0) continue;
            CAPTURE(tau);
            CAPTURE(eps);
            CHECK(tau_levine(tau, eps) == tau_formula({2, 1}, tau, eps));
        }
}

TEST_CASE("symmetry and small-parameter properties") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int tau = -5; tau <= 5; ++tau)
                for (int eps : {-1, 0, 1}) {
                    if (eps == 0 && tau != 0) continue;
                    CHECK(tau_formula({m, n}, tau, eps) == tau_formula({n, m}, tau, eps));
                    if (eps == 0) {
                        CHECK(tau_formula({m, n}, tau, eps) == 0);
                        CHECK(epsilon_formula({m, n}, tau, eps) == 0);
                    }
                }
    for (int tau = -5; tau <= 5; ++tau)
        for (int eps : {-1, 0, 1}) {
            if (eps == 0 && tau != 0) continue;
            int t = tau_formula({1, 1}, tau, eps);
            CHECK(t >= 0);
            CHECK(t <= 1);
        }
}

TEST_CASE("winding and genus") {
    CHECK(winding({2, 1}) == -1);
    CHECK(winding({1, 4}) == 3);
    CHECK(genus_qmn({3, 2}) == 2);
    CHECK(genus_satellite(-1, 1, 1) == 2);
    CHECK(genus_satellite(0, 7, 2) == 2);
}
