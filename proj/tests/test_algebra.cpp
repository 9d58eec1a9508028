#include "doctest.h"
#include "qmn/algebra.hpp"

using namespace qmn;

TEST_CASE("products follow the multiplication table") {
    CHECK(multiply(Alg::R1, Alg::R2) == Alg::R12);
    CHECK(multiply(Alg::R2, Alg::R3) == Alg::R23);
    CHECK(multiply(Alg::R12, Alg::R3) == Alg::R123);
    CHECK(multiply(Alg::R1, Alg::R23) == Alg::R123);
    CHECK(multiply(Alg::I0, Alg::I0) == Alg::I0);
    CHECK(multiply(Alg::I1, Alg::I1) == Alg::I1);
    CHECK(multiply(Alg::R2, Alg::R1) == Alg::Zero);
    CHECK(multiply(Alg::R3, Alg::R1) == Alg::Zero);
    CHECK(multiply(Alg::R3, Alg::R12) == Alg::Zero);
    CHECK(multiply(Alg::I0, Alg::I1) == Alg::Zero);
}

TEST_CASE("idempotent pairs") {
    CHECK(idempotent_pair(Alg::R1) == std::pair{Alg::I0, Alg::I1});
    CHECK(idempotent_pair(Alg::R2) == std::pair{Alg::I1, Alg::I0});
    CHECK(idempotent_pair(Alg::R3) == std::pair{Alg::I0, Alg::I1});
    CHECK(idempotent_pair(Alg::R12) == std::pair{Alg::I0, Alg::I0});
    CHECK(idempotent_pair(Alg::R23) == std::pair{Alg::I1, Alg::I1});
    CHECK(idempotent_pair(Alg::R123) == std::pair{Alg::I0, Alg::I1});
    CHECK_THROWS_AS(idempotent_pair(Alg::I0), Error);
    CHECK_THROWS_AS(idempotent_pair(Alg::Zero), Error);
}

TEST_CASE("sequence products") {
    std::vector<Alg> s1 = {Alg::R1, Alg::R2, Alg::R3};
    CHECK(sequence_product(s1) == Alg::R123);
    std::vector<Alg> s2 = {Alg::R3, Alg::R2};
    CHECK(sequence_product(s2) == Alg::Zero);
    std::vector<Alg> s3 = {Alg::R12};
    CHECK(sequence_product(s3) == Alg::R12);
    std::vector<Alg> s0;
    CHECK_THROWS_AS(sequence_product(s0), Error);
}

TEST_CASE("associativity over the full basis") {
    for (Alg a : kAlgBasis)
        for (Alg b : kAlgBasis)
            for (Alg c : kAlgBasis)
                CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
}

TEST_CASE("unit and compatibility") {
    for (Alg r : {Alg::R1, Alg::R2, Alg::R3, Alg::R12, Alg::R23, Alg::R123}) {
        // iota_0 + iota_1 acts as the unit.
        CHECK((multiply(Alg::I0, r) == r) != (multiply(Alg::I1, r) == r));
        CHECK((multiply(r, Alg::I0) == r) != (multiply(r, Alg::I1) == r));
        CHECK(multiply(left_idempotent(r), r) == r);
        CHECK(multiply(r, right_idempotent(r)) == r);
    }
    // Nonzero products chain idempotents.
    for (Alg a : kAlgBasis)
        for (Alg b : kAlgBasis) {
            if (!is_reeb(a) || !is_reeb(b)) continue;
            if (multiply(a, b) != Alg::Zero) CHECK(right_idempotent(a) == left_idempotent(b));
        }
}

TEST_CASE("string forms") {
    for (Alg a : kAlgBasis) CHECK(alg_from_string(to_string(a)) == a);
    CHECK(to_string(Alg::R123) == "r123");
    CHECK(to_string(Alg::I0) == "i0");
    CHECK(to_string(Alg::Zero) == "0");
    CHECK_THROWS_AS(alg_from_string("rho1"), Error);
}
