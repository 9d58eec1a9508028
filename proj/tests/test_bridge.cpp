#include "doctest.h"
#include "qmn/bridge.hpp"
#include "qmn/cfa.hpp"

using namespace qmn;

TEST_CASE("continued fractions") {
    CHECK(fraction_to_schubert(ConwayTangle{{2, 1, 2}}) == SchubertForm{8, 3});
    CHECK(fraction_to_schubert(ConwayTangle{{2, 1, 4}}) == SchubertForm{14, 5});
    CHECK(fraction_to_schubert(ConwayTangle{{1}}) == SchubertForm{1, 1});
    // C(2m, 2, -1, -(2n-1)) is the twist form of the same link.
    CHECK(isotopic(fraction_to_schubert(ConwayTangle{{4, 2, -1, -1}}),
                   fraction_to_schubert(ConwayTangle{{4, 1, 2}})));
    CHECK_THROWS_AS(fraction_to_schubert(ConwayTangle{{1, -1}}), Error);
    CHECK_THROWS_AS(fraction_to_schubert(ConwayTangle{{}}), Error);
}

TEST_CASE("schubert forms of the patterns") {
    CHECK(schubert_qmn(1, 1) == SchubertForm{8, 3});
    CHECK(schubert_qmn(2, 1) == SchubertForm{14, 5});
    CHECK(schubert_qmn(2, 3) == SchubertForm{34, 5});
    CHECK(to_string(schubert_qmn(1, 1)) == "b(8,3)");
    CHECK(to_string(schubert_qmn(2, 1)) == "b(14,5)");
}

TEST_CASE("isotopy criterion") {
    CHECK(isotopic({8, 3}, {8, 3}));
    CHECK_FALSE(isotopic({8, 3}, {10, 3}));
    CHECK(isotopic({8, 3}, {8, 11}));  // q mod p
    CHECK(isotopic({14, 5}, {14, 3})); // 5 * 3 = 15 = 1 mod 14
}

TEST_CASE("rs parameters and the bridge form") {
    CHECK(rs_params(2, 1) == std::pair{3, -1});
    CHECK(rs_params(1, 1) == std::pair{2, 0});
    CHECK(rs_params(1, 2) == std::pair{2, -3});
    CHECK(bridge_from_rs(2, 0) == SchubertForm{8, 3});
    CHECK(bridge_from_rs(3, -1) == SchubertForm{14, 5});
    CHECK_THROWS_AS(bridge_from_rs(0, 4), Error);
}

TEST_CASE("bridge identities across the grid") {
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; n <= 10; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            SchubertForm want = schubert_qmn(m, n);
            auto [r, s] = rs_params(m, n);
            CHECK(bridge_from_rs(r, s) == want);
            CHECK(fraction_to_schubert(ConwayTangle{{2LL * n, 1, 2LL * m}}) == want);
            CHECK(isotopic(want, schubert_qmn(n, m)));
            CHECK(want.p % 2 == 0);  // two components
        }
}

TEST_CASE("strand counts") {
    DiagramParams d11 = strand_counts(1, 1);
    std::map<std::string, int> want11 = {
        {"T/L", 2}, {"T/R", 2}, {"B/L/W", 1}, {"B/M", 1}, {"B/R", 1}};
    CHECK(d11.strand_counts == want11);
    CHECK(d11.vertical_intersections == 3);
    CHECK(d11.horizontal_intersections == 4);

    DiagramParams d21 = strand_counts(2, 1);
    std::map<std::string, int> want21 = {{"T/L", 4}, {"T/R", 3}, {"B/L/W", 1},
                                         {"B/M", 2}, {"B/R", 2}, {"V/R", 1}};
    CHECK(d21.strand_counts == want21);
    CHECK(d21.vertical_intersections == 5);
    CHECK(d21.horizontal_intersections == 8);

    DiagramParams d31 = strand_counts(3, 1);
    CHECK(d31.vertical_intersections == 7);
    CHECK(d31.horizontal_intersections == 12);
    // The diagram loses its B/L/W strand exactly when n >= 2.
    CHECK(strand_counts(2, 3).strand_counts.count("B/L/W") == 0);
}

TEST_CASE("intersection counts match the module generators") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            DiagramParams d = strand_counts(m, n);
            AInftyModule a = build_cfa(m, n);
            int xs = 0, ys = 0;
            for (const auto& g : a.gens) (g.role == 'x' ? xs : ys) += 1;
            CHECK(d.vertical_intersections == xs);
            CHECK(d.horizontal_intersections == ys);
        }
}

TEST_CASE("tangle text forms") {
    ConwayTangle t{{2, 1, 4}};
    CHECK(to_string(t) == "C(2,1,4)");
    ConwayTangle back = conway_from_string("C(2,1,4)");
    CHECK(back.coefficients == t.coefficients);
    CHECK_THROWS_AS(conway_from_string("C()"), Error);
    CHECK_THROWS_AS(conway_from_string("b(8,3)"), Error);
}
