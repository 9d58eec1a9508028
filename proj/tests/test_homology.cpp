#include <algorithm>
#include <random>

#include "doctest.h"
#include "qmn/acceptance.hpp"
#include "qmn/homology.hpp"

using namespace qmn;

namespace {

GradedUComplex two_gens(int power, int a_from) {
    GradedUComplex c;
    c.gens = {{"a", "", a_from}, {"b", "", a_from + power}, };
    c.arrows = {{0, 1, power}};
    return c;
}

GradedUComplex permuted(const GradedUComplex& c, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<int> perm(c.gens.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    GradedUComplex out;
    out.gens.resize(c.gens.size());
    for (std::size_t i = 0; i < c.gens.size(); ++i)
        out.gens[static_cast<std::size_t>(perm[i])] = c.gens[i];
    for (const auto& a : c.arrows)
        out.arrows.push_back({perm[static_cast<std::size_t>(a.from)],
                              perm[static_cast<std::size_t>(a.to)], a.u});
    std::shuffle(out.arrows.begin(), out.arrows.end(), rng);
    return out;
}

}  // namespace

TEST_CASE("elementary pairs") {
    Decomposition d0 = reduce(two_gens(0, 5));
    CHECK(d0.free.empty());
    CHECK(d0.torsion.empty());

    Decomposition d2 = reduce(two_gens(2, 0));
    CHECK(d2.free.empty());
    REQUIRE(d2.torsion.size() == 1);
    CHECK(d2.torsion[0].alexander == 2);
    CHECK(d2.torsion[0].order == 2);

    GradedUComplex empty;
    Decomposition de = reduce(empty);
    CHECK(de.free.empty());
    CHECK(de.torsion.empty());
}

TEST_CASE("worked cancellation with interleaved corrections") {
    // d A = U^2 G + U H', d G = U H, d H' = U^2 H: two order-one torsion
    // summands, no free part.
    GradedUComplex c;
    c.gens = {{"A", "", 0}, {"G", "", 2}, {"H", "", 3}, {"Hp", "", 1}};
    c.arrows = {{0, 1, 2}, {0, 3, 1}, {1, 2, 1}, {3, 2, 2}};
    Decomposition d = reduce(c);
    CHECK(d.free.empty());
    REQUIRE(d.torsion.size() == 2);
    CHECK(d.torsion[0].order == 1);
    CHECK(d.torsion[1].order == 1);
}

TEST_CASE("polynomial entries are rejected") {
    GradedUComplex c;
    c.gens = {{"a", "", 0}, {"b", "", 1}};
    c.arrows = {{0, 1, 1}, {0, 1, 2}};
    CHECK_THROWS_AS(reduce(c), Error);
}

TEST_CASE("tau and top grading readers") {
    Decomposition d;
    d.free = {0};
    CHECK(tau_from_decomposition(d) == 0);
    CHECK(top_nonzero_grading(d) == 0);
    d.free = {-2};
    d.torsion = {{1, 3}};
    CHECK(tau_from_decomposition(d) == 2);
    CHECK(top_nonzero_grading(d) == 1);
    d.free = {-2, 0};
    CHECK_THROWS_AS(tau_from_decomposition(d), Error);
    Decomposition empty;
    CHECK_THROWS_AS(top_nonzero_grading(empty), Error);
}

TEST_CASE("reduction is order independent") {
    for (unsigned seed = 1; seed <= 100; ++seed) {
        GradedUComplex c = random_graded_complex(seed);
        Decomposition base = reduce(c);
        for (unsigned p = 1; p <= 3; ++p) {
            Decomposition alt = reduce(permuted(c, 1000 * seed + p));
            CAPTURE(seed);
            CAPTURE(p);
            CHECK(base.free == alt.free);
            CHECK(base.torsion == alt.torsion);
        }
    }
}

TEST_CASE("truncation oracle agrees on random complexes") {
    for (unsigned seed = 200; seed < 320; ++seed) {
        GradedUComplex c = random_graded_complex(seed);
        Decomposition dec = reduce(c);
        for (int N = 1; N <= 6; ++N) {
            int expected = N * static_cast<int>(dec.free.size());
            for (const auto& t : dec.torsion) expected += 2 * std::min(t.order, N);
            CAPTURE(seed);
            CAPTURE(N);
            CHECK(truncated_homology_dim(c, N) == expected);
        }
    }
}

TEST_CASE("no arrow survives reduction") {
    // Survivors are free summands; reduce consumes the whole arrow set by
    // construction, so rerunning on the survivors is a no-op.
    GradedUComplex c = random_graded_complex(42);
    Decomposition dec = reduce(c);
    GradedUComplex survivors;
    for (const auto& a : dec.free) survivors.gens.push_back({"s", "", a});
    Decomposition again = reduce(survivors);
    CHECK(again.free == dec.free);
    CHECK(again.torsion.empty());
}
