#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "qmn/cfd.hpp"

using namespace qmn;

namespace {

std::set<std::tuple<std::string, std::string, Alg>> edge_set(const TypeDStructure& d) {
    std::set<std::tuple<std::string, std::string, Alg>> s;
    for (const auto& e : d.edges) s.insert({e.from, e.to, e.label});
    return s;
}

int iota1_dim(const TypeDStructure& d) {
    int k = 0;
    for (const auto& g : d.gens) k += g.iota;
    return k;
}

}  // namespace

TEST_CASE("unknot complement: one generator with a rho_12 self-edge") {
    TypeDStructure d = build_cfd(model("unknot"));
    REQUIRE(d.gens.size() == 1);
    CHECK(d.gens[0].id == "xi0");
    CHECK(d.gens[0].iota == 0);
    CHECK(d.gens[0].alexander == 0);
    REQUIRE(d.edges.size() == 1);
    CHECK(edge_set(d).count({"xi0", "xi0", Alg::R12}) == 1);
    CHECK(check_typeD_relation(d).ok());
}

TEST_CASE("right-handed trefoil complement matches the published structure") {
    TypeDStructure d = build_cfd(model("T23"));
    // 3 iota_0 generators and kappa, lambda, mu_1, mu_2.
    CHECK(d.gens.size() == 7);
    CHECK(iota1_dim(d) == 4);
    auto s = edge_set(d);
    std::set<std::tuple<std::string, std::string, Alg>> want = {
        {"xi2", "ka1_1", Alg::R123}, {"xi1", "ka1_1", Alg::R1}, {"xi1", "la1_1", Alg::R3},
        {"la1_1", "xi0", Alg::R2},   {"xi2", "mu_1", Alg::R3},  {"mu_1", "mu_2", Alg::R23},
        {"xi0", "mu_2", Alg::R1}};
    CHECK(s == want);
    CHECK(check_typeD_relation(d).ok());
}

TEST_CASE("figure-eight: tau = 0 gives the D_12 unstable edge") {
    TypeDStructure d = build_cfd(model("figure8"));
    CHECK(d.gens.size() == 5 + 4);  // 2 kappa + 2 lambda chains of length 1
    CHECK(edge_set(d).count({"xi0", "xi0", Alg::R12}) == 1);  // xi0 = eta0 here
    CHECK(check_typeD_relation(d).ok());
}

TEST_CASE("iota_1 dimension is sum(k_j + l_j) + 2|tau|") {
    for (const auto& name : model_names()) {
        SimplifiedModel m = model(name);
        int want = 2 * std::abs(m.tau);
        for (const auto& a : m.vertical) want += a.length;
        for (const auto& a : m.horizontal) want += a.length;
        CAPTURE(name);
        CHECK(iota1_dim(build_cfd(m)) == want);
    }
}

TEST_CASE("relations and idempotents hold for every model") {
    for (const auto& name : model_names()) {
        TypeDStructure d = build_cfd(model(name));
        CAPTURE(name);
        CHECK(check_idempotents(d).ok());
        CHECK(check_typeD_relation(d).ok());
    }
}

TEST_CASE("relation check catches an uncancelled square") {
    TypeDStructure d;
    d.gens = {{"g", 0, {}}, {"h", 1, {}}, {"k", 0, {}}};
    d.edges = {{"g", "h", Alg::R1}, {"h", "k", Alg::R2}};
    CHECK(check_idempotents(d).ok());
    CHECK_FALSE(check_typeD_relation(d).ok());
}

TEST_CASE("path enumeration by label sequence") {
    TypeDStructure t = build_cfd(model("T23"));
    CHECK(paths_with_labels(t, "xi1", {Alg::R3, Alg::R2}) == std::vector<std::string>{"xi0"});
    CHECK(paths_with_labels(t, "xi0", {Alg::R3}).empty());
    TypeDStructure u = build_cfd(model("unknot"));
    CHECK(paths_with_labels(u, "xi0", {Alg::R12, Alg::R12}) == std::vector<std::string>{"xi0"});
    CHECK_THROWS_AS(paths_with_labels(t, "xi1", {}), Error);
    CHECK_THROWS_AS(paths_with_labels(t, "nope", {Alg::R1}), Error);
}

TEST_CASE("unstable neighborhood shape for tau > 0") {
    // epsilon = +1: the horizontal chain ends on xi0 with a D_2 edge.
    for (const char* name : {"T23", "T25"}) {
        SimplifiedModel m = model(name);
        TypeDStructure d = build_cfd(m);
        auto s = edge_set(d);
        int tau = m.tau;
        // eta0 --3--> mu_1 --23--> ... --23--> mu_s <--1-- xi0.
        std::string eta0;
        for (const auto& e : d.edges)
            if (std::get<2>(std::tuple{e.from, e.to, e.label}) == Alg::R3 &&
                e.to == "mu_1")
                eta0 = e.from;
        CAPTURE(name);
        REQUIRE_FALSE(eta0.empty());
        for (int i = 1; i < 2 * tau; ++i)
            CHECK(s.count({"mu_" + std::to_string(i), "mu_" + std::to_string(i + 1), Alg::R23}));
        CHECK(s.count({"xi0", "mu_" + std::to_string(2 * tau), Alg::R1}));
        bool d2_into_xi0 = false;
        for (const auto& e : d.edges)
            if (e.to == "xi0" && e.label == Alg::R2) d2_into_xi0 = true;
        CHECK(d2_into_xi0);
    }
    // epsilon = -1: eta0 carries the outgoing D_1 of a vertical chain.
    for (const char* name : {"synth_tau1_epsm1", "synth_tau2_epsm1"}) {
        SimplifiedModel m = model(name);
        TypeDStructure d = build_cfd(m);
        std::string eta0;
        for (const auto& e : d.edges)
            if (e.label == Alg::R3 && e.to == "mu_1") eta0 = e.from;
        CAPTURE(name);
        REQUIRE_FALSE(eta0.empty());
        bool d1_out_of_eta0 = false;
        for (const auto& e : d.edges)
            if (e.from == eta0 && e.label == Alg::R1 && e.to.substr(0, 2) == "ka")
                d1_out_of_eta0 = true;
        CHECK(d1_out_of_eta0);
    }
}

TEST_CASE("deterministic ids") {
    TypeDStructure a = build_cfd(model("T25"));
    TypeDStructure b = build_cfd(model("T25"));
    REQUIRE(a.gens.size() == b.gens.size());
    for (std::size_t i = 0; i < a.gens.size(); ++i) CHECK(a.gens[i].id == b.gens[i].id);
}
