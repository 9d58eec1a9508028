#include <filesystem>

#include "doctest.h"
#include "qmn/json_io.hpp"
#include "qmn/run.hpp"

using namespace qmn;

TEST_CASE("cfk JSON round trip") {
    CfkComplex c = model("T25").complex;
    std::string text = cfk_to_json(c);
    CfkComplex back = cfk_from_json(text);
    CHECK(cfk_to_json(back) == text);
    CHECK(back.generators.size() == c.generators.size());
    CHECK(back.arrows.size() == c.arrows.size());
    CHECK(tau_from_cfk(back) == 2);
}

TEST_CASE("cfd JSON round trip") {
    TypeDStructure d = build_cfd(model("T23"));
    std::string text = cfd_to_json(d);
    TypeDStructure back = cfd_from_json(text);
    CHECK(cfd_to_json(back) == text);
    CHECK(back.gens.size() == d.gens.size());
    CHECK(check_typeD_relation(back).ok());
}

TEST_CASE("cfa JSON round trip") {
    AInftyModule a = build_cfa(3, 1);
    std::string text = cfa_to_json(a);
    AInftyModule back = cfa_from_json(text);
    CHECK(cfa_to_json(back) == text);
    CHECK(back.ops == a.ops);
}

TEST_CASE("tensor and decomposition JSON round trips") {
    PipelineArtifacts art;
    compute_run(2, 1, model("T23"), false, &art);
    std::string text = tensor_to_json(art.tensor);
    GradedUComplex back = tensor_from_json(text);
    CHECK(tensor_to_json(back) == text);
    std::string dtext = decomposition_to_json(art.decomposition);
    CHECK(decomposition_to_json(decomposition_from_json(dtext)) == dtext);
}

TEST_CASE("byte-for-byte determinism across rebuilds") {
    CHECK(cfa_to_json(build_cfa(2, 3)) == cfa_to_json(build_cfa(2, 3)));
    CHECK(cfd_to_json(build_cfd(model("mT25"))) == cfd_to_json(build_cfd(model("mT25"))));
    CHECK(bridge_report_json(2, 1) == bridge_report_json(2, 1));
}

TEST_CASE("companion from a JSON file") {
    std::string path =
        (std::filesystem::temp_directory_path() / "qmn_t23_roundtrip.json").string();
    write_file(path, cfk_to_json(model("T23").complex));
    SimplifiedModel k = resolve_companion(path);
    CHECK(k.tau == 1);
    CHECK(k.epsilon == 1);
    RunResult r = compute_run(2, 1, k, false);
    CHECK(r.tau_pipeline == 2);
    CHECK(r.agree);
}

TEST_CASE("sweep is deterministic and parallel-safe") {
    auto rows1 = sweep({1, 2}, {1, 2}, {"unknot", "T23"}, false, 1);
    auto rows4 = sweep({1, 2}, {1, 2}, {"unknot", "T23"}, false, 4);
    REQUIRE(rows1.size() == rows4.size());
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        CHECK(rows1[i].m == rows4[i].m);
        CHECK(rows1[i].n == rows4[i].n);
        CHECK(rows1[i].companion == rows4[i].companion);
        CHECK(rows1[i].tau_pipeline == rows4[i].tau_pipeline);
    }
    CHECK(render_table(rows1, "csv") == render_table(rows4, "csv"));
    auto empty = sweep({1, 2}, {1, 2}, {}, false, 1);
    CHECK(empty.empty());
}
