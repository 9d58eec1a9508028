#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmn/acceptance.hpp"
#include "qmn/bridge.hpp"
#include "qmn/json_io.hpp"
#include "qmn/run.hpp"

namespace py = pybind11;

namespace {

py::dict result_dict(const qmn::RunResult& r) {
    py::dict d;
    d["m"] = r.m;
    d["n"] = r.n;
    d["companion"] = r.companion;
    d["tau_companion"] = r.tau_companion;
    d["eps_companion"] = r.eps_companion;
    d["tau_pipeline"] = r.tau_pipeline;
    d["tau_formula"] = r.tau_formula;
    d["epsilon_formula"] = r.epsilon_formula;
    d["agree"] = r.agree;
    d["raw_cfa"] = r.raw_cfa;
    d["cfa_ops"] = r.cfa_ops;
    d["cfd_gens"] = r.cfd_gens;
    d["tensor_gens"] = r.tensor_gens;
    return d;
}

}  // namespace

PYBIND11_MODULE(qmnfloer, mod) {
    mod.doc() = "Concordance invariants of generalized Mazur satellites";

    mod.def(
        "tau_formula",
        [](int m, int n, int tau_k, int eps_k) { return qmn::tau_formula({m, n}, tau_k, eps_k); },
        py::arg("m"), py::arg("n"), py::arg("tau_k"), py::arg("eps_k"));
    mod.def(
        "epsilon_formula",
        [](int m, int n, int tau_k, int eps_k) {
            return qmn::epsilon_formula({m, n}, tau_k, eps_k);
        },
        py::arg("m"), py::arg("n"), py::arg("tau_k"), py::arg("eps_k"));
    mod.def("tau_levine", &qmn::tau_levine, py::arg("tau_k"), py::arg("eps_k"));
    mod.def("tau_cable", &qmn::tau_cable, py::arg("p"), py::arg("q"), py::arg("tau_k"),
            py::arg("eps_k"));
    mod.def("epsilon_cable", &qmn::epsilon_cable, py::arg("p"), py::arg("q"), py::arg("tau_k"),
            py::arg("eps_k"));
    mod.def(
        "winding", [](int m, int n) { return qmn::winding({m, n}); }, py::arg("m"), py::arg("n"));
    mod.def(
        "genus_qmn", [](int m, int n) { return qmn::genus_qmn({m, n}); }, py::arg("m"),
        py::arg("n"));
    mod.def("genus_satellite", &qmn::genus_satellite, py::arg("w"), py::arg("g_k"),
            py::arg("g_p"));

    mod.def("model_names", &qmn::model_names);
    mod.def(
        "compute",
        [](int m, int n, const std::string& companion, bool raw_cfa) {
            return result_dict(qmn::compute_run(m, n, qmn::resolve_companion(companion), raw_cfa));
        },
        py::arg("m"), py::arg("n"), py::arg("companion"), py::arg("raw_cfa") = false);
    mod.def(
        "sweep",
        [](const std::vector<int>& ms, const std::vector<int>& ns,
           const std::vector<std::string>& companions, bool raw_cfa, int parallel) {
            py::list rows;
            for (const auto& r : qmn::sweep(ms, ns, companions, raw_cfa, parallel))
                rows.append(result_dict(r));
            return rows;
        },
        py::arg("ms"), py::arg("ns"), py::arg("companions"), py::arg("raw_cfa") = false,
        py::arg("parallel") = 1);

    mod.def(
        "cfa_json",
        [](int m, int n, bool raw_cfa) {
            qmn::AInftyModule a = qmn::build_cfa(m, n);
            if (!raw_cfa) a = qmn::change_of_basis(a, m, n);
            return qmn::cfa_to_json(a);
        },
        py::arg("m"), py::arg("n"), py::arg("raw_cfa") = false);
    mod.def(
        "cfd_json",
        [](const std::string& companion) {
            return qmn::cfd_to_json(qmn::build_cfd(qmn::resolve_companion(companion)));
        },
        py::arg("companion"));
    mod.def("bridge_json", &qmn::bridge_report_json, py::arg("m"), py::arg("n"));
    mod.def(
        "schubert", [](int m, int n) { return qmn::to_string(qmn::schubert_qmn(m, n)); },
        py::arg("m"), py::arg("n"));
    mod.def(
        "fixture_epsilon",
        [](const std::string& fig, int m, int n, int k) {
            return qmn::vertical_classify(qmn::fixture(fig, m, n, k),
                                          qmn::fixture_distinguished_cycle(fig, m, n));
        },
        py::arg("fig"), py::arg("m"), py::arg("n"), py::arg("k") = 2);

    mod.def("acceptance", []() {
        py::list out;
        for (const auto& r : qmn::run_acceptance()) {
            py::dict d;
            d["id"] = r.id;
            d["summary"] = r.summary;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });

    py::register_exception<qmn::Error>(mod, "QmnError");
}
