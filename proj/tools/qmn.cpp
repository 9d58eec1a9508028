#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmn/acceptance.hpp"
#include "qmn/json_io.hpp"
#include "qmn/run.hpp"

namespace {

using qmn::Error;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::vector<int> parse_range(const std::string& spec) {
    std::vector<int> out;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        int lo = std::stoi(spec.substr(0, colon));
        int hi = std::stoi(spec.substr(colon + 1));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw Error("empty range '" + spec + "'");
    return out;
}

std::vector<std::string> parse_list(const std::string& spec) {
    std::vector<std::string> out;
    std::stringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(tok);
    if (out.empty()) throw Error("empty companion list");
    return out;
}

Json result_json(const qmn::RunResult& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["companion"] = r.companion;
    j["tau_companion"] = r.tau_companion;
    j["eps_companion"] = r.eps_companion;
    j["tau_pipeline"] = r.tau_pipeline;
    j["tau_formula"] = r.tau_formula;
    j["epsilon_formula"] = r.epsilon_formula;
    j["agree"] = r.agree;
    j["raw_cfa"] = r.raw_cfa;
    j["generator_counts"] = {
        {"cfa_ops", r.cfa_ops}, {"cfd_gens", r.cfd_gens}, {"tensor_gens", r.tensor_gens}};
    j["milliseconds"] = r.milliseconds;
    return j;
}

void maybe_write(const std::string& path, const std::string& text) {
    if (!path.empty())
        qmn::write_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concordance invariants of generalized Mazur satellites"};
    app.require_subcommand(1);

    int m = 2, n = 1, fig_k = 2;
    std::string companion = "T23";
    std::string companions = "T23";
    std::string m_range = "1:3", n_range = "1:3";
    std::string format = "md";
    std::string json_path;
    bool raw_cfa = false, no_formula_check = false;
    int parallel = 1;

    auto* c_compute = app.add_subcommand("compute", "tau of one satellite, pipeline vs formula");
    c_compute->add_option("-m", m, "pattern winding m")->required();
    c_compute->add_option("-n", n, "pattern winding n")->required();
    c_compute->add_option("-K,--companion", companion, "companion name or CfkComplex JSON path")
        ->required();
    c_compute->add_flag("--raw-cfa", raw_cfa, "skip the simplifying change of basis");
    c_compute->add_flag("--no-formula-check", no_formula_check, "do not gate the exit code");
    c_compute->add_option("--json", json_path, "write the result as JSON");
    c_compute->add_option("--format", format, "md|csv|json")
        ->check(CLI::IsMember({"md", "csv", "json"}));

    auto* c_sweep = app.add_subcommand("sweep", "cartesian (m, n, companion) table");
    c_sweep->add_option("--m", m_range, "m range lo:hi or comma list");
    c_sweep->add_option("--n", n_range, "n range lo:hi or comma list");
    c_sweep->add_option("-K,--companions", companions, "comma-separated companions");
    c_sweep->add_flag("--raw-cfa", raw_cfa, "skip the simplifying change of basis");
    c_sweep->add_flag("--no-formula-check", no_formula_check, "do not gate the exit code");
    c_sweep->add_option("--parallel", parallel, "worker threads");
    c_sweep->add_option("--format", format, "md|csv|json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    c_sweep->add_option("--json", json_path, "also write the table as JSON");

    auto* c_bridge = app.add_subcommand("bridge", "2-bridge data of the pattern");
    c_bridge->add_option("-m", m, "pattern winding m")->required();
    c_bridge->add_option("-n", n, "pattern winding n")->required();
    c_bridge->add_option("--json", json_path, "write to file instead of stdout");

    auto* c_cfa = app.add_subcommand("cfa", "A-infinity module of the pattern as JSON");
    c_cfa->add_option("-m", m, "pattern winding m")->required();
    c_cfa->add_option("-n", n, "pattern winding n")->required();
    c_cfa->add_flag("--raw-cfa", raw_cfa, "skip the simplifying change of basis");
    c_cfa->add_option("--json", json_path, "write to file instead of stdout");

    auto* c_cfd = app.add_subcommand("cfd", "type D structure of a companion as JSON");
    c_cfd->add_option("-K,--companion", companion, "companion name or CfkComplex JSON path")
        ->required();
    c_cfd->add_option("--json", json_path, "write to file instead of stdout");

    auto* c_eps = app.add_subcommand("epsilon", "classify the transcribed subcomplex fixtures");
    auto* eps_m = c_eps->add_option("-m", m, "pattern winding m");
    auto* eps_n = c_eps->add_option("-n", n, "pattern winding n");
    c_eps->add_option("-k", fig_k, "zig-zag length for the tau<=0, eps=1 fixture");

    auto* c_verify = app.add_subcommand("verify", "run the acceptance suite");
    (void)c_verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (c_compute->parsed()) {
            qmn::SimplifiedModel K;
            try {
                K = qmn::resolve_companion(companion);
            } catch (const Error& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return kExitInput;
            }
            if (m < 1 || n < 1) {
                std::cerr << "input error: m, n must be positive\n";
                return kExitInput;
            }
            qmn::PipelineArtifacts art;
            qmn::RunResult r = qmn::compute_run(m, n, K, raw_cfa, &art);
            std::cout << qmn::render_table({r}, format);
            if (!json_path.empty()) {
                Json j = result_json(r);
                j["decomposition"] =
                    Json::parse(qmn::decomposition_to_json(art.decomposition));
                maybe_write(json_path, j.dump(2) + "\n");
            }
            return (r.agree || no_formula_check) ? kExitOk : kExitDisagree;
        }
        if (c_sweep->parsed()) {
            std::vector<qmn::RunResult> rows;
            try {
                rows = qmn::sweep(parse_range(m_range), parse_range(n_range),
                                  parse_list(companions), raw_cfa, parallel);
            } catch (const Error& e) {
                std::string w = e.what();
                if (w.find("sweep case failed") != std::string::npos) throw;
                std::cerr << "input error: " << w << "\n";
                return kExitInput;
            }
            std::cout << qmn::render_table(rows, format);
            if (!json_path.empty()) maybe_write(json_path, qmn::render_table(rows, "json"));
            bool all = true;
            for (const auto& r : rows) all = all && r.agree;
            return (all || no_formula_check) ? kExitOk : kExitDisagree;
        }
        if (c_bridge->parsed()) {
            std::string text;
            try {
                text = qmn::bridge_report_json(m, n);
            } catch (const Error& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return kExitInput;
            }
            if (json_path.empty())
                std::cout << text;
            else
                maybe_write(json_path, text);
            return kExitOk;
        }
        if (c_cfa->parsed()) {
            std::string text;
            try {
                qmn::AInftyModule A = qmn::build_cfa(m, n);
                if (!raw_cfa) A = qmn::change_of_basis(A, m, n);
                text = qmn::cfa_to_json(A);
            } catch (const Error& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return kExitInput;
            }
            if (json_path.empty())
                std::cout << text;
            else
                maybe_write(json_path, text);
            return kExitOk;
        }
        if (c_cfd->parsed()) {
            std::string text;
            try {
                text = qmn::cfd_to_json(qmn::build_cfd(qmn::resolve_companion(companion)));
            } catch (const Error& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return kExitInput;
            }
            if (json_path.empty())
                std::cout << text;
            else
                maybe_write(json_path, text);
            return kExitOk;
        }
        if (c_eps->parsed()) {
            std::vector<std::pair<int, int>> cells;
            if (*eps_m || *eps_n)
                cells.push_back({m, n});
            else
                cells = {{2, 1}, {3, 2}, {2, 2}};
            bool all_plus_one = true;
            for (const char* fig : {"fig25", "fig27", "fig29", "fig31"})
                for (auto [mm, nn] : cells) {
                    qmn::CfkComplex c;
                    try {
                        c = qmn::fixture(fig, mm, nn, fig_k);
                    } catch (const Error& e) {
                        std::cerr << "input error: " << e.what() << "\n";
                        return kExitInput;
                    }
                    int cls = qmn::vertical_classify(
                        c, qmn::fixture_distinguished_cycle(fig, mm, nn));
                    all_plus_one = all_plus_one && cls == 1;
                    std::cout << fig << "(" << mm << "," << nn << "): epsilon class "
                              << (cls > 0 ? "+1" : cls == 0 ? "0" : "-1") << "\n";
                }
            return all_plus_one ? kExitOk : kExitDisagree;
        }
        if (c_verify->parsed()) {
            bool all = true;
            for (const auto& r : qmn::run_acceptance()) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": "
                          << r.summary << " [" << r.detail << "]\n";
                all = all && r.pass;
            }
            return all ? kExitOk : kExitDisagree;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
