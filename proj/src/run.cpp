#include "qmn/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "qmn/json_io.hpp"

namespace qmn {

SimplifiedModel model_from_complex(CfkComplex c, const std::string& name) {
    Diagnostics d = validate(c);
    if (!d.ok()) throw Error("companion complex invalid: " + d.errors.front());
    SimplifiedModel m;
    m.name = name;
    for (const auto& a : c.arrows) {
        if (a.u == 0 && a.v == 0)
            throw Error("companion complex must be reduced");
        if (a.v > 0)
            m.vertical.push_back({a.from, a.to, a.v});
        else
            m.horizontal.push_back({a.from, a.to, a.u});
    }
    // Distinguished elements must reduce to single basis generators in the
    // supported (simultaneously simplified) class.
    Cycle eta = horizontal_distinguished(c);
    if (eta.size() != 1) throw Error("companion outside supported class: eta_0 is not a basis element");
    m.eta0 = eta[0];
    CfkComplex swapped = c;
    for (auto& a : swapped.arrows) std::swap(a.u, a.v);
    Cycle xi = horizontal_distinguished(swapped);  // vertical distinguished of c
    if (xi.size() != 1) throw Error("companion outside supported class: xi_0 is not a basis element");
    m.xi0 = xi[0];
    m.tau = c.grading_of(m.xi0);
    m.epsilon = vertical_classify(c, {m.eta0});
    c.reduced = true;
    m.complex = std::move(c);
    Diagnostics ok = check_model(m);
    if (!ok.ok()) throw Error("companion outside supported class: " + ok.errors.front());
    return m;
}

SimplifiedModel resolve_companion(const std::string& name_or_path) {
    bool is_path = name_or_path.find('/') != std::string::npos ||
                   (name_or_path.size() > 5 &&
                    name_or_path.substr(name_or_path.size() - 5) == ".json");
    if (!is_path) return model(name_or_path);
    CfkComplex c = cfk_from_json(read_file(name_or_path));
    return model_from_complex(std::move(c), name_or_path);
}

RunResult compute_run(int m, int n, const SimplifiedModel& companion, bool raw_cfa,
                      PipelineArtifacts* out) {
    auto t0 = std::chrono::steady_clock::now();
    AInftyModule A = build_cfa(m, n);
    if (!raw_cfa) A = change_of_basis(A, m, n);
    TypeDStructure D = build_cfd(companion);
    GradedUComplex T = assign_gradings(box_tensor(A, D), m, n, D);
    Decomposition dec = reduce(T);

    RunResult r;
    r.m = m;
    r.n = n;
    r.companion = companion.name;
    r.tau_companion = companion.tau;
    r.eps_companion = companion.epsilon;
    r.tau_pipeline = tau_from_decomposition(dec);
    r.tau_formula = qmn::tau_formula({m, n}, companion.tau, companion.epsilon);
    r.epsilon_formula = qmn::epsilon_formula({m, n}, companion.tau, companion.epsilon);
    r.agree = r.tau_pipeline == r.tau_formula;
    r.raw_cfa = raw_cfa;
    r.cfa_ops = static_cast<int>(A.ops.size());
    r.cfd_gens = static_cast<int>(D.gens.size());
    r.tensor_gens = static_cast<int>(T.gens.size());
    auto t1 = std::chrono::steady_clock::now();
    r.milliseconds = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (out) {
        out->cfa = std::move(A);
        out->cfd = std::move(D);
        out->tensor = std::move(T);
        out->decomposition = std::move(dec);
    }
    return r;
}

std::vector<RunResult> sweep(const std::vector<int>& ms, const std::vector<int>& ns,
                             const std::vector<std::string>& companions, bool raw_cfa,
                             int parallel) {
    struct Case {
        int m, n;
        SimplifiedModel model;
    };
    std::vector<Case> cases;
    for (int m : ms)
        for (int n : ns)
            for (const auto& name : companions) cases.push_back({m, n, resolve_companion(name)});

    std::vector<RunResult> results(cases.size());
    int workers = std::max(1, parallel);
    if (workers == 1) {
        for (std::size_t i = 0; i < cases.size(); ++i)
            results[i] = compute_run(cases[i].m, cases[i].n, cases[i].model, raw_cfa);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::string> failures(cases.size());
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            try {
                results[i] = compute_run(cases[i].m, cases[i].n, cases[i].model, raw_cfa);
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& f : failures)
        if (!f.empty()) throw Error("sweep case failed: " + f);
    return results;
}

int genus_from_decomposition(const Decomposition& d) {
    bool seen = false;
    int extremal = 0;
    auto take = [&](const std::optional<int>& a) {
        if (!a) return;
        if (!seen || std::abs(*a) > extremal) extremal = std::abs(*a);
        seen = true;
    };
    for (const auto& a : d.free) take(a);
    for (const auto& t : d.torsion) {
        take(t.alexander);
        if (t.alexander) take(*t.alexander - t.order);
    }
    if (!seen) throw Error("genus_from_decomposition: no graded summand");
    return extremal;
}

std::string render_table(const std::vector<RunResult>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            os << "  {\"m\":" << r.m << ",\"n\":" << r.n << ",\"companion\":\"" << r.companion
               << "\",\"tau_pipeline\":" << r.tau_pipeline << ",\"tau_formula\":" << r.tau_formula
               << ",\"epsilon_formula\":" << r.epsilon_formula
               << ",\"agree\":" << (r.agree ? "true" : "false") << "}";
            os << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        os << "]\n";
        return os.str();
    }
    if (format == "csv") {
        os << "m,n,companion,tau_K,eps_K,tau_pipeline,tau_formula,epsilon_formula,agree\n";
        for (const auto& r : rows)
            os << r.m << "," << r.n << "," << r.companion << "," << r.tau_companion << ","
               << r.eps_companion << "," << r.tau_pipeline << "," << r.tau_formula << ","
               << r.epsilon_formula << "," << (r.agree ? "yes" : "NO") << "\n";
        return os.str();
    }
    os << "| m | n | companion | tau_K | eps_K | tau_pipeline | tau_formula | eps_formula | agree |\n";
    os << "|---|---|-----------|-------|-------|--------------|-------------|-------------|-------|\n";
    for (const auto& r : rows)
        os << "| " << r.m << " | " << r.n << " | " << r.companion << " | " << r.tau_companion
           << " | " << r.eps_companion << " | " << r.tau_pipeline << " | " << r.tau_formula
           << " | " << r.epsilon_formula << " | " << (r.agree ? "yes" : "NO") << " |\n";
    return os.str();
}

}  // namespace qmn
