#include "qmn/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qmn/bridge.hpp"
#include "qmn/cfa.hpp"
#include "qmn/cfd.hpp"
#include "qmn/cfk.hpp"
#include "qmn/formulas.hpp"
#include "qmn/gf2.hpp"
#include "qmn/homology.hpp"
#include "qmn/run.hpp"

namespace qmn {

int truncated_homology_dim(const GradedUComplex& c, int N) {
    if (N < 1) throw Error("truncation level must be >= 1");
    std::size_t dim = c.gens.size() * static_cast<std::size_t>(N);
    auto idx = [N](int gen, int t) {
        return static_cast<std::size_t>(gen) * static_cast<std::size_t>(N) +
               static_cast<std::size_t>(t);
    };
    gf2::Span im(dim);
    std::size_t rank = 0;
    for (std::size_t g = 0; g < c.gens.size(); ++g) {
        for (int t = 0; t < N; ++t) {
            gf2::Vec col = gf2::make_vec(dim);
            bool nonzero = false;
            for (const auto& a : c.arrows) {
                if (static_cast<std::size_t>(a.from) != g) continue;
                if (t + a.u >= N) continue;
                gf2::flip(col, idx(a.to, t + a.u));
                nonzero = true;
            }
            if (nonzero && im.insert(col)) ++rank;
        }
    }
    return static_cast<int>(dim - 2 * rank);
}

GradedUComplex random_graded_complex(unsigned seed, int max_gens) {
    std::mt19937 rng(seed);
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    GradedUComplex c;
    int free_count = pick(0, 2);
    int budget = max_gens - free_count;
    int pairs = pick(0, budget / 2);
    for (int i = 0; i < free_count; ++i) c.gens.push_back({"g", "", pick(-4, 4)});
    for (int i = 0; i < pairs; ++i) {
        int p = pick(0, 3);
        int bottom = pick(-4, 4);
        int from = static_cast<int>(c.gens.size());
        c.gens.push_back({"g", "", bottom});
        c.gens.push_back({"g", "", bottom + p});
        c.arrows.push_back({from, from + 1, p});
    }
    for (std::size_t i = 0; i < c.gens.size(); ++i) c.gens[i].a = "g" + std::to_string(i);

    // Random U-homogeneous changes of basis: a := a + U^d b with
    // d = A(b) - A(a) >= 0; toggles keep the complex isomorphic.
    auto toggle = [&c](int f, int t, int u) {
        UArrow a{f, t, u};
        auto it = std::find(c.arrows.begin(), c.arrows.end(), a);
        if (it != c.arrows.end())
            c.arrows.erase(it);
        else
            c.arrows.push_back(a);
    };
    int gens = static_cast<int>(c.gens.size());
    for (int step = 0; step < 20 && gens >= 2; ++step) {
        int a = pick(0, gens - 1), b = pick(0, gens - 1);
        if (a == b) continue;
        int d = *c.gens[static_cast<std::size_t>(b)].alexander -
                *c.gens[static_cast<std::size_t>(a)].alexander;
        if (d < 0) continue;
        // A b -> a arrow (necessarily U^0) would turn the change of basis
        // into a self-arrow toggle; skip those steps.
        if (std::find(c.arrows.begin(), c.arrows.end(), UArrow{b, a, 0}) != c.arrows.end())
            continue;
        auto arrows = c.arrows;
        for (const auto& ar : arrows) {
            if (ar.from == b) toggle(a, ar.to, d + ar.u);
            if (ar.to == a) toggle(ar.from, b, ar.u + d);
        }
    }
    // Shuffle generator order.
    std::vector<int> perm(static_cast<std::size_t>(gens));
    for (int i = 0; i < gens; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    GradedUComplex out;
    out.gens.resize(c.gens.size());
    for (int i = 0; i < gens; ++i)
        out.gens[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            c.gens[static_cast<std::size_t>(i)];
    for (const auto& a : c.arrows)
        out.arrows.push_back({perm[static_cast<std::size_t>(a.from)],
                              perm[static_cast<std::size_t>(a.to)], a.u});
    std::sort(out.arrows.begin(), out.arrows.end());
    return out;
}

namespace {

std::vector<std::string> companion_set() { return model_names(); }

CriterionResult formula_pipeline_grid() {
    CriterionResult r{1, "formula vs pipeline, (m,n) in [1,4]^2, all companions", true, ""};
    auto t0 = std::chrono::steady_clock::now();
    int cases = 0;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const auto& name : companion_set()) {
                RunResult run = compute_run(m, n, model(name), false);
                ++cases;
                if (!run.agree) {
                    r.pass = false;
                    r.detail += "(" + std::to_string(m) + "," + std::to_string(n) + "," + name +
                                "): pipeline " + std::to_string(run.tau_pipeline) + " formula " +
                                std::to_string(run.tau_formula) + "; ";
                }
            }
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    std::ostringstream os;
    os << cases << " cases in " << sec << " s";
    if (!r.detail.empty()) os << "; " << r.detail;
    r.detail = os.str();
    return r;
}

CriterionResult pinned_values() {
    CriterionResult r{2, "tau(Q_{2,1}(T23)) = 2 and tau(Q_{m,n}(unknot)) = 0", true, ""};
    RunResult t = compute_run(2, 1, model("T23"), false);
    if (t.tau_pipeline != 2) {
        r.pass = false;
        r.detail += "tau(Q_{2,1}(T23)) = " + std::to_string(t.tau_pipeline) + "; ";
    }
    SimplifiedModel u = model("unknot");
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            RunResult run = compute_run(m, n, u, false);
            if (run.tau_pipeline != 0) {
                r.pass = false;
                r.detail += "tau(Q_{" + std::to_string(m) + "," + std::to_string(n) +
                            "}(unknot)) = " + std::to_string(run.tau_pipeline) + "; ";
            }
        }
    if (r.pass) r.detail = "exact";
    return r;
}

std::string describe(const AOp& op) {
    std::string s = op.in + "(";
    for (std::size_t i = 0; i < op.rhos.size(); ++i)
        s += (i ? "," : "") + to_string(op.rhos[i]);
    s += ")->U^" + std::to_string(op.u) + " " + op.out;
    return s;
}

CriterionResult fixture_reconciliation() {
    CriterionResult r{3, "CFA fixtures Q31/Q12 exact, Q23 containment", true, ""};
    auto check = [&r](const std::string& name, int m, int n, bool containment) {
        OpDiff diff = diff_ops(build_cfa(m, n), fixture_cfa(name));
        OpDiff allowed = documented_exceptions(name);
        auto same = [](std::vector<AOp> a, std::vector<AOp> b) {
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            return a == b;
        };
        bool ok = same(diff.missing, allowed.missing) &&
                  (containment || same(diff.extra, allowed.extra));
        if (!ok) {
            r.pass = false;
            r.detail += name + ": ";
            for (const auto& op : diff.missing) r.detail += "missing " + describe(op) + "; ";
            if (!containment)
                for (const auto& op : diff.extra) r.detail += "extra " + describe(op) + "; ";
        }
    };
    check("Q31", 3, 1, false);
    check("Q12", 1, 2, false);
    check("Q23partial", 2, 3, true);
    if (r.pass)
        r.detail = "multisets match up to the documented exception table (2 entries)";
    return r;
}

CriterionResult pairing_shadow() {
    CriterionResult r{4, "d_box^2 = 0, grading compatibility, free rank 1", true, ""};
    for (int m = 1; m <= 4 && r.pass; ++m)
        for (int n = 1; n <= 4 && r.pass; ++n) {
            AInftyModule A = change_of_basis(build_cfa(m, n), m, n);
            for (const auto& name : companion_set()) {
                TypeDStructure D = build_cfd(model(name));
                GradedUComplex T = assign_gradings(box_tensor(A, D), m, n, D);
                Diagnostics d = check_tensor_complex(T);
                if (!d.ok()) {
                    r.pass = false;
                    r.detail = "(" + std::to_string(m) + "," + std::to_string(n) + "," + name +
                               "): " + d.errors.front();
                    break;
                }
                Decomposition dec = reduce(T);
                if (dec.free.size() != 1) {
                    r.pass = false;
                    r.detail = "(" + std::to_string(m) + "," + std::to_string(n) + "," + name +
                               "): free rank " + std::to_string(dec.free.size());
                    break;
                }
            }
        }
    if (r.pass) r.detail = "all (m,n <= 4) x companions";
    return r;
}

CriterionResult epsilon_engine() {
    CriterionResult r{5, "epsilon engine: T23 and the section-5 fixtures", true, ""};
    if (tau_from_cfk(model("T23").complex) != 1) {
        r.pass = false;
        r.detail += "tau_from_cfk(T23) != 1; ";
    }
    if (epsilon_from_cfk(model("T23").complex) != 1) {
        r.pass = false;
        r.detail += "epsilon_from_cfk(T23) != 1; ";
    }
    const std::pair<int, int> cells[] = {{2, 1}, {3, 2}, {2, 2}};
    const std::pair<int, int> rep_tau_eps[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    const char* figs[] = {"fig25", "fig27", "fig29", "fig31"};
    for (int f = 0; f < 4; ++f)
        for (auto [m, n] : cells) {
            CfkComplex c = fixture(figs[f], m, n, 2);
            Diagnostics d = validate(c);
            if (!d.ok()) {
                r.pass = false;
                r.detail += std::string(figs[f]) + " invalid at (" + std::to_string(m) + "," +
                            std::to_string(n) + "); ";
                continue;
            }
            int cls = vertical_classify(c, fixture_distinguished_cycle(figs[f], m, n));
            int want = epsilon_formula({m, n}, rep_tau_eps[f].first, rep_tau_eps[f].second);
            if (cls != 1 || want != 1) {
                r.pass = false;
                r.detail += std::string(figs[f]) + "(" + std::to_string(m) + "," +
                            std::to_string(n) + ") -> " + std::to_string(cls) + "; ";
            }
        }
    if (r.pass) r.detail = "all fixtures classify +1, matching epsilon_formula";
    return r;
}

CriterionResult bridge_identities() {
    CriterionResult r{6, "bridge identities for 1 <= m,n <= 10", true, ""};
    if (!(fraction_to_schubert(ConwayTangle{{2, 1, 2}}) == SchubertForm{8, 3})) {
        r.pass = false;
        r.detail += "C(2,1,2) != b(8,3); ";
    }
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; n <= 10; ++n) {
            SchubertForm want = schubert_qmn(m, n);
            auto [rr, ss] = rs_params(m, n);
            if (!(bridge_from_rs(rr, ss) == want)) {
                r.pass = false;
                r.detail += "rs mismatch at (" + std::to_string(m) + "," + std::to_string(n) + "); ";
            }
            if (!(fraction_to_schubert(ConwayTangle{{2LL * n, 1, 2LL * m}}) == want)) {
                r.pass = false;
                r.detail += "tangle mismatch at (" + std::to_string(m) + "," + std::to_string(n) + "); ";
            }
            if (!isotopic(want, schubert_qmn(n, m))) {
                r.pass = false;
                r.detail += "symmetry fails at (" + std::to_string(m) + "," + std::to_string(n) + "); ";
            }
            if (want.p % 2 != 0) {
                r.pass = false;
                r.detail += "p odd at (" + std::to_string(m) + "," + std::to_string(n) + "); ";
            }
        }
    if (r.pass) r.detail = "exact";
    return r;
}

CriterionResult genus_checks() {
    CriterionResult r{7, "genus of Q_{m,n}(T23) equals m on the pinned cells", true, ""};
    const std::pair<int, int> cells[] = {{2, 1}, {3, 1}, {3, 2}, {2, 2}};
    for (auto [m, n] : cells) {
        PipelineArtifacts art;
        compute_run(m, n, model("T23"), false, &art);
        int g = genus_from_decomposition(art.decomposition);
        if (g != m) {
            r.pass = false;
            r.detail += "(" + std::to_string(m) + "," + std::to_string(n) + "): got " +
                        std::to_string(g) + "; ";
        }
    }
    if (r.pass) r.detail = "exact";
    return r;
}

CriterionResult homology_oracle() {
    CriterionResult r{8, "reduce vs F2[U]/U^N truncation oracle on random complexes", true, ""};
    int checked = 0;
    for (unsigned seed = 1; seed <= 120; ++seed) {
        GradedUComplex c = random_graded_complex(seed);
        Decomposition dec = reduce(c);
        for (int N = 1; N <= 6; ++N) {
            int expected = N * static_cast<int>(dec.free.size());
            for (const auto& t : dec.torsion) expected += 2 * std::min(t.order, N);
            int got = truncated_homology_dim(c, N);
            if (got != expected) {
                r.pass = false;
                r.detail += "seed " + std::to_string(seed) + " N=" + std::to_string(N) + ": dim " +
                            std::to_string(got) + " vs " + std::to_string(expected) + "; ";
            }
        }
        ++checked;
    }
    if (r.pass) r.detail = std::to_string(checked) + " complexes, N = 1..6";
    return r;
}

CriterionResult raw_invariance() {
    CriterionResult r{9, "raw CFA and simplified CFA give identical tau", true, ""};
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const auto& name : companion_set()) {
                RunResult a = compute_run(m, n, model(name), false);
                RunResult b = compute_run(m, n, model(name), true);
                if (a.tau_pipeline != b.tau_pipeline) {
                    r.pass = false;
                    r.detail += "(" + std::to_string(m) + "," + std::to_string(n) + "," + name +
                                "): " + std::to_string(a.tau_pipeline) + " vs " +
                                std::to_string(b.tau_pipeline) + "; ";
                }
            }
    if (r.pass) r.detail = "full grid";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    return {formula_pipeline_grid(), pinned_values(),  fixture_reconciliation(),
            pairing_shadow(),        epsilon_engine(), bridge_identities(),
            genus_checks(),          homology_oracle(), raw_invariance()};
}

}  // namespace qmn
