#include "qmn/cfk.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qmn/gf2.hpp"

namespace qmn {

int CfkComplex::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].id == id) return static_cast<int>(i);
    return -1;
}

int CfkComplex::grading_of(const std::string& id) const {
    int i = index_of(id);
    if (i < 0) throw Error("unknown generator '" + id + "'");
    return generators[static_cast<std::size_t>(i)].alexander;
}

Diagnostics validate(const CfkComplex& c) {
    Diagnostics d;
    std::set<std::string> ids;
    for (const auto& g : c.generators)
        if (!ids.insert(g.id).second) d.errors.push_back("duplicate generator id '" + g.id + "'");
    for (const auto& a : c.arrows) {
        if (!ids.count(a.from) || !ids.count(a.to)) {
            d.errors.push_back("arrow " + a.from + "->" + a.to + " references unknown generator");
            continue;
        }
        if (a.u < 0 || a.v < 0) d.errors.push_back("arrow " + a.from + "->" + a.to + " has negative power");
        if (a.u > 0 && a.v > 0)
            d.errors.push_back("UV term on arrow " + a.from + "->" + a.to);
        if (c.reduced && a.u == 0 && a.v == 0)
            d.errors.push_back("unreduced arrow " + a.from + "->" + a.to + " in complex flagged reduced");
        int expect = c.grading_of(a.from) + a.u - a.v;
        if (c.grading_of(a.to) != expect)
            d.errors.push_back("grading mismatch on arrow " + a.from + "->" + a.to);
    }
    // d^2 = 0 over R: two-step compositions cancel mod 2 once UV terms drop.
    std::map<std::string, std::vector<const CfkArrow*>> out;
    for (const auto& a : c.arrows) out[a.from].push_back(&a);
    std::map<std::tuple<std::string, std::string, int, int>, int> square;
    for (const auto& a : c.arrows) {
        auto it = out.find(a.to);
        if (it == out.end()) continue;
        for (const CfkArrow* b : it->second) {
            int u = a.u + b->u, v = a.v + b->v;
            if (u > 0 && v > 0) continue;  // UV = 0
            square[{a.from, b->to, u, v}] ^= 1;
        }
    }
    for (const auto& [key, parity] : square)
        if (parity)
            d.errors.push_back("d^2 != 0: " + std::get<0>(key) + " => " + std::get<1>(key));
    return d;
}

CfkComplex mirror(const CfkComplex& c) {
    CfkComplex m = c;
    m.arrows.clear();
    for (const auto& a : c.arrows) m.arrows.push_back({a.to, a.from, a.v, a.u});
    return m;
}

namespace {

// Differential over F2 after specialization: keep the arrows selected by
// `keep`, coefficients to 1.
struct F2Complex {
    std::size_t dim;
    std::vector<gf2::Vec> diff;  // column per generator
};

template <typename Keep>
F2Complex specialize(const CfkComplex& c, Keep keep) {
    F2Complex f{c.generators.size(), {}};
    f.diff.assign(f.dim, gf2::make_vec(f.dim));
    for (const auto& a : c.arrows) {
        if (!keep(a)) continue;
        int i = c.index_of(a.from);
        int j = c.index_of(a.to);
        if (i < 0 || j < 0)
            throw Error("arrow references unknown generator " + a.from + "->" + a.to);
        gf2::flip(f.diff[static_cast<std::size_t>(i)], static_cast<std::size_t>(j));
    }
    return f;
}

F2Complex vertical_complex(const CfkComplex& c) {
    return specialize(c, [](const CfkArrow& a) { return a.u == 0; });
}
F2Complex horizontal_complex(const CfkComplex& c) {
    return specialize(c, [](const CfkArrow& a) { return a.v == 0; });
}

gf2::Span image(const F2Complex& f) {
    gf2::Span im(f.dim);
    for (const auto& col : f.diff) im.insert(col);
    return im;
}

// Kernel basis in generator order.
std::vector<gf2::Vec> kernel(const F2Complex& f) {
    gf2::Span seen(f.dim);
    std::vector<gf2::Vec> pivot_combo;
    std::vector<gf2::Vec> pivot_col;
    std::vector<std::size_t> pivot_at;
    std::vector<gf2::Vec> ker;
    for (std::size_t g = 0; g < f.dim; ++g) {
        gf2::Vec col = f.diff[g];
        gf2::Vec combo = gf2::make_vec(f.dim);
        gf2::flip(combo, g);
        for (std::size_t r = 0; r < pivot_at.size(); ++r) {
            if (gf2::get(col, pivot_at[r])) {
                gf2::add(col, pivot_col[r]);
                gf2::add(combo, pivot_combo[r]);
            }
        }
        if (gf2::is_zero(col)) {
            ker.push_back(combo);
        } else {
            std::size_t p = 0;
            while (!gf2::get(col, p)) ++p;
            pivot_at.push_back(p);
            pivot_col.push_back(col);
            pivot_combo.push_back(combo);
        }
    }
    return ker;
}

gf2::Vec cycle_to_vec(const CfkComplex& c, const Cycle& e) {
    gf2::Vec v = gf2::make_vec(c.generators.size());
    for (const auto& id : e) {
        int i = c.index_of(id);
        if (i < 0) throw Error("cycle references unknown generator '" + id + "'");
        gf2::flip(v, static_cast<std::size_t>(i));
    }
    return v;
}

Cycle vec_to_cycle(const CfkComplex& c, const gf2::Vec& v) {
    Cycle e;
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        if (gf2::get(v, i)) e.push_back(c.generators[i].id);
    std::sort(e.begin(), e.end());
    return e;
}

bool homogeneous(const CfkComplex& c, const gf2::Vec& v, int* grading) {
    bool first = true;
    int a = 0;
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        if (!gf2::get(v, i)) continue;
        if (first) {
            a = c.generators[i].alexander;
            first = false;
        } else if (c.generators[i].alexander != a) {
            return false;
        }
    }
    if (first) return false;  // zero vector
    if (grading) *grading = a;
    return true;
}

// Rank-one homology class representative, reduced against the image span.
gf2::Vec distinguished_class(const F2Complex& f, const char* what) {
    gf2::Span im = image(f);
    auto ker = kernel(f);
    std::size_t rank = ker.size() - im.rank();
    if (rank != 1)
        throw Error(std::string(what) + " homology has rank " + std::to_string(rank) +
                    ", expected 1");
    for (const auto& k : ker) {
        gf2::Vec r = im.residue(k);
        if (!gf2::is_zero(r)) return r;
    }
    throw Error(std::string(what) + " homology: no surviving class found");
}

// Generators in a grading window, as a span basis.
gf2::Span window_span(const CfkComplex& c, int bound, bool at_most) {
    gf2::Span s(c.generators.size());
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        int a = c.generators[i].alexander;
        if (at_most ? a <= bound : a >= bound) {
            gf2::Vec v = gf2::make_vec(c.generators.size());
            gf2::flip(v, i);
            s.insert(v);
        }
    }
    return s;
}

std::vector<int> distinct_gradings(const CfkComplex& c) {
    std::vector<int> g;
    for (const auto& gen : c.generators) g.push_back(gen.alexander);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

// The vertical differential drops the Alexander grading, so grading windows
// A <= s are subcomplexes; the class level is the least s at which the class
// already lives.  That level is A(xi_0) and is invariant under filtered
// changes of basis.
int vertical_class_level(const CfkComplex& c, const gf2::Vec& rep, const gf2::Span& boundaries) {
    for (int s : distinct_gradings(c))
        if (gf2::sum(boundaries, window_span(c, s, /*at_most=*/true)).contains(rep)) return s;
    throw Error("vertical class level not found");
}

}  // namespace

int tau_from_cfk(const CfkComplex& c) {
    F2Complex fv = vertical_complex(c);
    gf2::Vec rep = distinguished_class(fv, "vertical");
    return vertical_class_level(c, rep, image(fv));
}

// The horizontal differential raises the grading; windows A >= s are
// subcomplexes.  The distinguished representative is the one supported in
// the highest such window, canonicalized against the boundaries inside it.
Cycle horizontal_distinguished(const CfkComplex& c) {
    F2Complex fh = horizontal_complex(c);
    gf2::Vec rep = distinguished_class(fh, "horizontal");
    gf2::Span bh = image(fh);
    auto grades = distinct_gradings(c);
    for (auto it = grades.rbegin(); it != grades.rend(); ++it) {
        gf2::Span window = window_span(c, *it, /*at_most=*/false);
        std::vector<gf2::Vec> gens = bh.rows;
        std::size_t nb = gens.size();
        gens.insert(gens.end(), window.rows.begin(), window.rows.end());
        auto mask = gf2::solve(gens, c.generators.size(), rep);
        if (!mask) continue;
        gf2::Vec canonical = gf2::make_vec(c.generators.size());
        for (std::size_t i = nb; i < gens.size(); ++i)
            if ((*mask)[i]) gf2::add(canonical, gens[i]);
        // Reduce against boundaries living inside the window.
        gf2::Span inner(c.generators.size());
        for (const auto& v : gf2::intersection(bh, window)) inner.insert(v);
        canonical = inner.residue(canonical);
        if (gf2::is_zero(canonical))
            throw Error("horizontal distinguished representative vanished");
        return vec_to_cycle(c, canonical);
    }
    throw Error("horizontal class level not found");
}

int vertical_classify(const CfkComplex& c, const Cycle& e) {
    gf2::Vec v = cycle_to_vec(c, e);
    if (gf2::is_zero(v)) throw Error("vertical_classify: zero cycle");
    F2Complex fv = vertical_complex(c);
    F2Complex fh = horizontal_complex(c);
    gf2::Span bv = image(fv);
    gf2::Span zv(fv.dim);
    for (const auto& k : kernel(fv)) zv.insert(k);

    // Representatives may shift by horizontal boundaries supported at or
    // above the cycle's filtration level; lower shifts are not reachable by
    // filtered changes of basis.
    int level = 0;
    bool first = true;
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        if (gf2::get(v, i)) {
            int a = c.generators[i].alexander;
            level = first ? a : std::min(level, a);
            first = false;
        }
    gf2::Span shifts(c.generators.size());
    for (const auto& w :
         gf2::intersection(image(fh), window_span(c, level, /*at_most=*/false)))
        shifts.insert(w);

    if (gf2::sum(bv, shifts).contains(v)) return 1;
    if (gf2::sum(zv, shifts).contains(v)) return 0;
    // Every admissible representative has an outgoing vertical differential;
    // for a non-homogeneous input that verdict is not grading-well-defined.
    if (!homogeneous(c, v, nullptr))
        throw Error("vertical_classify: cycle not homogeneous in Alexander grading");
    return -1;
}

namespace {

// Multiset toggle with UV-dropping; arrows carrying both powers are zero.
void toggle_arrow(CfkComplex& c, const CfkArrow& a) {
    if (a.u > 0 && a.v > 0) return;
    auto it = std::find_if(c.arrows.begin(), c.arrows.end(), [&a](const CfkArrow& b) {
        return a.from == b.from && a.to == b.to && a.u == b.u && a.v == b.v;
    });
    if (it != c.arrows.end())
        c.arrows.erase(it);
    else
        c.arrows.push_back(a);
}

// g := g + U^du V^dv h.  Names are taken by value: the toggles reallocate
// the arrow vector the callers' references point into.
void basis_change(CfkComplex& c, std::string g, std::string h, int du, int dv) {

    auto snapshot = c.arrows;
    for (const auto& a : snapshot) {
        if (a.from == h) toggle_arrow(c, {g, a.to, a.u + du, a.v + dv});
        if (a.to == g) toggle_arrow(c, {a.from, h, a.u + du, a.v + dv});
    }
}

// One clearing step on the U-graph (vertical = false) or V-graph (true).
// Returns false when that graph is already a disjoint matching.
bool diagonalize_step(CfkComplex& c, bool vertical) {
    auto weight = [vertical](const CfkArrow& a) { return vertical ? a.v : a.u; };
    auto in_graph = [vertical](const CfkArrow& a) {
        return vertical ? (a.u == 0 && a.v > 0) : (a.v == 0 && a.u > 0);
    };
    std::map<std::string, int> out_deg, in_deg;
    for (const auto& a : c.arrows)
        if (in_graph(a)) {
            ++out_deg[a.from];
            ++in_deg[a.to];
        }
    const CfkArrow* pivot = nullptr;
    for (const auto& a : c.arrows) {
        if (!in_graph(a)) continue;
        if (out_deg[a.from] < 2 && in_deg[a.to] < 2) continue;
        if (!pivot || weight(a) < weight(*pivot) ||
            (weight(a) == weight(*pivot) &&
             std::tie(a.from, a.to) < std::tie(pivot->from, pivot->to)))
            pivot = &a;
    }
    if (!pivot) return false;
    CfkArrow p = *pivot;
    int k = weight(p);
    // Prefer clearing a parallel arrow into the pivot target, else one out
    // of the pivot source.
    for (const auto& a : c.arrows) {
        if (!in_graph(a) || weight(a) < k) continue;
        if (a.to == p.to && a.from != p.from) {
            int d = weight(a) - k;
            basis_change(c, a.from, p.from, vertical ? 0 : d, vertical ? d : 0);
            return true;
        }
    }
    for (const auto& a : c.arrows) {
        if (!in_graph(a) || weight(a) < k) continue;
        if (a.from == p.from && a.to != p.to) {
            int d = weight(a) - k;
            basis_change(c, p.to, a.to, vertical ? 0 : d, vertical ? d : 0);
            return true;
        }
    }
    throw Error("simplify_basis: pivot with no admissible clearing (outside supported class)");
}

bool is_matching(const CfkComplex& c, bool vertical) {
    std::map<std::string, int> deg;
    for (const auto& a : c.arrows) {
        bool in = vertical ? (a.u == 0 && a.v > 0) : (a.v == 0 && a.u > 0);
        if (!in) continue;
        if (++deg[a.from] > 1 || ++deg[a.to] > 1) return false;
    }
    return true;
}

}  // namespace

CfkComplex simplify_basis(const CfkComplex& c) {
    for (const auto& a : c.arrows)
        if (a.u == 0 && a.v == 0)
            throw Error("simplify_basis: complex is not reduced");
    CfkComplex s = c;
    // U- and V-passes may disturb each other through weight-zero clearings;
    // alternate until both graphs are matchings.
    for (int round = 0; round < 64; ++round) {
        int steps = 0;
        while (diagonalize_step(s, false))
            if (++steps > 4096) throw Error("simplify_basis: U-pass does not terminate");
        steps = 0;
        while (diagonalize_step(s, true))
            if (++steps > 4096) throw Error("simplify_basis: V-pass does not terminate");
        if (is_matching(s, false) && is_matching(s, true)) return s;
    }
    throw Error("simplify_basis: passes do not stabilize (outside supported class)");
}

int epsilon_from_cfk(const CfkComplex& c) {
    CfkComplex s = simplify_basis(c);
    (void)distinguished_class(vertical_complex(s), "vertical");  // rank check
    return vertical_classify(s, horizontal_distinguished(s));
}

// ---------------------------------------------------------------------------
// Section-5 fixtures.

namespace {

std::string xid(int i) { return "x" + std::to_string(i); }
std::string yid(int i) { return "y" + std::to_string(i); }

void require_mn(int m, int n) {
    if (n < 1 || m < n) throw Error("fixture requires m >= n >= 1");
}

CfkComplex fig_zigzag(int m, int n, int head_power) {
    require_mn(m, n);
    CfkComplex c;
    c.reduced = head_power > 0;
    std::vector<int> ax(2 * n + 2, 0);
    for (int i = 0; i < n; ++i) {
        ax[2 * i + 2] = ax[2 * i + 1] + (i == 0 ? head_power : m);
        ax[2 * i + 3] = ax[2 * i + 2] - n;
    }
    for (int i = 1; i <= 2 * n + 1; ++i) c.generators.push_back({xid(i), ax[i], {}});
    for (int i = 0; i <= n; ++i)
        c.generators.push_back({yid(2 * i + 1), ax[2 * i + 1] + 1, {}});
    for (int i = 0; i < n; ++i)
        c.arrows.push_back({xid(2 * i + 1), xid(2 * i + 2), i == 0 ? head_power : m, 0});
    for (int i = 1; i <= n; ++i) c.arrows.push_back({xid(2 * i + 1), xid(2 * i), n, 0});
    for (int i = 0; i <= n; ++i) c.arrows.push_back({yid(2 * i + 1), xid(2 * i + 1), 0, 1});
    return c;
}

}  // namespace

CfkComplex fixture_fig25(int m, int n) { return fig_zigzag(m, n, m); }

CfkComplex fixture_fig27(int m, int n) {
    // The head arrow carries U^{m-1}; at m = 1 it degenerates and the drawn
    // subcomplex stops being a chain complex.
    if (m < 2) throw Error("fig27 requires m >= 2");
    return fig_zigzag(m, n, m - 1);
}

CfkComplex fixture_fig29(int m, int n, int k) {
    require_mn(m, n);
    if (k < 1) throw Error("fig29 requires k >= 1");
    CfkComplex c;
    c.reduced = true;
    std::vector<int> ax(2 * n + 2, 0);
    for (int j = 1; j <= n; ++j) {
        ax[2 * j] = ax[2 * j - 1] - n;
        ax[2 * j + 1] = ax[2 * j] + m;
    }
    for (int i = 1; i <= 2 * n + 1; ++i) c.generators.push_back({xid(i), ax[i], {}});
    std::vector<int> ay(2 * k + 2, 0);
    ay[1] = ax[2 * n + 1] + n;
    for (int j = 1; j <= k; ++j) {
        ay[2 * j] = ay[2 * j - 1] + (m - n) - (n - 1);
        ay[2 * j + 1] = ay[2 * j] + n;
    }
    for (int i = 1; i <= 2 * k + 1; ++i) c.generators.push_back({yid(i), ay[i], {}});
    for (int j = 1; j <= n; ++j) {
        c.arrows.push_back({xid(2 * j), xid(2 * j - 1), n, 0});
        c.arrows.push_back({xid(2 * j), xid(2 * j + 1), m, 0});
    }
    c.arrows.push_back({yid(1), xid(2 * n + 1), 0, n});
    for (int j = 1; j <= k; ++j) {
        c.arrows.push_back({yid(2 * j + 1), yid(2 * j), 0, n});
        // U^{m-n} V^{n-1} vanishes in R when both exponents are positive.
        int u = m - n, v = n - 1;
        if (u == 0 || v == 0) c.arrows.push_back({yid(2 * j - 1), yid(2 * j), u, v});
        if (u == 0 && v == 0) c.reduced = false;
    }
    return c;
}

CfkComplex fixture_fig31(int m, int n) {
    require_mn(m, n);
    CfkComplex c;
    c.reduced = true;
    std::vector<int> ax(2 * n + 2, 0);
    for (int j = 1; j <= n; ++j) {
        ax[2 * j] = ax[2 * j - 1] - n;
        ax[2 * j + 1] = ax[2 * j] + m;
    }
    for (int i = 1; i <= 2 * n + 1; ++i) c.generators.push_back({xid(i), ax[i], {}});
    c.generators.push_back({yid(1), ax[2 * n - 1] + 1, {}});
    for (int j = 1; j <= n; ++j) {
        c.arrows.push_back({xid(2 * j), xid(2 * j - 1), n, 0});
        c.arrows.push_back({xid(2 * j), xid(2 * j + 1), m, 0});
    }
    c.arrows.push_back({yid(1), xid(2 * n - 1), 0, 1});
    return c;
}

CfkComplex fixture(const std::string& name, int m, int n, int k) {
    if (name == "fig25") return fixture_fig25(m, n);
    if (name == "fig27") return fixture_fig27(m, n);
    if (name == "fig29") return fixture_fig29(m, n, k);
    if (name == "fig31") return fixture_fig31(m, n);
    throw Error("unknown fixture '" + name + "'");
}

Cycle fixture_distinguished_cycle(const std::string& name, int m, int n) {
    require_mn(m, n);
    Cycle e;
    if (name == "fig25" || name == "fig27") {
        for (int i = 0; i <= n; ++i) e.push_back(xid(2 * i + 1));
    } else if (name == "fig29") {
        e.push_back(xid(2 * n + 1));
    } else if (name == "fig31") {
        e.push_back(xid(2 * n - 1));
    } else {
        throw Error("unknown fixture '" + name + "'");
    }
    std::sort(e.begin(), e.end());
    return e;
}

// ---------------------------------------------------------------------------
// Companion model library.

namespace {

SimplifiedModel unknot_model() {
    SimplifiedModel m;
    m.name = "unknot";
    m.complex.reduced = true;
    m.complex.generators.push_back({"o", 0, 0});
    m.xi0 = m.eta0 = "o";
    m.tau = 0;
    m.epsilon = 0;
    return m;
}

std::string sid(int i) { return "s" + std::to_string(i); }

// Staircase of T(2, 2t+1): 2t+1 generators, d s_{2i+1} = U s_{2i} + V s_{2i+2}.
SimplifiedModel positive_staircase(int t, const std::string& name) {
    SimplifiedModel m;
    m.name = name;
    m.complex.reduced = true;
    for (int i = 0; i <= 2 * t; ++i) m.complex.generators.push_back({sid(i), t - i, {}});
    for (int i = 0; i < t; ++i) {
        m.complex.arrows.push_back({sid(2 * i + 1), sid(2 * i), 1, 0});
        m.complex.arrows.push_back({sid(2 * i + 1), sid(2 * i + 2), 0, 1});
        m.vertical.push_back({sid(2 * i + 1), sid(2 * i + 2), 1});
        m.horizontal.push_back({sid(2 * i + 1), sid(2 * i), 1});
    }
    m.xi0 = sid(0);
    m.eta0 = sid(2 * t);
    m.tau = t;
    m.epsilon = 1;
    return m;
}

SimplifiedModel t23_model() {
    // Generators (a, b, c) with d a = U b + V c.
    SimplifiedModel m;
    m.name = "T23";
    m.complex.reduced = true;
    m.complex.generators = {{"a", 0, -1}, {"b", 1, 0}, {"c", -1, -2}};
    m.complex.arrows = {{"a", "b", 1, 0}, {"a", "c", 0, 1}};
    m.vertical = {{"a", "c", 1}};
    m.horizontal = {{"a", "b", 1}};
    m.xi0 = "b";
    m.eta0 = "c";
    m.tau = 1;
    m.epsilon = 1;
    return m;
}

SimplifiedModel figure8_model() {
    SimplifiedModel m;
    m.name = "figure8";
    m.complex.reduced = true;
    m.complex.generators = {{"e", 0, 0}, {"p", 0, {}}, {"q", 1, {}}, {"r", -1, {}}, {"s", 0, {}}};
    m.complex.arrows = {{"p", "q", 1, 0}, {"p", "r", 0, 1}, {"q", "s", 0, 1}, {"r", "s", 1, 0}};
    m.vertical = {{"p", "r", 1}, {"q", "s", 1}};
    m.horizontal = {{"p", "q", 1}, {"r", "s", 1}};
    m.xi0 = m.eta0 = "e";
    m.tau = 0;
    m.epsilon = 0;
    return m;
}

// tau = 0, epsilon = -1: square zig-zag p -U-> q -V-> s <-U- r <-V- u.
SimplifiedModel synth_0_m1() {
    SimplifiedModel m;
    m.name = "synth_tau0_epsm1";
    m.complex.reduced = true;
    m.complex.generators = {{"u", 0, {}}, {"p", 0, {}}, {"q", 1, {}}, {"r", -1, {}}, {"s", 0, {}}};
    m.complex.arrows = {{"u", "r", 0, 1}, {"q", "s", 0, 1}, {"p", "q", 1, 0}, {"r", "s", 1, 0}};
    m.vertical = {{"u", "r", 1}, {"q", "s", 1}};
    m.horizontal = {{"p", "q", 1}, {"r", "s", 1}};
    m.xi0 = "p";
    m.eta0 = "u";
    m.tau = 0;
    m.epsilon = -1;
    return m;
}

// tau = t > 0, epsilon = -1: the horizontally distinguished element carries
// an outgoing vertical arrow.  No geometric realizability is claimed.
SimplifiedModel synth_pos_m1(int t, const std::string& name) {
    SimplifiedModel m;
    m.name = name;
    m.complex.reduced = true;
    m.complex.generators = {{"A", t, {}},
                            {"B", -t, {}},
                            {"C", -t - 1, {}},
                            {"D", t + 2, {}},
                            {"E", t + 1, {}}};
    m.complex.arrows = {
        {"A", "E", 1, 0}, {"B", "C", 0, 1}, {"D", "E", 0, 1}, {"C", "D", 2 * t + 3, 0}};
    m.vertical = {{"B", "C", 1}, {"D", "E", 1}};
    m.horizontal = {{"A", "E", 1}, {"C", "D", 2 * t + 3}};
    m.xi0 = "A";
    m.eta0 = "B";
    m.tau = t;
    m.epsilon = -1;
    return m;
}

SimplifiedModel mirror_model(const SimplifiedModel& src, const std::string& name) {
    SimplifiedModel m;
    m.name = name;
    m.complex = mirror(src.complex);
    for (const auto& h : src.horizontal) m.vertical.push_back({h.to, h.from, h.length});
    for (const auto& v : src.vertical) m.horizontal.push_back({v.to, v.from, v.length});
    m.xi0 = src.eta0;
    m.eta0 = src.xi0;
    m.tau = -src.tau;
    m.epsilon = -src.epsilon;
    return m;
}

}  // namespace

SimplifiedModel model(const std::string& name) {
    if (name == "unknot") return unknot_model();
    if (name == "T23") return t23_model();
    if (name == "mT23") return mirror_model(t23_model(), "mT23");
    if (name == "figure8") return figure8_model();
    if (name == "T25") return positive_staircase(2, "T25");
    if (name == "mT25") return mirror_model(positive_staircase(2, "T25"), "mT25");
    if (name == "T27") return positive_staircase(3, "T27");
    if (name == "mT27") return mirror_model(positive_staircase(3, "T27"), "mT27");
    if (name == "synth_tau0_epsm1") return synth_0_m1();
    if (name == "synth_tau0_eps1") return mirror_model(synth_0_m1(), "synth_tau0_eps1");
    if (name == "synth_tau1_epsm1") return synth_pos_m1(1, "synth_tau1_epsm1");
    if (name == "synth_tau2_epsm1") return synth_pos_m1(2, "synth_tau2_epsm1");
    if (name == "synth_taum1_eps1")
        return mirror_model(synth_pos_m1(1, "synth_tau1_epsm1"), "synth_taum1_eps1");
    if (name == "synth_taum2_eps1")
        return mirror_model(synth_pos_m1(2, "synth_tau2_epsm1"), "synth_taum2_eps1");
    throw Error("unknown companion model '" + name + "'");
}

std::vector<std::string> model_names() {
    return {"unknot", "T23",  "mT23", "figure8", "T25", "mT25", "T27", "mT27",
            "synth_tau0_eps1", "synth_tau0_epsm1", "synth_tau1_epsm1",
            "synth_tau2_epsm1", "synth_taum1_eps1", "synth_taum2_eps1"};
}

Diagnostics check_model(const SimplifiedModel& m) {
    Diagnostics d = validate(m.complex);
    auto fail = [&d](const std::string& s) { d.errors.push_back(s); };

    std::size_t n = m.vertical.size();
    if (m.horizontal.size() != n) fail("vertical/horizontal arrow counts differ");
    if (m.complex.generators.size() != 2 * n + 1) fail("generator count is not 2n+1");

    std::set<std::string> seen;
    seen.insert(m.xi0);
    for (const auto& a : m.vertical) {
        if (!seen.insert(a.from).second || !seen.insert(a.to).second)
            fail("xi basis is not a permutation of the generators");
    }
    std::set<std::string> seen_h;
    seen_h.insert(m.eta0);
    for (const auto& a : m.horizontal) {
        if (!seen_h.insert(a.from).second || !seen_h.insert(a.to).second)
            fail("eta basis is not a permutation of the generators");
    }
    auto has_arrow = [&m](const std::string& f, const std::string& t, int u, int v) {
        for (const auto& a : m.complex.arrows)
            if (a.from == f && a.to == t && a.u == u && a.v == v) return true;
        return false;
    };
    for (const auto& a : m.vertical)
        if (!has_arrow(a.from, a.to, 0, a.length)) fail("missing vertical arrow " + a.from);
    for (const auto& a : m.horizontal)
        if (!has_arrow(a.from, a.to, a.length, 0)) fail("missing horizontal arrow " + a.from);

    if (!d.ok()) return d;
    try {
        if (tau_from_cfk(m.complex) != m.tau) fail("tau_from_cfk disagrees with stored tau");
        if (epsilon_from_cfk(m.complex) != m.epsilon)
            fail("epsilon_from_cfk disagrees with stored epsilon");
        if (m.complex.grading_of(m.xi0) != m.tau) fail("A(xi0) != tau");
    } catch (const Error& e) {
        fail(e.what());
    }
    return d;
}

}  // namespace qmn
