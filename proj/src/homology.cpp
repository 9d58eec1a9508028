#include "qmn/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace qmn {

namespace {

// Sparse arrow matrix with monomial entries, indexed both ways.  A toggle
// that would stack two distinct powers on one slot means the complex is not
// monomial; a would-be self-loop means d^2 != 0 upstream.
struct Matrix {
    std::map<std::pair<int, int>, int> entry;  // (from,to) -> power
    std::map<int, std::map<int, int>> rows;
    std::map<int, std::map<int, int>> cols;

    void toggle(int f, int t, int p) {
        if (f == t) throw Error("reduce: self-arrow produced; input is not a valid complex");
        auto key = std::make_pair(f, t);
        auto it = entry.find(key);
        if (it == entry.end()) {
            entry[key] = p;
            rows[f][t] = p;
            cols[t][f] = p;
        } else if (it->second == p) {
            entry.erase(it);
            rows[f].erase(t);
            cols[t].erase(f);
        } else {
            throw Error("reduce: polynomial matrix entry (U^" + std::to_string(it->second) +
                        " + U^" + std::to_string(p) + ") is unsupported");
        }
    }

    void erase(int f, int t) {
        entry.erase({f, t});
        rows[f].erase(t);
        cols[t].erase(f);
    }
};

}  // namespace

Decomposition reduce(const GradedUComplex& c) {
    Matrix mat;
    for (const auto& a : c.arrows) {
        if (a.u < 0) throw Error("reduce: negative U power");
        mat.toggle(a.from, a.to, a.u);
    }
    std::vector<char> alive(c.gens.size(), 1);

    Decomposition dec;
    while (!mat.entry.empty()) {
        // Minimal power, then lowest (from,to); minimality keeps every
        // basis-change exponent non-negative.
        int g = -1, h = -1, p = 0;
        for (const auto& [key, pw] : mat.entry) {
            if (g < 0 || pw < p || (pw == p && key < std::make_pair(g, h))) {
                g = key.first;
                h = key.second;
                p = pw;
            }
        }

        if (p == 0) {
            // Unit pivot: plain cancellation, corrections v -> U^{a+b} k for
            // v -> U^b h and g -> U^a k; arrows touching g or h drop.
            auto outs_g = mat.rows[g];
            auto ins_h = mat.cols[h];
            for (const auto& [v, b] : ins_h) {
                if (v == g) continue;
                for (const auto& [k, a] : outs_g) {
                    if (k == h) continue;
                    mat.toggle(v, k, a + b);
                }
            }
            for (const auto& [t, d] : mat.rows[g]) mat.cols[t].erase(g), mat.entry.erase({g, t});
            mat.rows[g].clear();
            for (const auto& [t, d] : mat.rows[h]) mat.cols[t].erase(h), mat.entry.erase({h, t});
            mat.rows[h].clear();
            for (const auto& [v, b] : mat.cols[g]) mat.rows[v].erase(g), mat.entry.erase({v, g});
            mat.cols[g].clear();
            for (const auto& [v, b] : mat.cols[h]) mat.rows[v].erase(h), mat.entry.erase({v, h});
            mat.cols[h].clear();
        } else {
            // Torsion pivot: clear g's row and h's column by U-homogeneous
            // basis changes.  All remaining powers are >= p, so exponents
            // stay non-negative and no arrow between the cleared pair's
            // neighbors can point back at them.
            while (mat.rows[g].size() > 1) {
                auto it = mat.rows[g].begin();
                if (it->first == h) ++it;
                int k = it->first, delta = it->second - p;  // h := h + U^delta k
                auto ins_h = mat.cols[h];
                for (const auto& [v, b] : ins_h) mat.toggle(v, k, b + delta);
                auto outs_k = mat.rows[k];
                for (const auto& [t, d] : outs_k) mat.toggle(h, t, delta + d);
            }
            while (mat.cols[h].size() > 1) {
                auto it = mat.cols[h].begin();
                if (it->first == g) ++it;
                int v = it->first, delta = it->second - p;  // v := v + U^delta g
                auto outs_g = mat.rows[g];
                for (const auto& [k, a] : outs_g) mat.toggle(v, k, delta + a);
                auto ins_v = mat.cols[v];
                for (const auto& [x, e] : ins_v) mat.toggle(x, g, e + delta);
            }
            if (!mat.rows[h].empty())
                throw Error("reduce: d^2 != 0 (outgoing arrows survive on cleared pair)");
            if (!mat.cols[g].empty())
                throw Error("reduce: d^2 != 0 (incoming arrows survive on cleared pair)");
            mat.erase(g, h);
            dec.torsion.push_back({c.gens[static_cast<std::size_t>(h)].alexander, p});
        }
        alive[static_cast<std::size_t>(g)] = 0;
        alive[static_cast<std::size_t>(h)] = 0;
    }
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (alive[i]) dec.free.push_back(c.gens[i].alexander);

    auto key = [](const std::optional<int>& a) { return a ? *a : INT32_MIN; };
    std::sort(dec.free.begin(), dec.free.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::sort(dec.torsion.begin(), dec.torsion.end(),
              [&](const TorsionSummand& a, const TorsionSummand& b) {
                  return std::make_pair(key(a.alexander), a.order) <
                         std::make_pair(key(b.alexander), b.order);
              });
    return dec;
}

int tau_from_decomposition(const Decomposition& d) {
    if (d.free.size() != 1)
        throw Error("tau_from_decomposition: free rank is " + std::to_string(d.free.size()) +
                    ", expected 1");
    if (!d.free[0])
        throw Error("tau_from_decomposition: free summand has no assigned grading");
    return -*d.free[0];
}

int top_nonzero_grading(const Decomposition& d) {
    bool seen = false;
    int top = 0;
    auto take = [&](const std::optional<int>& a) {
        if (!a) return;
        if (!seen || *a > top) top = *a;
        seen = true;
    };
    for (const auto& a : d.free) take(a);
    for (const auto& t : d.torsion) take(t.alexander);
    if (!seen) throw Error("top_nonzero_grading: empty decomposition");
    return top;
}

}  // namespace qmn
