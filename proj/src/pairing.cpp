#include "qmn/pairing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qmn {

int GradedUComplex::index_of(const std::string& a, const std::string& d) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].a == a && gens[i].d == d) return static_cast<int>(i);
    return -1;
}

GradedUComplex box_tensor(const AInftyModule& A, const TypeDStructure& D) {
    Diagnostics ca = check_cfa(A);
    if (!ca.ok()) throw Error("box_tensor: bad A-infinity module: " + ca.errors.front());
    Diagnostics cd = check_idempotents(D);
    if (!cd.ok()) throw Error("box_tensor: bad type D structure: " + cd.errors.front());

    GradedUComplex c;
    std::map<std::pair<std::string, std::string>, int> index;
    for (const auto& ag : A.gens)
        for (const auto& dg : D.gens)
            if (ag.iota == dg.iota) {
                index[{ag.id, dg.id}] = static_cast<int>(c.gens.size());
                c.gens.push_back({ag.id, dg.id, {}});
            }

    std::set<UArrow> arrows;
    auto toggle = [&arrows](int from, int to, int u) {
        UArrow a{from, to, u};
        auto it = arrows.find(a);
        if (it == arrows.end())
            arrows.insert(a);
        else
            arrows.erase(it);
    };
    for (const auto& op : A.ops) {
        int iota_in = A.iota_of(op.in);
        for (const auto& dg : D.gens) {
            if (dg.iota != iota_in) continue;
            std::vector<std::string> ends;
            if (op.rhos.empty())
                ends.push_back(dg.id);
            else
                ends = paths_with_labels(D, dg.id, op.rhos);
            for (const auto& e : ends)
                toggle(index.at({op.in, dg.id}), index.at({op.out, e}), op.u);
        }
    }
    c.arrows.assign(arrows.begin(), arrows.end());
    return c;
}

GradedUComplex assign_gradings(const GradedUComplex& c, int m, int n, const TypeDStructure& D) {
    GradedUComplex g = c;
    std::map<std::string, int> dk;  // Alexander grading of iota_0 CFD generators
    for (const auto& dg : D.gens)
        if (dg.iota == 0 && dg.alexander) dk[dg.id] = *dg.alexander;

    std::vector<std::optional<int>> grading(g.gens.size());
    std::deque<int> queue;
    for (std::size_t i = 0; i < g.gens.size(); ++i) {
        const auto& tg = g.gens[i];
        if (tg.a.size() < 2 || tg.a[0] != 'x') continue;
        auto it = dk.find(tg.d);
        if (it == dk.end()) continue;
        int r = std::stoi(tg.a.substr(1));
        int anchor = -(m - n) * it->second - std::abs(r - (m + 1));
        grading[i] = anchor;
        queue.push_back(static_cast<int>(i));
    }

    std::vector<std::vector<std::pair<int, int>>> nbr(g.gens.size());  // (other, delta)
    for (const auto& a : g.arrows) {
        nbr[static_cast<std::size_t>(a.from)].push_back({a.to, +a.u});
        nbr[static_cast<std::size_t>(a.to)].push_back({a.from, -a.u});
    }
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (auto [j, delta] : nbr[static_cast<std::size_t>(i)]) {
            int want = *grading[static_cast<std::size_t>(i)] + delta;
            auto& gj = grading[static_cast<std::size_t>(j)];
            if (!gj) {
                gj = want;
                queue.push_back(j);
            } else if (*gj != want) {
                throw Error("assign_gradings: inconsistent propagation at " +
                            g.gens[static_cast<std::size_t>(j)].id() + " (" +
                            std::to_string(*gj) + " vs " + std::to_string(want) + " from " +
                            g.gens[static_cast<std::size_t>(i)].id() + ")");
            }
        }
    }
    for (std::size_t i = 0; i < g.gens.size(); ++i) g.gens[i].alexander = grading[i];
    return g;
}

Diagnostics check_tensor_complex(const GradedUComplex& c) {
    Diagnostics d;
    for (const auto& a : c.arrows) {
        const auto& f = c.gens[static_cast<std::size_t>(a.from)];
        const auto& t = c.gens[static_cast<std::size_t>(a.to)];
        if (a.u < 0) d.errors.push_back("negative U power on " + f.id() + " -> " + t.id());
        if (f.alexander && t.alexander && *t.alexander != *f.alexander + a.u)
            d.errors.push_back("grading mismatch on " + f.id() + " -> " + t.id());
    }
    // d^2 = 0 over F2[U]: two-step paths cancel mod 2 per U power.
    std::vector<std::vector<const UArrow*>> out(c.gens.size());
    for (const auto& a : c.arrows) out[static_cast<std::size_t>(a.from)].push_back(&a);
    std::map<std::tuple<int, int, int>, int> square;
    for (const auto& a : c.arrows)
        for (const UArrow* b : out[static_cast<std::size_t>(a.to)])
            square[{a.from, b->to, a.u + b->u}] ^= 1;
    for (const auto& [key, parity] : square)
        if (parity)
            d.errors.push_back("d^2 != 0: " + c.gens[static_cast<std::size_t>(std::get<0>(key))].id() +
                               " => " + c.gens[static_cast<std::size_t>(std::get<1>(key))].id() +
                               " with U^" + std::to_string(std::get<2>(key)));
    return d;
}

}  // namespace qmn
