#include "qmn/cfd.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qmn {

int TypeDStructure::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].id == id) return static_cast<int>(i);
    return -1;
}

TypeDStructure build_cfd(const SimplifiedModel& model) {
    Diagnostics ok = check_model(model);
    if (!ok.ok()) throw Error("build_cfd: model '" + model.name + "': " + ok.errors.front());

    TypeDStructure d;
    // xi-indexing: xi0 first, then each vertical arrow contributes
    // (xi_{2j-1}, xi_{2j}).  Deterministic ids "xi0".."xi2n".
    std::map<std::string, std::string> xi;  // model id -> cfd id
    auto add_iota0 = [&](const std::string& model_id, int k) {
        std::string id = "xi" + std::to_string(k);
        xi[model_id] = id;
        d.gens.push_back({id, 0, model.complex.grading_of(model_id)});
    };
    add_iota0(model.xi0, 0);
    for (std::size_t j = 0; j < model.vertical.size(); ++j) {
        add_iota0(model.vertical[j].from, static_cast<int>(2 * j + 1));
        add_iota0(model.vertical[j].to, static_cast<int>(2 * j + 2));
    }

    auto chain = [&d](const std::string& prefix, int len) {
        std::vector<std::string> ids;
        for (int i = 1; i <= len; ++i) {
            ids.push_back(prefix + "_" + std::to_string(i));
            d.gens.push_back({ids.back(), 1, {}});
        }
        for (int i = 0; i + 1 < len; ++i) d.edges.push_back({ids[i], ids[i + 1], Alg::R23});
        return ids;
    };

    // Vertical chains: xi_{2j} --123--> ka_1 --23--> ... ka_{k_j} <--1-- xi_{2j-1}.
    for (std::size_t j = 0; j < model.vertical.size(); ++j) {
        auto ids = chain("ka" + std::to_string(j + 1), model.vertical[j].length);
        d.edges.push_back({xi.at(model.vertical[j].to), ids.front(), Alg::R123});
        d.edges.push_back({xi.at(model.vertical[j].from), ids.back(), Alg::R1});
    }
    // Horizontal chains: eta_{2j-1} --3--> la_1 --23--> ... la_{l_j} --2--> eta_{2j}.
    for (std::size_t j = 0; j < model.horizontal.size(); ++j) {
        auto ids = chain("la" + std::to_string(j + 1), model.horizontal[j].length);
        d.edges.push_back({xi.at(model.horizontal[j].from), ids.front(), Alg::R3});
        d.edges.push_back({ids.back(), xi.at(model.horizontal[j].to), Alg::R2});
    }
    // Unstable chain, s = 2|tau|.
    const std::string x0 = xi.at(model.xi0), e0 = xi.at(model.eta0);
    if (model.tau > 0) {
        auto ids = chain("mu", 2 * model.tau);
        d.edges.push_back({e0, ids.front(), Alg::R3});
        d.edges.push_back({x0, ids.back(), Alg::R1});
    } else if (model.tau == 0) {
        d.edges.push_back({x0, e0, Alg::R12});
    } else {
        auto ids = chain("mu", -2 * model.tau);
        d.edges.push_back({x0, ids.front(), Alg::R123});
        d.edges.push_back({ids.back(), e0, Alg::R2});
    }
    return d;
}

Diagnostics check_idempotents(const TypeDStructure& d) {
    Diagnostics diag;
    std::map<std::string, int> iota;
    for (const auto& g : d.gens) {
        if (iota.count(g.id)) diag.errors.push_back("duplicate generator id '" + g.id + "'");
        iota[g.id] = g.iota;
    }
    for (const auto& e : d.edges) {
        if (!iota.count(e.from) || !iota.count(e.to)) {
            diag.errors.push_back("edge " + e.from + "->" + e.to + " references unknown generator");
            continue;
        }
        if (!is_reeb(e.label)) {
            diag.errors.push_back("edge " + e.from + "->" + e.to + " has non-Reeb label");
            continue;
        }
        auto [l, r] = idempotent_pair(e.label);
        if ((l == Alg::I0 ? 0 : 1) != iota[e.from] || (r == Alg::I0 ? 0 : 1) != iota[e.to])
            diag.errors.push_back("idempotent mismatch on edge " + e.from + "->" + e.to +
                                  " label " + to_string(e.label));
    }
    return diag;
}

Diagnostics check_typeD_relation(const TypeDStructure& d) {
    Diagnostics diag = check_idempotents(d);
    std::map<std::string, std::vector<const DEdge*>> out;
    for (const auto& e : d.edges) out[e.from].push_back(&e);
    std::map<std::tuple<std::string, std::string, Alg>, int> paths;
    for (const auto& e : d.edges) {
        auto it = out.find(e.to);
        if (it == out.end()) continue;
        for (const DEdge* f : it->second) {
            Alg prod = multiply(e.label, f->label);
            if (is_zero(prod)) continue;
            paths[{e.from, f->to, prod}] ^= 1;
        }
    }
    for (const auto& [key, parity] : paths)
        if (parity)
            diag.errors.push_back("type D relation fails: " + std::get<0>(key) + " => " +
                                  std::get<1>(key) + " via " + to_string(std::get<2>(key)));
    return diag;
}

std::vector<std::string> paths_with_labels(const TypeDStructure& d, const std::string& start,
                                           const std::vector<Alg>& labels) {
    if (labels.empty()) throw Error("paths_with_labels: empty label sequence");
    if (d.index_of(start) < 0) throw Error("paths_with_labels: unknown start '" + start + "'");
    std::map<std::string, std::vector<const DEdge*>> out;
    for (const auto& e : d.edges) out[e.from].push_back(&e);

    std::map<std::string, int> frontier{{start, 1}};
    for (Alg want : labels) {
        std::map<std::string, int> next;
        for (const auto& [node, mult] : frontier) {
            auto it = out.find(node);
            if (it == out.end()) continue;
            for (const DEdge* e : it->second)
                if (e->label == want) next[e->to] = (next[e->to] + mult) & 1;
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::vector<std::string> ends;
    for (const auto& [node, mult] : frontier)
        if (mult) ends.push_back(node);
    std::sort(ends.begin(), ends.end());
    return ends;
}

}  // namespace qmn
