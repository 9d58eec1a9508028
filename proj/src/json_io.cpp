#include "qmn/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qmn {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json opt_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<int> get_opt(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<int>();
}

}  // namespace

std::string cfk_to_json(const CfkComplex& c) {
    Json j;
    j["generators"] = Json::array();
    for (const auto& g : c.generators)
        j["generators"].push_back({{"id", g.id}, {"A", g.alexander}, {"M", opt_int(g.maslov)}});
    j["arrows"] = Json::array();
    for (const auto& a : c.arrows)
        j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"u", a.u}, {"v", a.v}});
    return dump(j);
}

CfkComplex cfk_from_json(const std::string& text) {
    Json j = Json::parse(text);
    CfkComplex c;
    for (const auto& g : j.at("generators"))
        c.generators.push_back(
            {g.at("id").get<std::string>(), g.at("A").get<int>(),
             g.contains("M") ? get_opt(g.at("M")) : std::nullopt});
    for (const auto& a : j.at("arrows"))
        c.arrows.push_back({a.at("from").get<std::string>(), a.at("to").get<std::string>(),
                            a.at("u").get<int>(), a.at("v").get<int>()});
    return c;
}

std::string cfd_to_json(const TypeDStructure& d) {
    Json j;
    j["gens"] = Json::array();
    for (const auto& g : d.gens)
        j["gens"].push_back({{"id", g.id}, {"iota", g.iota}, {"A", opt_int(g.alexander)}});
    j["edges"] = Json::array();
    for (const auto& e : d.edges) {
        std::string label = to_string(e.label).substr(1);  // strip the 'r'
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", label}});
    }
    return dump(j);
}

TypeDStructure cfd_from_json(const std::string& text) {
    Json j = Json::parse(text);
    TypeDStructure d;
    for (const auto& g : j.at("gens"))
        d.gens.push_back({g.at("id").get<std::string>(), g.at("iota").get<int>(),
                          g.contains("A") ? get_opt(g.at("A")) : std::nullopt});
    for (const auto& e : j.at("edges"))
        d.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                           alg_from_string("r" + e.at("label").get<std::string>())});
    return d;
}

std::string cfa_to_json(const AInftyModule& a) {
    Json j;
    j["m"] = a.m;
    j["n"] = a.n;
    j["gens"] = Json::array();
    for (const auto& g : a.gens)
        j["gens"].push_back({{"id", g.id}, {"iota", g.iota}, {"role", std::string(1, g.role)}});
    j["ops"] = Json::array();
    for (const auto& op : a.ops) {
        Json rhos = Json::array();
        for (Alg r : op.rhos) rhos.push_back(to_string(r));
        j["ops"].push_back({{"in", op.in}, {"rhos", rhos}, {"out", op.out}, {"u", op.u}});
    }
    return dump(j);
}

AInftyModule cfa_from_json(const std::string& text) {
    Json j = Json::parse(text);
    AInftyModule a;
    a.m = j.at("m").get<int>();
    a.n = j.at("n").get<int>();
    for (const auto& g : j.at("gens"))
        a.gens.push_back({g.at("id").get<std::string>(), g.at("iota").get<int>(),
                          g.at("role").get<std::string>().at(0)});
    for (const auto& op : j.at("ops")) {
        AOp o;
        o.in = op.at("in").get<std::string>();
        for (const auto& r : op.at("rhos")) o.rhos.push_back(alg_from_string(r.get<std::string>()));
        o.out = op.at("out").get<std::string>();
        o.u = op.at("u").get<int>();
        a.ops.push_back(std::move(o));
    }
    std::sort(a.ops.begin(), a.ops.end());
    return a;
}

std::string tensor_to_json(const GradedUComplex& c) {
    Json j;
    j["gens"] = Json::array();
    for (const auto& g : c.gens)
        j["gens"].push_back({{"a", g.a}, {"y", g.d}, {"A", opt_int(g.alexander)}});
    j["arrows"] = Json::array();
    for (const auto& a : c.arrows)
        j["arrows"].push_back({{"from", c.gens[static_cast<std::size_t>(a.from)].id()},
                               {"to", c.gens[static_cast<std::size_t>(a.to)].id()},
                               {"u", a.u}});
    return dump(j);
}

GradedUComplex tensor_from_json(const std::string& text) {
    Json j = Json::parse(text);
    GradedUComplex c;
    for (const auto& g : j.at("gens")) {
        TensorGenerator t;
        t.a = g.at("a").get<std::string>();
        t.d = g.at("y").get<std::string>();
        t.alexander = g.contains("A") ? get_opt(g.at("A")) : std::nullopt;
        c.gens.push_back(std::move(t));
    }
    auto locate = [&c](const std::string& id) {
        for (std::size_t i = 0; i < c.gens.size(); ++i)
            if (c.gens[i].id() == id) return static_cast<int>(i);
        throw Error("tensor JSON references unknown generator " + id);
    };
    for (const auto& a : j.at("arrows"))
        c.arrows.push_back({locate(a.at("from").get<std::string>()),
                            locate(a.at("to").get<std::string>()), a.at("u").get<int>()});
    return c;
}

std::string decomposition_to_json(const Decomposition& d) {
    Json j;
    j["free"] = Json::array();
    for (const auto& a : d.free) j["free"].push_back(opt_int(a));
    j["torsion"] = Json::array();
    for (const auto& t : d.torsion)
        j["torsion"].push_back({{"A", opt_int(t.alexander)}, {"p", t.order}});
    return dump(j);
}

Decomposition decomposition_from_json(const std::string& text) {
    Json j = Json::parse(text);
    Decomposition d;
    for (const auto& a : j.at("free")) d.free.push_back(get_opt(a));
    for (const auto& t : j.at("torsion"))
        d.torsion.push_back({get_opt(t.at("A")), t.at("p").get<int>()});
    return d;
}

std::string bridge_report_json(int m, int n) {
    DiagramParams dp = strand_counts(m, n);
    ConwayTangle tangle{{2LL * n, 1, 2LL * m}};
    Json j;
    j["m"] = m;
    j["n"] = n;
    j["schubert"] = to_string(schubert_qmn(m, n));
    j["conway"] = to_string(tangle);
    j["rs"] = Json::array({dp.r, dp.s});
    j["strands"] = Json::object();
    for (const auto& [k, v] : dp.strand_counts) j["strands"][k] = v;
    j["intersections"] =
        Json::array({dp.vertical_intersections, dp.horizontal_intersections});
    j["bridge_from_rs"] = to_string(bridge_from_rs(dp.r, dp.s));
    j["conway_schubert"] = to_string(fraction_to_schubert(tangle));
    return dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

}  // namespace qmn
