#include "hamdec/json_io.hpp"

#include <sstream>

#include "hamdec/errors.hpp"

namespace hamdec {

using nlohmann::json;

LoadedGraph load_graph(const json& j) {
    if (!j.is_object()) fail(Err::InvalidSpec, "graph JSON must be an object");
    std::string type = j.value("type", j.contains("alpha") ? "gamma" : "");
    LoadedGraph lg;
    if (type == "circulant") {
        CirculantSpec spec;
        spec.n = j.at("n").get<int>();
        spec.jumps = j.at("jumps").get<std::vector<int>>();
        lg.graph = build_circulant(spec);
        lg.circulant = spec;
    } else if (type == "multigraph") {
        int n = j.at("n").get<int>();
        MultiGraph g(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || (e.size() != 2 && e.size() != 3))
                fail(Err::InvalidSpec, "edge must be [u, v] or [u, v, multiplicity]");
            g.add_edge(e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<int>() : 1);
        }
        lg.graph = g;
    } else if (type == "gamma") {
        GammaGraph gg{j.at("alpha").get<int>(), j.at("k").get<int>(), j.at("c").get<int>()};
        lg.graph = gg.to_multigraph();
        lg.gamma = gg;
    } else {
        fail(Err::InvalidSpec, "unknown graph type '" + type + "'");
    }
    return lg;
}

json to_json(const Decomposition& d) {
    return json{{"cycles", d.cycles}};
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    d.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
    return d;
}

json to_json(const Q2Certificate& cert) {
    return json{{"quad", cert.quad}, {"pairing", cert.pairing}, {"diagonal", cert.diagonal}};
}

Q2Certificate certificate_from_json(const json& j) {
    Q2Certificate cert;
    auto quad = j.at("quad").get<std::vector<int>>();
    auto pairing = j.at("pairing").get<std::vector<int>>();
    auto diagonal = j.at("diagonal").get<std::vector<int>>();
    if (quad.size() != 4 || pairing.size() != 2 || diagonal.size() != 2)
        fail(Err::InvalidSpec, "malformed certificate JSON");
    std::copy(quad.begin(), quad.end(), cert.quad.begin());
    std::copy(pairing.begin(), pairing.end(), cert.pairing.begin());
    std::copy(diagonal.begin(), diagonal.end(), cert.diagonal.begin());
    return cert;
}

json to_json(const JumpPairing& pairing) {
    json pairs = json::array();
    for (auto [o, e] : pairing.pairs) pairs.push_back(json::array({o, e}));
    return json{{"pairs", pairs}};
}

json to_json(const VerificationReport& rep) {
    json failures = json::array();
    for (const auto& [kind, detail] : rep.failures)
        failures.push_back(json{{"kind", kind}, {"detail", detail}});
    return json{{"ok", rep.ok}, {"failures", failures}};
}

json to_json(const ProductDecomposition& pd) {
    json prov = json::array();
    for (const auto& tag : pd.provenance)
        prov.push_back(json{{"pair", tag.pair}, {"h_cycle", tag.h_cycle}});
    return json{{"n_vertices", pd.host.vertex_count()},
                {"cycles", pd.cycles.cycles},
                {"provenance", prov}};
}

std::string export_edgelist(const MultiGraph& g) {
    std::ostringstream out;
    for (const auto& [e, m] : g.edges()) out << e.first << " " << e.second << " " << m << "\n";
    return out.str();
}

std::string export_dot(const LoadedGraph& lg) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < lg.graph.vertex_count(); ++v) {
        out << "  " << v << " [label=\"";
        if (lg.gamma) {
            auto [i, j] = lg.gamma->coords(v);
            out << "(" << i << "," << j << ")";
        } else {
            out << v;
        }
        out << "\"];\n";
    }
    for (const auto& [e, m] : lg.graph.edges())
        for (int r = 0; r < m; ++r) out << "  " << e.first << " -- " << e.second << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace hamdec
