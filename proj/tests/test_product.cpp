#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hamdec/errors.hpp"
#include "hamdec/json_io.hpp"
#include "hamdec/lift_decomp.hpp"
#include "hamdec/product_decomp.hpp"
#include "hamdec/verify.hpp"

using namespace hamdec;

namespace {

MultiGraph cycle_graph(int n, int mult = 1) {
    MultiGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, mult);
    return g;
}

HamiltonCycleSet cycle_set(int n, int mult = 1) {
    HamiltonCycleSet hc;
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    hc.cycles.push_back(c);
    hc.multiplicity.push_back(mult);
    return hc;
}

} // namespace

TEST_CASE("C4 x Circ(6,{1,2}) block") {
    auto res = decompose_4regular(6, 2, 1);
    Decomposition block = decompose_cn_cross_g(4, res.graph, res.decomp, res.cert);
    REQUIRE(block.cycles.size() == 4);
    for (const auto& c : block.cycles) CHECK(c.size() == 24);

    MultiGraph cn = cycle_graph(4);
    MultiGraph host = tensor_product(cn, res.graph);
    CHECK(verify_hamilton_decomposition(host, block).ok);
}

TEST_CASE("C6 x Circ(10,{4,3}) block") {
    auto res = decompose_4regular(10, 4, 3);
    Decomposition block = decompose_cn_cross_g(6, res.graph, res.decomp, res.cert);
    REQUIRE(block.cycles.size() == 4);
    for (const auto& c : block.cycles) CHECK(c.size() == 60);
    MultiGraph host = tensor_product(cycle_graph(6), res.graph);
    CHECK(verify_hamilton_decomposition(host, block).ok);
}

TEST_CASE("odd cycle factor is rejected") {
    auto res = decompose_4regular(6, 2, 1);
    try {
        decompose_cn_cross_g(5, res.graph, res.decomp, res.cert);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::OddN);
    }
}

TEST_CASE("invalid certificate is rejected") {
    auto res = decompose_4regular(6, 2, 1);
    Q2Certificate bad = res.cert;
    std::swap(bad.pairing[0], bad.pairing[1]);
    try {
        decompose_cn_cross_g(4, res.graph, res.decomp, bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::CertificateInvalid);
    }
}

TEST_CASE("block construction is deterministic") {
    auto res = decompose_4regular(6, 2, 1);
    Decomposition b1 = decompose_cn_cross_g(4, res.graph, res.decomp, res.cert);
    Decomposition b2 = decompose_cn_cross_g(4, res.graph, res.decomp, res.cert);
    CHECK(b1.cycles == b2.cycles);
}

TEST_CASE("decompose_product of Circ(6,{1,2}) x C4") {
    auto pd = decompose_product({6, {1, 2}}, cycle_graph(4), cycle_set(4));
    REQUIRE(pd.cycles.cycles.size() == 4);
    for (const auto& c : pd.cycles.cycles) CHECK(c.size() == 24);
    CHECK(verify_hamilton_decomposition(pd.host, pd.cycles).ok);
    REQUIRE(pd.provenance.size() == 4);
    for (const auto& tag : pd.provenance) {
        CHECK(tag.pair == 0);
        CHECK(tag.h_cycle == 0);
    }
}

TEST_CASE("decompose_product of K10 minus a 1-factor x C4") {
    auto pd = decompose_product({10, {1, 2, 3, 4}}, cycle_graph(4), cycle_set(4));
    REQUIRE(pd.cycles.cycles.size() == 8);
    for (const auto& c : pd.cycles.cycles) CHECK(c.size() == 40);
    CHECK(verify_hamilton_decomposition(pd.host, pd.cycles).ok);
    // provenance covers (pair 0..1) x (h_cycle 0) with 4 cycles each
    std::map<int, int> per_pair;
    for (const auto& tag : pd.provenance) ++per_pair[tag.pair];
    CHECK(per_pair[0] == 4);
    CHECK(per_pair[1] == 4);
}

TEST_CASE("provenance blocks cover the per-pair tensor factors") {
    CirculantSpec spec{10, {1, 2, 3, 4}};
    MultiGraph h = cycle_graph(4);
    auto pd = decompose_product(spec, h, cycle_set(4));
    auto pairing = check_property_q(spec);
    auto specs = split_by_pairing(spec, pairing);
    for (int pair = 0; pair < 2; ++pair) {
        MultiGraph expect = tensor_product(build_circulant(specs[pair]), h);
        std::map<std::pair<int, int>, int> used;
        for (size_t i = 0; i < pd.provenance.size(); ++i) {
            if (pd.provenance[i].pair != pair) continue;
            const auto& cyc = pd.cycles.cycles[i];
            for (size_t j = 0; j < cyc.size(); ++j) {
                int u = cyc[j], v = cyc[(j + 1) % cyc.size()];
                ++used[{std::min(u, v), std::max(u, v)}];
            }
        }
        int total = 0;
        for (const auto& [e, m] : expect.edges()) {
            CHECK(used[e] == m);
            total += m;
        }
        int used_total = 0;
        for (const auto& [e, m] : used) used_total += m;
        CHECK(used_total == total);
    }
}

TEST_CASE("multigraph H: doubled C6 against Circ(12,{2,3})") {
    auto pd = decompose_product({12, {2, 3}}, cycle_graph(6, 2), cycle_set(6, 2));
    REQUIRE(pd.cycles.cycles.size() == 8);
    for (const auto& c : pd.cycles.cycles) CHECK(c.size() == 72);
    for (const auto& [e, m] : pd.host.edges()) CHECK(m == 2);
    CHECK(verify_hamilton_decomposition(pd.host, pd.cycles).ok);
}

TEST_CASE("multiplicity identity: G x C4(lambda) = (G x C4)(lambda)") {
    MultiGraph base_host = tensor_product(build_circulant({6, {1, 2}}), cycle_graph(4));
    for (int lambda : {1, 2, 3}) {
        auto pd = decompose_product({6, {1, 2}}, cycle_graph(4, lambda), cycle_set(4, lambda));
        CHECK((int)pd.cycles.cycles.size() == 4 * lambda);
        for (const auto& [e, m] : base_host.edges())
            CHECK(pd.host.multiplicity(e.first, e.second) == lambda * m);
        CHECK(verify_hamilton_decomposition(pd.host, pd.cycles).ok);
    }
}

TEST_CASE("odd order factors are rejected") {
    try {
        decompose_product({6, {1, 2}}, cycle_graph(5), cycle_set(5));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::OddOrderUnsupported);
    }
}

TEST_CASE("property Q failures surface as PropertyQFailed") {
    try {
        decompose_product({8, {1, 3}}, cycle_graph(4), cycle_set(4));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::PropertyQFailed);
    }
}

TEST_CASE("bad H cycles are rejected") {
    HamiltonCycleSet wrong = cycle_set(4);
    wrong.cycles[0] = {0, 2, 1, 3}; // not a cycle of C4
    try {
        decompose_product({6, {1, 2}}, cycle_graph(4), wrong);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::HNotDecomposition);
    }
}

TEST_CASE("product determinism end to end") {
    auto p1 = decompose_product({6, {1, 2}}, cycle_graph(4), cycle_set(4));
    auto p2 = decompose_product({6, {1, 2}}, cycle_graph(4), cycle_set(4));
    CHECK(to_json(p1).dump() == to_json(p2).dump());
}
