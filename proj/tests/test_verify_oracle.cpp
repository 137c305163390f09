#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hamdec/base_decomp.hpp"
#include "hamdec/errors.hpp"
#include "hamdec/verify.hpp"

using namespace hamdec;

namespace {

MultiGraph cycle_graph(int n) {
    MultiGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

std::vector<int> iota_cycle(int n) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    return c;
}

bool has_kind(const VerificationReport& rep, const std::string& kind) {
    return std::any_of(rep.failures.begin(), rep.failures.end(),
                       [&](const auto& f) { return f.first == kind; });
}

} // namespace

TEST_CASE("verifier accepts a cycle as its own decomposition") {
    MultiGraph c6 = cycle_graph(6);
    Decomposition d{{iota_cycle(6)}};
    CHECK(verify_hamilton_decomposition(c6, d).ok);
}

TEST_CASE("verifier rejects duplicated and missing edges") {
    MultiGraph g = build_circulant({6, {1, 2}});
    auto d = brute_force_decomposition(g);
    REQUIRE(d.has_value());
    REQUIRE(verify_hamilton_decomposition(g, *d).ok);

    // same cycle twice: its edges overused, the rest underused
    Decomposition bad{{d->cycles[0], d->cycles[0]}};
    auto rep = verify_hamilton_decomposition(g, bad);
    CHECK_FALSE(rep.ok);
    CHECK(has_kind(rep, "EdgeOveruse"));
    CHECK(has_kind(rep, "EdgeUnderuse"));
}

TEST_CASE("verifier failure kinds for sequence-level damage") {
    MultiGraph g = build_circulant({6, {1, 2}});
    auto d = brute_force_decomposition(g);
    REQUIRE(d.has_value());

    SUBCASE("vertex transposition") {
        Decomposition bad = *d;
        std::swap(bad.cycles[0][1], bad.cycles[0][3]);
        auto rep = verify_hamilton_decomposition(g, bad);
        CHECK_FALSE(rep.ok);
        CHECK(has_kind(rep, "NotAnEdge"));
    }
    SUBCASE("cycle truncation") {
        Decomposition bad = *d;
        bad.cycles[1].pop_back();
        auto rep = verify_hamilton_decomposition(g, bad);
        CHECK_FALSE(rep.ok);
        CHECK(has_kind(rep, "NotACycle"));
        CHECK(has_kind(rep, "MissedVertex"));
    }
    SUBCASE("repeated vertex") {
        Decomposition bad = *d;
        bad.cycles[0][2] = bad.cycles[0][0];
        auto rep = verify_hamilton_decomposition(g, bad);
        CHECK_FALSE(rep.ok);
        CHECK(has_kind(rep, "NotACycle"));
    }
}

TEST_CASE("verifier tracks multiplicities exactly") {
    MultiGraph c3x2(3);
    for (int i = 0; i < 3; ++i) c3x2.add_edge(i, (i + 1) % 3, 2);
    Decomposition d{{{0, 1, 2}, {0, 1, 2}}};
    CHECK(verify_hamilton_decomposition(c3x2, d).ok);
    Decomposition single{{{0, 1, 2}}};
    auto rep = verify_hamilton_decomposition(c3x2, single);
    CHECK_FALSE(rep.ok);
    CHECK(has_kind(rep, "EdgeUnderuse"));
}

TEST_CASE("cycle_distance_parity") {
    CHECK(cycle_distance_parity({0, 1, 2, 3}, 0, 2) == 0);
    CHECK(cycle_distance_parity({0, 1, 2, 3, 4, 5}, 0, 3) == 1);
    CHECK_THROWS_AS(cycle_distance_parity({0, 1, 2}, 0, 1), Error);
    CHECK_THROWS_AS(cycle_distance_parity({0, 1, 2, 3}, 0, 7), Error);

    // symmetry
    std::vector<int> c{4, 7, 1, 0, 3, 9, 2, 5, 8, 6};
    for (int u : c)
        for (int v : c)
            if (u != v) CHECK(cycle_distance_parity(c, u, v) == cycle_distance_parity(c, v, u));
}

TEST_CASE("verify_q1 sees the collapsed pair for alpha = 2") {
    auto [gg, map] = to_gamma(10, 4, 3);
    REQUIRE(gg.alpha == 2);
    Decomposition d = decompose_gamma21(gg);
    CHECK(verify_q1(gg, d));
    CHECK(verify_q1_last(gg, d));
}

TEST_CASE("verify_q1 rejects a one-sided matching split") {
    // 2-row toy: rows as "cycles" own no cross edge at all, so the matching
    // between C_0 and C_1 is missed entirely by both
    GammaGraph gg{2, 4, 1};
    Decomposition fake;
    fake.cycles.push_back({0, 1, 2, 3}); // row 0 only
    fake.cycles.push_back({4, 5, 6, 7}); // row 1 only
    CHECK_FALSE(verify_q1(gg, fake));
    CHECK_FALSE(verify_q1_last(gg, fake));
}

TEST_CASE("verify_q2_certificate round trip and tampering") {
    auto [gg, map] = to_gamma(10, 4, 3);
    Decomposition d = decompose_gamma21(gg);
    Decomposition dc = relabel(d, map.group_of);
    MultiGraph circ = build_circulant({10, {3, 4}});
    REQUIRE(verify_hamilton_decomposition(circ, dc).ok);

    auto cert = find_q2_certificate(circ, dc, 4, 3);
    REQUIRE(cert.has_value());
    CHECK(verify_q2_certificate(circ, dc, *cert));

    Q2Certificate bad = *cert;
    std::swap(bad.pairing[0], bad.pairing[1]);
    CHECK_FALSE(verify_q2_certificate(circ, dc, bad));

    Q2Certificate nonquad = *cert;
    nonquad.quad = {0, 1, 2, 3};
    CHECK_FALSE(verify_q2_certificate(circ, dc, nonquad));
}

TEST_CASE("certificate with the other diagonal only passes when odd-odd") {
    auto [gg, map] = to_gamma(10, 4, 3);
    Decomposition d = decompose_gamma21(gg);
    Decomposition dc = relabel(d, map.group_of);
    MultiGraph circ = build_circulant({10, {3, 4}});
    auto cert = find_q2_certificate(circ, dc, 4, 3);
    REQUIRE(cert.has_value());
    Q2Certificate other = *cert;
    if (other.diagonal[0] == other.quad[0] || other.diagonal[0] == other.quad[2])
        other.diagonal = {other.quad[1], other.quad[3]};
    else
        other.diagonal = {other.quad[0], other.quad[2]};
    bool odd_both =
        cycle_distance_parity(dc.cycles[0], other.diagonal[0], other.diagonal[1]) == 1 &&
        cycle_distance_parity(dc.cycles[1], other.diagonal[0], other.diagonal[1]) == 1;
    CHECK(verify_q2_certificate(circ, dc, other) == odd_both);
}

TEST_CASE("oracle on tiny hosts") {
    auto d6 = brute_force_decomposition(cycle_graph(6));
    REQUIRE(d6.has_value());
    CHECK(d6->cycles.size() == 1);
    CHECK(d6->cycles[0] == iota_cycle(6));

    MultiGraph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    auto dk5 = brute_force_decomposition(k5);
    REQUIRE(dk5.has_value());
    CHECK(dk5->cycles.size() == 2);
    CHECK(verify_hamilton_decomposition(k5, *dk5).ok);

    auto d8 = brute_force_decomposition(build_circulant({8, {1, 2}}));
    REQUIRE(d8.has_value());
    CHECK(d8->cycles.size() == 2);
    CHECK(verify_hamilton_decomposition(build_circulant({8, {1, 2}}), *d8).ok);
}

TEST_CASE("oracle respects the size limit") {
    MultiGraph big(17);
    for (int i = 0; i < 17; ++i) big.add_edge(i, (i + 1) % 17);
    CHECK_THROWS_AS(brute_force_decomposition(big), Error);
}

TEST_CASE("oracle determinism") {
    MultiGraph g = build_circulant({10, {2, 3}});
    auto d1 = brute_force_decomposition(g);
    auto d2 = brute_force_decomposition(g);
    REQUIRE(d1.has_value());
    REQUIRE(d2.has_value());
    CHECK(d1->cycles == d2->cycles);
}

TEST_CASE("oracle q2 constraint filters bipartite hosts") {
    MultiGraph g = build_circulant({8, {1, 3}});
    auto plain = brute_force_decomposition(g);
    REQUIRE(plain.has_value());
    OracleConstraints cons;
    cons.q2_required = true;
    CHECK_FALSE(brute_force_decomposition(g, cons).has_value());
}
