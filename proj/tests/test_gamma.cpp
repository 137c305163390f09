#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hamdec/errors.hpp"
#include "hamdec/gamma.hpp"

using namespace hamdec;

namespace {

// Edge transport: the label map must carry the circulant edge set exactly
// onto the gamma edge set.
void check_label_transport(int n, int a, int b) {
    auto [gg, map] = to_gamma(n, a, b);
    MultiGraph circ = build_circulant({n, {std::min(a, b), std::max(a, b)}});
    MultiGraph gamma = gg.to_multigraph();
    REQUIRE(circ.edge_count() == gamma.edge_count());
    for (const auto& [e, m] : circ.edges())
        CHECK(gamma.multiplicity(map.gamma_of[e.first], map.gamma_of[e.second]) == m);
}

} // namespace

TEST_CASE("to_gamma shapes from the worked instances") {
    auto [g1, m1] = to_gamma(12, 2, 3);
    CHECK(g1.alpha == 2);
    CHECK(g1.k == 6);
    CHECK(g1.c == 3);
    CHECK(g1.beta() == 3);

    auto [g2, m2] = to_gamma(12, 3, 2);
    CHECK(g2.alpha == 3);
    CHECK(g2.k == 4);
    CHECK(g2.c == 2);
    CHECK(g2.beta() == 2);

    auto [g3, m3] = to_gamma(10, 3, 4);
    CHECK(g3.alpha == 1);
    CHECK(g3.k == 10);
    CHECK(g3.c == 8);
    CHECK(g3.beta() == 2);
}

TEST_CASE("to_gamma rejects degenerate inputs") {
    CHECK_THROWS_AS(to_gamma(12, 2, 4), Error);  // gcd(12,2,4) = 2
    CHECK_THROWS_AS(to_gamma(12, 6, 5), Error);  // 2a = 0
    CHECK_THROWS_AS(to_gamma(12, 5, 7), Error);  // a = -b
    CHECK_THROWS_AS(to_gamma(12, 5, 5), Error);  // a = b
}

TEST_CASE("label map is a bijection with exact edge transport") {
    check_label_transport(12, 2, 3);
    check_label_transport(12, 3, 2);
    check_label_transport(10, 3, 4);
    check_label_transport(10, 4, 3);
    check_label_transport(30, 6, 5);
    check_label_transport(16, 3, 2);
}

TEST_CASE("even order and opposite-parity jumps give opposite-parity alpha, beta") {
    for (int n = 6; n <= 40; n += 2)
        for (int a = 1; 2 * a < n; ++a)
            for (int b = 1; 2 * b < n; ++b) {
                if (a == b || (a % 2) == (b % 2)) continue;
                if (std::gcd(std::gcd(n, a), b) != 1) continue;
                auto [gg, map] = to_gamma(n, a, b);
                CHECK((gg.alpha % 2) != (gg.beta() % 2));
            }
}

TEST_CASE("beta matches gcd(n, b) after labeling") {
    for (int n = 6; n <= 30; n += 2)
        for (int a = 1; 2 * a < n; ++a)
            for (int b = 1; 2 * b < n; ++b) {
                if (a == b || std::gcd(std::gcd(n, a), b) != 1) continue;
                auto [gg, map] = to_gamma(n, a, b);
                CHECK(gg.alpha == std::gcd(n, a));
                CHECK(gg.beta() == std::gcd(n, b));
                CHECK(gg.alpha * gg.k == n);
            }
}

TEST_CASE("transpose swaps the class parameters and is an isomorphism") {
    auto [g1, m1] = to_gamma(12, 2, 3);
    auto tr = transpose(g1); // checked internally for exact edge transport
    CHECK(tr.g.alpha == 3);
    CHECK(tr.g.k == 4);
    CHECK(tr.g.c == 2);
    CHECK(tr.g.beta() == 2);

    auto [g3, m3] = to_gamma(10, 3, 4);
    auto tr3 = transpose(g3);
    CHECK(tr3.g.alpha == 2);
    CHECK(tr3.g.k == 5);
    CHECK(tr3.g.beta() == 1);
}

TEST_CASE("transpose twice returns the original shape") {
    for (auto [n, a, b] : {std::array<int, 3>{12, 2, 3}, {10, 4, 3}, {30, 6, 5}, {24, 4, 3}}) {
        auto [gg, map] = to_gamma(n, a, b);
        auto tr = transpose(gg);
        auto tr2 = transpose(tr.g);
        CHECK(tr2.g.alpha == gg.alpha);
        CHECK(tr2.g.k == gg.k);
        CHECK(tr2.g.c == gg.c);
        // edge transport of each step is asserted inside transpose()
    }
}

TEST_CASE("transpose preserves vertex count and degrees") {
    auto [gg, map] = to_gamma(20, 4, 5);
    auto tr = transpose(gg);
    MultiGraph before = gg.to_multigraph();
    MultiGraph after = tr.g.to_multigraph();
    REQUIRE(before.vertex_count() == after.vertex_count());
    for (int v = 0; v < before.vertex_count(); ++v)
        CHECK(before.degree(v) == after.degree(tr.fwd[v]));
}

TEST_CASE("reduce handles the simple case") {
    // Gamma(3,2) with k=10, c=8 reduces to Gamma(1,2), same k and c
    GammaGraph g{3, 10, 8};
    auto res = reduce(g);
    auto* r = std::get_if<GammaGraph>(&res);
    REQUIRE(r != nullptr);
    CHECK(r->alpha == 1);
    CHECK(r->k == 10);
    CHECK(r->c == 8);
}

TEST_CASE("reduce classifies the three non-simple cases") {
    auto r1 = reduce(GammaGraph{3, 4, 0});
    REQUIRE(std::holds_alternative<NonSimpleKind>(r1));
    CHECK(std::get<NonSimpleKind>(r1) == NonSimpleKind::Loops_c0_alpha3);

    auto r2 = reduce(GammaGraph{4, 3, 0});
    REQUIRE(std::holds_alternative<NonSimpleKind>(r2));
    CHECK(std::get<NonSimpleKind>(r2) == NonSimpleKind::Doubled_c0_alpha4);

    auto r3 = reduce(GammaGraph{3, 4, 2});
    REQUIRE(std::holds_alternative<NonSimpleKind>(r3));
    CHECK(std::get<NonSimpleKind>(r3) == NonSimpleKind::Doubled_chalf_alpha3);
}

TEST_CASE("reduce requires alpha >= 3") {
    CHECK_THROWS_AS(reduce(GammaGraph{2, 6, 3}), Error);
}

TEST_CASE("lift inverts reduce and adds 2k vertices") {
    GammaGraph g{1, 10, 8};
    GammaGraph up = lift(g);
    CHECK(up.alpha == 3);
    CHECK(up.k == 10);
    CHECK(up.c == 8);
    CHECK(up.n() == g.n() + 2 * g.k);

    auto back = reduce(up);
    REQUIRE(std::holds_alternative<GammaGraph>(back));
    CHECK(std::get<GammaGraph>(back) == g);

    GammaGraph g2{2, 5, 3};
    auto rb = reduce(lift(g2));
    REQUIRE(std::holds_alternative<GammaGraph>(rb));
    CHECK(std::get<GammaGraph>(rb) == g2);

    // lift of Gamma(2,3) k=6 c=3 has 24 vertices and stays 4-regular
    GammaGraph g3{2, 6, 3};
    MultiGraph lifted = lift(g3).to_multigraph();
    CHECK(lifted.vertex_count() == 24);
    for (int v = 0; v < 24; ++v) CHECK(lifted.degree(v) == 4);
}
