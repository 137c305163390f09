#include "hamdec/base_decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hamdec/errors.hpp"

namespace hamdec {

Decomposition relabel(const Decomposition& d, const std::vector<int>& map) {
    Decomposition out;
    out.cycles.reserve(d.cycles.size());
    for (const auto& cyc : d.cycles) {
        std::vector<int> nc;
        nc.reserve(cyc.size());
        for (int v : cyc) nc.push_back(map.at(v));
        out.cycles.push_back(std::move(nc));
    }
    return out;
}

namespace {

// Rotate/reflect each cycle to start at its minimum vertex, smaller neighbor
// second. Cycle order is preserved.
void canonicalize(Decomposition& d) {
    for (auto& cyc : d.cycles) {
        if (cyc.empty()) continue;
        auto mn = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mn, cyc.end());
        if (cyc.size() > 2 && cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
    }
}

// Walk a 2-regular edge set into its cycles.
std::vector<std::vector<int>> walk_two_factor(int n, const std::set<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s] || adj[s].empty()) continue;
        std::vector<int> cyc{s};
        seen[s] = 1;
        int prev = -1, cur = s;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev && !seen[w]) {
                    next = w;
                    break;
                }
            if (next == -1) break;
            cyc.push_back(next);
            seen[next] = 1;
            prev = cur;
            cur = next;
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

} // namespace

Decomposition decompose_gamma21(const GammaGraph& g) {
    if (g.alpha != 2) fail(Err::BadShape, "decompose_gamma21 needs alpha = 2");
    if (g.c == 0) fail(Err::DegenerateC, "c = 0 is impossible for beta = 1");
    if (g.beta() != 1) fail(Err::BadShape, "decompose_gamma21 needs beta = 1");
    if (g.n() % 2 != 0) fail(Err::OddHostOrder, "host order must be even");

    int k = g.k;
    int r = (k - g.c) % k; // -b sits at (1, r); r = -c mod k

    // H1 = C_0 - {(0,0)(0,1)} + C_1 - {(1,r)(1,r+1)} + {(1,r)(0,0), (1,r+1)(0,1)}
    std::vector<int> h1;
    h1.reserve(2 * k);
    for (int j = 1; j < k; ++j) h1.push_back(g.vid(0, j));
    h1.push_back(g.vid(0, 0));
    for (int j = 0; j < k; ++j) h1.push_back(g.vid(1, ((r - j) % k + k) % k));

    std::set<std::pair<int, int>> h1_edges;
    for (size_t i = 0; i < h1.size(); ++i) {
        int u = h1[i], v = h1[(i + 1) % h1.size()];
        h1_edges.insert({std::min(u, v), std::max(u, v)});
    }

    MultiGraph host = g.to_multigraph();
    std::set<std::pair<int, int>> h2_edges;
    for (const auto& [e, m] : host.edges()) {
        if (m != 1) fail(Err::Internal, "gamma21 host must be simple");
        if (!h1_edges.count(e)) h2_edges.insert(e);
    }

    auto h2_cycles = walk_two_factor(g.n(), h2_edges);
    if (h2_cycles.size() != 1 || (int)h2_cycles[0].size() != g.n())
        fail(Err::Internal, "gamma21 complement is not a Hamilton cycle");

    Decomposition d;
    d.cycles.push_back(std::move(h1));
    d.cycles.push_back(std::move(h2_cycles[0]));
    canonicalize(d);
    return d;
}

Decomposition decompose_base(const GammaGraph& g) {
    int a = g.alpha, b = g.beta();
    if (a == 2 && b == 1) return decompose_gamma21(g);
    if (a == 1 && b == 2) {
        auto tr = transpose(g);
        Decomposition d = decompose_gamma21(tr.g);
        Decomposition pulled = relabel(d, tr.inv);
        canonicalize(pulled);
        return pulled;
    }
    fail(Err::BadShape, "decompose_base needs {alpha, beta} = {1, 2}");
}

std::optional<Q2Certificate> certify_quad(const MultiGraph& g, const Decomposition& d,
                                          const std::array<int, 4>& quad) {
    const auto& [v1, v2, v3, v4] = quad;
    std::set<int> distinct{v1, v2, v3, v4};
    if (distinct.size() != 4) return std::nullopt;
    if (!g.has_edge(v1, v2) || !g.has_edge(v2, v3) || !g.has_edge(v3, v4) || !g.has_edge(v4, v1))
        return std::nullopt;

    for (int first : {0, 1}) {
        Q2Certificate cert;
        cert.quad = quad;
        cert.pairing = {first, 1 - first};
        for (auto diag : {std::array<int, 2>{v1, v3}, std::array<int, 2>{v2, v4}}) {
            cert.diagonal = diag;
            if (verify_q2_certificate(g, d, cert)) return cert;
        }
    }
    return std::nullopt;
}

std::optional<Q2Certificate> find_q2_certificate(const MultiGraph& g, const Decomposition& d,
                                                 int a, int b) {
    if (d.cycles.size() != 2) fail(Err::InvalidSpec, "need exactly 2 cycles");
    int n = g.vertex_count();
    if (n % 2 != 0) fail(Err::OddHostOrder, "diagonal distance parity undefined");
    for (int x = 0; x < n; ++x) {
        std::array<int, 4> quad{x, (x + a) % n, (x + a + b) % n, (x + b) % n};
        if (auto cert = certify_quad(g, d, quad)) return cert;
    }
    return std::nullopt;
}

std::optional<Q2Certificate> find_q2_certificate(const MultiGraph& g, const Decomposition& d) {
    if (d.cycles.size() != 2) fail(Err::InvalidSpec, "need exactly 2 cycles");
    if (g.vertex_count() % 2 != 0) fail(Err::OddHostOrder, "diagonal distance parity undefined");
    for (int v1 = 0; v1 < g.vertex_count(); ++v1)
        for (int v2 : g.neighbors(v1)) {
            if (v2 <= v1) continue;
            for (int v3 : g.neighbors(v2)) {
                if (v3 <= v1 || v3 == v2) continue;
                for (int v4 : g.neighbors(v3)) {
                    if (v4 <= v2 || v4 == v1 || v4 == v3 || !g.has_edge(v4, v1)) continue;
                    if (auto cert = certify_quad(g, d, {v1, v2, v3, v4})) return cert;
                }
            }
        }
    return std::nullopt;
}

// Used by the oracle's q2_required constraint.
std::optional<Q2Certificate> oracle_q2_scan(const MultiGraph& g, const Decomposition& d) {
    if (d.cycles.size() != 2 || g.vertex_count() % 2 != 0) return std::nullopt;
    return find_q2_certificate(g, d);
}

namespace {

SpecialBase make_special(const GammaGraph& gamma, const Decomposition& d) {
    MultiGraph host = gamma.to_multigraph();
    auto rep = verify_hamilton_decomposition(host, d);
    if (!rep.ok) fail(Err::Internal, "frozen special decomposition does not verify");
    if (!verify_q1(gamma, d)) fail(Err::Internal, "frozen special decomposition lacks Q1");
    auto cert = find_q2_certificate(host, d);
    if (!cert) fail(Err::Internal, "frozen special decomposition lacks Q2");
    return SpecialBase{gamma, d, *cert};
}

} // namespace

SpecialBase special_c3_box_c4() {
    // Oracle-found under Q1 and Q2 constraints; regeneration is tested.
    GammaGraph gamma{3, 4, 0};
    Decomposition d;
    d.cycles = {
        {0, 1, 2, 6, 5, 9, 10, 11, 3, 7, 4, 8},
        {0, 3, 2, 10, 6, 7, 11, 8, 9, 1, 5, 4},
    };
    return make_special(gamma, d);
}

SpecialBase special_gamma32() {
    GammaGraph gamma{3, 4, 2};
    Decomposition d;
    d.cycles = {
        {0, 1, 2, 6, 5, 4, 8, 9, 3, 7, 11, 10},
        {0, 3, 2, 8, 11, 1, 5, 9, 10, 6, 7, 4},
    };
    return make_special(gamma, d);
}

} // namespace hamdec
