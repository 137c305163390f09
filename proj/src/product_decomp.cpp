#include "hamdec/product_decomp.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "hamdec/base_decomp.hpp"
#include "hamdec/errors.hpp"
#include "hamdec/lift_decomp.hpp"

namespace hamdec {

namespace {

using Edge = std::pair<int, int>;

Edge mk_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// The four diagonal 2-factors of C_n x G for a 2-cycle decomposition of G,
// plus the alternating-exchange moves that merge their cycles.
struct ProductMerger {
    int n, m, N;
    std::vector<std::vector<int>> h; // h[0], h[1]: the two G cycles
    std::array<std::set<Edge>, 4> F; // 0:F1P 1:F1M 2:F2P 3:F2M
    std::array<std::vector<int>, 4> comp; // vertex -> component id per factor
    std::array<int, 4> ncomp{};

    ProductMerger(int n_, const MultiGraph& g, const Decomposition& d)
        : n(n_), m(g.vertex_count()), N(n_ * g.vertex_count()) {
        h = {d.cycles[0], d.cycles[1]};
        for (int u = 0; u < 2; ++u) {
            const auto& seq = h[u];
            for (int t = 0; t < n; ++t)
                for (int p = 0; p < m; ++p) {
                    int a = vid(t, seq[p]);
                    int b = vid((t + 1) % n, seq[(p + 1) % m]);
                    int c = vid(t, seq[(p + 1) % m]);
                    int e = vid((t + 1) % n, seq[p]);
                    F[2 * u + 0].insert(mk_edge(a, b));
                    F[2 * u + 1].insert(mk_edge(c, e));
                }
        }
        rebuild();
    }

    int vid(int t, int u) const { return ((t % n + n) % n) * m + u; }

    void rebuild() {
        for (int f = 0; f < 4; ++f) {
            DisjointSet ds(N);
            for (auto [u, v] : F[f]) ds.unite(u, v);
            comp[f].assign(N, -1);
            int cnt = 0;
            std::map<int, int> root_id;
            for (int v = 0; v < N; ++v) {
                int r = ds.find(v);
                auto it = root_id.find(r);
                if (it == root_id.end()) it = root_id.emplace(r, cnt++).first;
                comp[f][v] = it->second;
            }
            ncomp[f] = cnt;
        }
    }

    bool all_hamilton() const {
        return ncomp[0] == 1 && ncomp[1] == 1 && ncomp[2] == 1 && ncomp[3] == 1;
    }

    int total_components() const { return ncomp[0] + ncomp[1] + ncomp[2] + ncomp[3]; }

    int factor_of(const Edge& e) const {
        for (int f = 0; f < 4; ++f)
            if (F[f].count(e)) return f;
        return -1;
    }

    // Exchange along a closed edge list alternating between two factors.
    // Preserves 2-regularity and spanning; returns false when the edges do
    // not currently alternate.
    bool apply_exchange(const std::vector<Edge>& cycle_edges) {
        std::set<Edge> dedupe(cycle_edges.begin(), cycle_edges.end());
        if (dedupe.size() != cycle_edges.size()) return false;
        int x = factor_of(cycle_edges[0]);
        int y = factor_of(cycle_edges[1]);
        if (x < 0 || y < 0 || x == y) return false;
        for (size_t i = 0; i < cycle_edges.size(); ++i)
            if (factor_of(cycle_edges[i]) != (i % 2 == 0 ? x : y)) return false;
        for (size_t i = 0; i < cycle_edges.size(); ++i) {
            if (i % 2 == 0) {
                F[x].erase(cycle_edges[i]);
                F[y].insert(cycle_edges[i]);
            } else {
                F[y].erase(cycle_edges[i]);
                F[x].insert(cycle_edges[i]);
            }
        }
        rebuild();
        return true;
    }

    // Intra-universe exchange between the two diagonal factors of C_n x H_u.
    std::vector<Edge> intra_edges(int u, int t, int p) const {
        const auto& seq = h[u];
        int a = vid(t, seq[p]);
        int b = vid(t + 1, seq[(p + 1) % m]);
        int c = vid(t + 2, seq[p]);
        int d = vid(t + 1, seq[(p + m - 1) % m]);
        return {mk_edge(a, b), mk_edge(b, c), mk_edge(c, d), mk_edge(d, a)};
    }

    // Lifted copy of a quad (0/+-1 layer offset pattern).
    std::vector<Edge> quad_edges(const std::array<int, 4>& quad, int t,
                                 const std::array<int, 3>& signs) const {
        std::array<int, 4> verts;
        int off = 0;
        verts[0] = vid(t, quad[0]);
        for (int i = 0; i < 3; ++i) {
            off += signs[i];
            verts[i + 1] = vid(t + off, quad[i + 1]);
        }
        if (std::abs(off) != 1) return {}; // closing edge must step one layer
        std::vector<Edge> e;
        for (int i = 0; i < 4; ++i) e.push_back(mk_edge(verts[i], verts[(i + 1) % 4]));
        return e;
    }

    // Alternating exchange threading every other layer through the quad;
    // the odd diagonal makes it cross the layer-position parity classes.
    std::vector<Edge> grand_edges(const std::array<int, 4>& quad, int t0, int dir) const {
        std::vector<Edge> e;
        for (int i = 0; i < n / 2; ++i) {
            int s = t0 + 2 * i * dir;
            e.push_back(mk_edge(vid(s, quad[0]), vid(s + dir, quad[1])));
            e.push_back(mk_edge(vid(s + dir, quad[1]), vid(s, quad[2])));
            e.push_back(mk_edge(vid(s, quad[2]), vid(s + dir, quad[3])));
            e.push_back(mk_edge(vid(s + dir, quad[3]), vid(s + 2 * dir, quad[0])));
        }
        return e;
    }

    std::vector<int> extract_cycle(int f) const {
        std::vector<std::array<int, 2>> nb(N, {-1, -1});
        for (auto [u, v] : F[f]) {
            auto push = [&](int a, int b) {
                if (nb[a][0] < 0)
                    nb[a][0] = b;
                else if (nb[a][1] < 0)
                    nb[a][1] = b;
                else
                    fail(Err::Internal, "factor is not 2-regular");
            };
            push(u, v);
            push(v, u);
        }
        std::vector<int> cyc{0};
        int prev = -1, cur = 0;
        for (int i = 1; i < N; ++i) {
            int nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
            if (nxt < 0) fail(Err::Internal, "factor cycle broke");
            cyc.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        if (cyc.size() > 2 && cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
        return cyc;
    }
};

// All odd alternating 4-cycles of (g, d), certificate's quad first.
std::vector<std::array<int, 4>> odd_quads(const MultiGraph& g, const Decomposition& d,
                                          const Q2Certificate& cert) {
    std::vector<std::array<int, 4>> quads{cert.quad};
    for (int v1 = 0; v1 < g.vertex_count(); ++v1)
        for (int v2 : g.neighbors(v1)) {
            if (v2 <= v1) continue;
            for (int v3 : g.neighbors(v2)) {
                if (v3 <= v1 || v3 == v2) continue;
                for (int v4 : g.neighbors(v3)) {
                    if (v4 <= v2 || v4 == v1 || v4 == v3 || !g.has_edge(v4, v1)) continue;
                    std::array<int, 4> q{v1, v2, v3, v4};
                    if (q != cert.quad && certify_quad(g, d, q)) quads.push_back(q);
                }
            }
        }
    return quads;
}

constexpr std::array<std::array<int, 3>, 6> kQuadPatterns{{
    {1, -1, 1},
    {1, -1, -1},
    {1, 1, -1},
    {-1, 1, 1},
    {-1, 1, -1},
    {-1, -1, 1},
}};

std::array<int, 4> rotate_quad(const std::array<int, 4>& q, int r, bool reflect) {
    std::array<int, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = q[(r + (reflect ? 4 - i : i)) % 4];
    return out;
}

} // namespace

Decomposition decompose_cn_cross_g(int n, const MultiGraph& g, const Decomposition& d,
                                   const Q2Certificate& cert) {
    if (n % 2 != 0) fail(Err::OddN, "the cycle factor must have even order");
    if (n < 4) fail(Err::InvalidSpec, "the cycle factor needs at least 4 vertices");
    int m = g.vertex_count();
    if (m % 2 != 0 || m < 6) fail(Err::InvalidSpec, "G must have even order >= 6");
    for (const auto& [e, mult] : g.edges())
        if (mult != 1) fail(Err::InvalidSpec, "G must be simple");
    if (d.cycles.size() != 2 || !verify_hamilton_decomposition(g, d).ok)
        fail(Err::InvalidSpec, "D is not a 2-cycle Hamilton decomposition of G");
    if (!verify_q2_certificate(g, d, cert))
        fail(Err::CertificateInvalid, "certificate does not verify against (G, D)");

    auto quads = odd_quads(g, d, cert);
    ProductMerger pm(n, g, d);

    // Candidate exchanges in a fixed order: quad 4-swaps, intra diagonal
    // swaps, then the layer-threading grand exchanges.
    std::vector<std::vector<Edge>> moves;
    {
        std::set<std::vector<Edge>> seen;
        auto push = [&](std::vector<Edge> e) {
            if (e.empty()) return;
            std::vector<Edge> key = e;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) moves.push_back(std::move(e));
        };
        for (const auto& q : quads)
            for (int r = 0; r < 4; ++r)
                for (int refl = 0; refl < 2; ++refl) {
                    auto qq = rotate_quad(q, r, refl != 0);
                    for (const auto& pat : kQuadPatterns)
                        for (int t = 0; t < n; ++t) push(pm.quad_edges(qq, t, pat));
                }
        for (int u = 0; u < 2; ++u)
            for (int t = 0; t < n; ++t)
                for (int p = 0; p < m; ++p) push(pm.intra_edges(u, t, p));
        for (const auto& q : quads)
            for (int r = 0; r < 4; ++r)
                for (int refl = 0; refl < 2; ++refl) {
                    auto qq = rotate_quad(q, r, refl != 0);
                    for (int dir : {1, -1})
                        for (int t0 = 0; t0 < 2; ++t0) push(pm.grand_edges(qq, t0, dir));
                }
    }

    auto snapshot = [&]() { return pm.F; };
    auto restore = [&](const std::array<std::set<Edge>, 4>& s) {
        pm.F = s;
        pm.rebuild();
    };

    // Greedy on total component count, strict decrease per step.
    auto run_greedy = [&]() {
        while (!pm.all_hamilton()) {
            int before = pm.total_components();
            int best = -1, best_gain = 0;
            for (size_t i = 0; i < moves.size(); ++i) {
                auto saved = snapshot();
                if (!pm.apply_exchange(moves[i])) continue;
                int gain = before - pm.total_components();
                restore(saved);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = (int)i;
                }
            }
            if (best < 0) return false;
            pm.apply_exchange(moves[best]);
        }
        return true;
    };

    if (!run_greedy()) {
        // Plateau: spend one neutral exchange, then require strict progress.
        bool done = false;
        auto stuck = snapshot();
        int before = pm.total_components();
        for (size_t i = 0; i < moves.size() && !done; ++i) {
            restore(stuck);
            if (!pm.apply_exchange(moves[i])) continue;
            if (pm.total_components() > before) continue;
            if (run_greedy()) done = true;
        }
        if (!done) fail(Err::ConstructionFailed, "no exchange merges the remaining components");
    }

    Decomposition out;
    for (int f = 0; f < 4; ++f) out.cycles.push_back(pm.extract_cycle(f));

    MultiGraph cn(n);
    for (int t = 0; t < n; ++t) cn.add_edge(t, (t + 1) % n);
    MultiGraph host = tensor_product(cn, g);
    if (!verify_hamilton_decomposition(host, out).ok)
        fail(Err::Internal, "product decomposition failed verification");
    return out;
}

ProductDecomposition decompose_product(const CirculantSpec& gspec, const MultiGraph& h,
                                       const HamiltonCycleSet& h_cycles) {
    gspec.validate();
    int ng = gspec.n;
    int nh = h.vertex_count();
    if (ng % 2 != 0 || nh % 2 != 0)
        fail(Err::OddOrderUnsupported, "both factors must have even order");

    JumpPairing pairing;
    try {
        pairing = check_property_q(gspec);
    } catch (const Error& e) {
        fail(Err::PropertyQFailed, e.what());
    }

    // Expand multiplicities into literal cycle copies.
    std::vector<std::vector<int>> hseq;
    for (size_t i = 0; i < h_cycles.cycles.size(); ++i) {
        int mult = h_cycles.multiplicity.empty() ? 1 : h_cycles.multiplicity.at(i);
        if (mult < 1) fail(Err::HNotDecomposition, "cycle multiplicity must be >= 1");
        for (int r = 0; r < mult; ++r) hseq.push_back(h_cycles.cycles[i]);
    }
    Decomposition hd{hseq};
    if (!verify_hamilton_decomposition(h, hd).ok)
        fail(Err::HNotDecomposition, "H cycles do not decompose H");

    auto specs = split_by_pairing(gspec, pairing);

    ProductDecomposition out;
    out.host = tensor_product(build_circulant(gspec), h);
    for (size_t i = 0; i < specs.size(); ++i) {
        auto [odd, even] = pairing.pairs[i];
        auto pipeline = decompose_4regular(ng, even, odd);
        Decomposition block = decompose_cn_cross_g(nh, pipeline.graph, pipeline.decomp,
                                                   pipeline.cert);
        for (size_t j = 0; j < hseq.size(); ++j) {
            const auto& seq = hseq[j];
            for (const auto& cyc : block.cycles) {
                std::vector<int> mapped;
                mapped.reserve(cyc.size());
                for (int v : cyc) {
                    int t = v / ng, u = v % ng;
                    mapped.push_back(u * nh + seq[t]);
                }
                out.cycles.cycles.push_back(std::move(mapped));
                out.provenance.push_back({(int)i, (int)j});
            }
        }
    }

    if (!verify_hamilton_decomposition(out.host, out.cycles).ok)
        fail(Err::Internal, "product decomposition failed verification");
    return out;
}

} // namespace hamdec
