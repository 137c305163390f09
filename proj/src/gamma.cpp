#include "hamdec/gamma.hpp"

#include <numeric>

#include "hamdec/errors.hpp"

namespace hamdec {

int GammaGraph::beta() const {
    return c == 0 ? k : std::gcd(k, c);
}

MultiGraph GammaGraph::to_multigraph() const {
    if (alpha < 1 || k < 3 || c < 0 || c >= k) fail(Err::InvalidSpec, "malformed GammaGraph");
    MultiGraph g(n());
    for (int i = 0; i < alpha; ++i)
        for (int j = 0; j < k; ++j) g.add_edge(vid(i, j), vid(i, (j + 1) % k));
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i + 1 < alpha; ++i) g.add_edge(vid(i, j), vid(i + 1, j));
        g.add_edge(vid(alpha - 1, j), vid(0, (j + c) % k));
    }
    return g;
}

std::pair<int, int> GammaGraph::matching_edge(int i, int j) const {
    if (i < alpha - 1) return {vid(i, j), vid(i + 1, j)};
    return {vid(alpha - 1, j), vid(0, (j + c) % k)};
}

std::pair<GammaGraph, LabelMap> to_gamma(int n, int a, int b) {
    if (n < 3) fail(Err::InvalidSpec, "order must be >= 3");
    auto norm = [n](int x) { return ((x % n) + n) % n; };
    a = norm(a);
    b = norm(b);
    if (a == 0 || b == 0) fail(Err::DegenerateJump, "zero jump");
    if (norm(2 * a) == 0 || norm(2 * b) == 0) fail(Err::DegenerateJump, "2a = 0 or 2b = 0");
    if (a == b || a == norm(-b)) fail(Err::DegenerateJump, "a = +-b");
    if (std::gcd(std::gcd(n, a), b) != 1) fail(Err::Disconnected, "gcd(n, a, b) != 1");

    int alpha = std::gcd(n, a);
    int k = n / alpha;

    // c solves alpha*b = c*a (mod n): walk the a-cycle C_0 from 0.
    int target = int((long long)alpha * b % n);
    int c = -1;
    for (int j = 0, v = 0; j < k; ++j, v = (v + a) % n)
        if (v == target) {
            c = j;
            break;
        }
    if (c < 0) fail(Err::Internal, "alpha*b not on the a-cycle C_0");

    GammaGraph gg{alpha, k, c};
    LabelMap map;
    map.n = n;
    map.alpha = alpha;
    map.k = k;
    map.a = a;
    map.b = b;
    map.group_of.assign(n, -1);
    map.gamma_of.assign(n, -1);
    for (int i = 0; i < alpha; ++i)
        for (int j = 0; j < k; ++j) {
            int x = int(((long long)i * b + (long long)j * a) % n);
            int flat = gg.vid(i, j);
            if (map.gamma_of[x] != -1) fail(Err::Internal, "label map not a bijection");
            map.group_of[flat] = x;
            map.gamma_of[x] = flat;
        }
    return {gg, map};
}

TransposeResult transpose(const GammaGraph& g) {
    int n = g.n();
    int beta = g.beta();
    int kp = n / beta;

    // The b-walk steps along second-kind edges: (i,j) -> (i+1,j), wrapping
    // (alpha-1,j) -> (0,j+c).
    auto bstep = [&](std::pair<int, int> ij) -> std::pair<int, int> {
        auto [i, j] = ij;
        if (i + 1 < g.alpha) return {i + 1, j};
        return {0, (j + g.c) % g.k};
    };

    TransposeResult res;
    res.g = GammaGraph{beta, kp, 0}; // c' filled below
    res.fwd.assign(n, -1);
    res.inv.assign(n, -1);

    // New row i' is the b-cycle through (0, i'); position j' counts b-steps.
    for (int ip = 0; ip < beta; ++ip) {
        std::pair<int, int> cur{0, ip};
        for (int jp = 0; jp < kp; ++jp) {
            int old_flat = g.vid(cur.first, cur.second);
            int new_flat = ip * kp + jp;
            if (res.fwd[old_flat] != -1) fail(Err::Internal, "transpose labeling collision");
            res.fwd[old_flat] = new_flat;
            res.inv[new_flat] = old_flat;
            cur = bstep(cur);
        }
    }

    // c' is the new position of the a-successor of the last new row's start:
    // a-step from (0, beta-1) lands on the new (0, c') by definition.
    int succ_flat = g.vid(0, beta % g.k);
    int cp = res.fwd[succ_flat];
    if (cp < 0 || cp / kp != 0) fail(Err::Internal, "transpose c' not on new row 0");
    res.g.c = cp % kp;

    // Edge transport must be exact.
    MultiGraph before = g.to_multigraph();
    MultiGraph after = res.g.to_multigraph();
    for (const auto& [e, m] : before.edges())
        if (after.multiplicity(res.fwd[e.first], res.fwd[e.second]) != m)
            fail(Err::Internal, "transpose is not an isomorphism");
    return res;
}

const char* non_simple_name(NonSimpleKind kind) {
    switch (kind) {
        case NonSimpleKind::Loops_c0_alpha3: return "Loops_c0_alpha3";
        case NonSimpleKind::Doubled_c0_alpha4: return "Doubled_c0_alpha4";
        case NonSimpleKind::Doubled_chalf_alpha3: return "Doubled_chalf_alpha3";
    }
    return "Unknown";
}

std::variant<GammaGraph, NonSimpleKind> reduce(const GammaGraph& g) {
    if (g.alpha < 3) fail(Err::AlphaTooSmall, "reduce needs alpha >= 3");

    // Scan the would-be reduced edge set for loops and duplicates.
    bool loops = false, doubled = false;
    int na = g.alpha - 2;
    {
        std::map<std::pair<int, int>, int> seen;
        auto put = [&](int u, int v) {
            if (u == v) {
                loops = true;
                return;
            }
            if (u > v) std::swap(u, v);
            if (++seen[{u, v}] > 1) doubled = true;
        };
        GammaGraph r{na, g.k, g.c};
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < g.k; ++j) put(r.vid(i, j), r.vid(i, (j + 1) % g.k));
        for (int j = 0; j < g.k; ++j) {
            for (int i = 0; i + 1 < na; ++i) put(r.vid(i, j), r.vid(i + 1, j));
            put(r.vid(na - 1, j), r.vid(0, (j + g.c) % g.k));
        }
    }

    // Cross-check against the closed-form cases.
    bool case1 = g.alpha == 3 && g.c == 0;
    bool case2 = g.alpha == 4 && g.c == 0;
    bool case3 = g.alpha == 3 && g.k % 2 == 0 && g.c == g.k / 2;
    if (loops != case1 || (doubled != (case2 || case3)))
        fail(Err::Internal, "non-simple reduction outside the three known cases");

    if (case1) return NonSimpleKind::Loops_c0_alpha3;
    if (case2) return NonSimpleKind::Doubled_c0_alpha4;
    if (case3) return NonSimpleKind::Doubled_chalf_alpha3;
    return GammaGraph{na, g.k, g.c};
}

GammaGraph lift(const GammaGraph& g) {
    return GammaGraph{g.alpha + 2, g.k, g.c};
}

} // namespace hamdec
