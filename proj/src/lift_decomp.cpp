#include "hamdec/lift_decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hamdec/errors.hpp"

namespace hamdec {

namespace {

int wrap(int x, int k) { return ((x % k) + k) % k; }

// Matching columns of the last matching owned by each cycle. The matching
// edge at column j joins (alpha-1, j) and (0, j+c).
std::vector<std::vector<int>> matching_columns(const GammaGraph& g, const Decomposition& d) {
    int k = g.k, c = g.c, al = g.alpha;
    if (al == 1 && (c <= 1 || c >= k - 1 || 2 * c == k))
        fail(Err::BadShape, "chord shift degenerate for a single-cycle gamma");
    std::vector<std::vector<int>> cols(d.cycles.size());
    std::vector<char> claimed(k, 0);
    for (size_t h = 0; h < d.cycles.size(); ++h) {
        const auto& cyc = d.cycles[h];
        for (size_t i = 0; i < cyc.size(); ++i) {
            auto [iu, ju] = g.coords(cyc[i]);
            auto [iv, jv] = g.coords(cyc[(i + 1) % cyc.size()]);
            int col = -1;
            if (al >= 2) {
                if (iu == al - 1 && iv == 0 && jv == wrap(ju + c, k)) col = ju;
                else if (iv == al - 1 && iu == 0 && ju == wrap(jv + c, k)) col = jv;
            } else {
                if (jv == wrap(ju + c, k)) col = ju;
                else if (ju == wrap(jv + c, k)) col = jv;
            }
            if (col >= 0) {
                if (claimed[col]) fail(Err::Internal, "matching column claimed twice");
                claimed[col] = 1;
                cols[h].push_back(col);
            }
        }
        std::sort(cols[h].begin(), cols[h].end());
    }
    for (int j = 0; j < k; ++j)
        if (!claimed[j]) fail(Err::Internal, "matching column unused by the decomposition");
    return cols;
}

} // namespace

Decomposition lift_decomposition(const GammaGraph& gr, const Decomposition& d, Orientation orient,
                                 LiftPlan* plan_out) {
    if (d.cycles.size() != 2) fail(Err::InvalidSpec, "lift needs a 2-cycle decomposition");
    int k = gr.k, c = gr.c, al = gr.alpha;
    GammaGraph up = lift(gr);

    auto cols = matching_columns(gr, d);
    for (const auto& cl : cols)
        if (cl.empty())
            fail(Err::Q1Missing, "a cycle owns no edge of the matching between C_{alpha-1} and C_0");

    // Interval sweep: cycle h's path at column j covers columns from j up to
    // (exclusive) the next column of cols[h], in both new rows. Clockwise
    // sweeps ascending columns, anticlockwise descending.
    LiftPlan plan;
    plan.replaced_columns = cols;
    plan.paths.resize(2);
    // paths indexed by column for splicing
    std::vector<std::vector<int>> path_at(k);

    for (int h = 0; h < 2; ++h) {
        const auto& J = cols[h];
        std::vector<char> inJ(k, 0);
        for (int j : J) inJ[j] = 1;
        plan.paths[h].resize(J.size());
        for (size_t idx = 0; idx < J.size(); ++idx) {
            int j = J[idx];
            int step = orient == Orientation::Clockwise ? 1 : -1;
            // sweep from j until the column before the next element of J
            std::vector<int> colseq{j};
            for (int x = wrap(j + step, k); !inJ[x]; x = wrap(x + step, k)) colseq.push_back(x);
            std::vector<int> path;
            path.push_back(al >= 2 ? up.vid(al - 1, j) : up.vid(0, j));
            for (int x : colseq) path.push_back(up.vid(al, x));
            for (auto it = colseq.rbegin(); it != colseq.rend(); ++it)
                path.push_back(up.vid(al + 1, *it));
            path.push_back(up.vid(0, wrap(j + c, k)));
            plan.paths[h][idx] = path;
            path_at[j] = path;
        }
    }

    // Splice: replace every matching edge occurrence by its path interior.
    Decomposition out;
    out.cycles.resize(2);
    for (int h = 0; h < 2; ++h) {
        const auto& cyc = d.cycles[h];
        std::vector<int>& nc = out.cycles[h];
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            nc.push_back(u);
            auto [iu, ju] = gr.coords(u);
            auto [iv, jv] = gr.coords(v);
            int col = -1;
            bool forward = true;
            if (al >= 2) {
                if (iu == al - 1 && iv == 0 && jv == wrap(ju + c, k)) col = ju;
                else if (iv == al - 1 && iu == 0 && ju == wrap(jv + c, k)) {
                    col = jv;
                    forward = false;
                }
            } else {
                if (iu == 0 && iv == 0 && jv == wrap(ju + c, k)) col = ju;
                else if (iu == 0 && iv == 0 && ju == wrap(jv + c, k)) {
                    col = jv;
                    forward = false;
                }
            }
            if (col < 0) continue;
            const auto& path = path_at[col];
            if (path.empty()) fail(Err::Internal, "no replacement path for matching column");
            if (forward)
                nc.insert(nc.end(), path.begin() + 1, path.end() - 1);
            else
                nc.insert(nc.end(), path.rbegin() + 1, path.rend() - 1);
        }
        if ((int)nc.size() != up.n()) fail(Err::Internal, "lifted cycle has wrong length");
    }

    if (plan_out) *plan_out = plan;
    return out;
}

namespace {

struct Shape {
    int alpha, beta, k, c;
};

bool is_formula_base(const GammaGraph& g) {
    int a = g.alpha, b = g.beta();
    return (a == 2 && b == 1) || (a == 1 && b == 2);
}

bool is_c3c4_base(const GammaGraph& g) { return g.alpha == 3 && g.k == 4 && g.c == 0; }
bool is_gamma32_base(const GammaGraph& g) { return g.alpha == 3 && g.k == 4 && g.c == 2; }

Decomposition base_decomposition(const GammaGraph& g) {
    if (is_formula_base(g)) return decompose_base(g);
    if (is_c3c4_base(g)) {
        auto sb = special_c3_box_c4();
        return sb.decomp;
    }
    if (is_gamma32_base(g)) {
        auto sb = special_gamma32();
        return sb.decomp;
    }
    fail(Err::Internal, "no base decomposition for this shape");
}

const char* base_kind(const GammaGraph& g) {
    if (is_c3c4_base(g)) return "c3_box_c4";
    if (is_gamma32_base(g)) return "gamma_3_2";
    return g.alpha == 2 ? "gamma_2_1" : "gamma_1_2";
}

} // namespace

Pipeline4Result decompose_4regular(int n, int a, int b) {
    if (n % 2 != 0) fail(Err::OddHostOrder, "decompose_4regular needs even order");
    if ((a & 1) == (b & 1)) fail(Err::SameParityJumps, "jumps must have opposite parity");
    CirculantSpec spec{n, {std::min(a, b), std::max(a, b)}};
    spec.validate();

    // Work in the labeling whose first-kind jump has odd gcd(n, .): the lift
    // chain then grows from a single-cycle base and re-creates every matching,
    // which is what keeps Q1 intact on all of them.
    if (std::gcd(n, a) % 2 == 0) std::swap(a, b);

    auto [g0, label] = to_gamma(n, a, b);

    std::vector<PipelineStep> steps;
    std::vector<TraceStep> trace;
    trace.push_back({"to_gamma", "", g0});
    GammaGraph cur = g0;
    for (int guard = 0;; ++guard) {
        if (guard > 200) fail(Err::Internal, "reduction chain does not terminate");
        if (is_formula_base(cur) || is_c3c4_base(cur) || is_gamma32_base(cur)) break;
        bool reduced = false;
        if (cur.alpha >= 3) {
            auto res = reduce(cur);
            if (auto* next = std::get_if<GammaGraph>(&res)) {
                steps.push_back({PipelineStep::Kind::Reduce, cur, *next, {}, {}});
                cur = *next;
                trace.push_back({"reduce", "", cur});
                reduced = true;
            } else {
                trace.push_back({"non_simple", non_simple_name(std::get<NonSimpleKind>(res)), cur});
            }
        }
        if (!reduced) {
            auto tr = transpose(cur);
            steps.push_back({PipelineStep::Kind::Transpose, cur, tr.g, tr.fwd, tr.inv});
            cur = tr.g;
            trace.push_back({"transpose", "", cur});
        }
    }
    trace.push_back({"base", base_kind(cur), cur});

    MultiGraph circulant = build_circulant(spec);
    Decomposition base = base_decomposition(cur);

    for (Orientation orient : {Orientation::Clockwise, Orientation::Anticlockwise}) {
        Decomposition d = base;
        bool ok = true;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            if (it->kind == PipelineStep::Kind::Transpose) {
                d = relabel(d, it->inv);
            } else {
                if (!verify_q1_last(it->after, d)) {
                    ok = false;
                    break;
                }
                d = lift_decomposition(it->after, d, orient);
            }
        }
        if (!ok) continue;

        Decomposition on_circ = relabel(d, label.group_of);
        auto rep = verify_hamilton_decomposition(circulant, on_circ);
        if (!rep.ok) fail(Err::Internal, "pipeline output failed verification");
        if (!verify_q1(g0, d)) fail(Err::Internal, "pipeline output lost Q1");

        auto cert = find_q2_certificate(circulant, on_circ, a, b);
        if (!cert) cert = find_q2_certificate(circulant, on_circ);
        if (cert) {
            Pipeline4Result res;
            res.graph = std::move(circulant);
            res.decomp = std::move(on_circ);
            res.cert = *cert;
            res.gamma = g0;
            res.label = label;
            res.gamma_decomp = std::move(d);
            res.trace = std::move(trace);
            res.trace.push_back({"orientation",
                                 orient == Orientation::Clockwise ? "clockwise" : "anticlockwise",
                                 g0});
            return res;
        }
    }
    fail(Err::ConstructionFailed, "no orientation yields a Q2 certificate for Circ(" +
                                      std::to_string(n) + ",{" + std::to_string(a) + "," +
                                      std::to_string(b) + "})");
}

} // namespace hamdec
