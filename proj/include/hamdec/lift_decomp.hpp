#ifndef HAMDEC_LIFT_DECOMP_HPP
#define HAMDEC_LIFT_DECOMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamdec/base_decomp.hpp"
#include "hamdec/decomposition.hpp"
#include "hamdec/gamma.hpp"
#include "hamdec/verify.hpp"

namespace hamdec {

/// How the second-kind edges of the reduced graph's last matching are
/// replaced by odd paths through the two new cycles.
struct LiftPlan {
    // replaced_columns[h] = matching columns owned by cycle h
    std::vector<std::vector<int>> replaced_columns;
    // paths[h][i] = full replacement path (vertex ids in the lifted graph)
    // for replaced_columns[h][i], endpoints included
    std::vector<std::vector<std::vector<int>>> paths;
};

/// Lift a decomposition of gr to lift(gr): every matching edge between
/// C_{alpha-1} and C_0 becomes an odd path with interior in the two new
/// cycles; interval sweeps make the paths partition the new vertices per
/// cycle and the new edges overall. Orientation picks the mirror variant.
Decomposition lift_decomposition(const GammaGraph& gr, const Decomposition& d, Orientation orient,
                                 LiftPlan* plan_out = nullptr);

struct PipelineStep {
    enum class Kind { Reduce, Transpose };
    Kind kind;
    GammaGraph before;
    GammaGraph after;
    std::vector<int> fwd; // transpose only: before-flat -> after-flat
    std::vector<int> inv;
};

struct TraceStep {
    std::string op; // to_gamma | reduce | non_simple | transpose | base | orientation
    std::string note;
    GammaGraph shape;
};

struct Pipeline4Result {
    MultiGraph graph;           // build_circulant(n, {a, b})
    Decomposition decomp;       // on the circulant's group labels
    Q2Certificate cert;
    GammaGraph gamma;           // the labeling the pipeline worked in
    LabelMap label;
    Decomposition gamma_decomp; // decomp in gamma coordinates (Q1 holds here)
    std::vector<TraceStep> trace;
};

/// Full reduce-then-lift pipeline: decompose Circ(n, {a, b}) into two
/// Hamilton cycles with Q1 and produce a Q2 certificate. The gamma labeling
/// takes the jump with odd gcd(n, .) as first kind; lift chains from the
/// single-cycle base then restore Q1 on every matching.
Pipeline4Result decompose_4regular(int n, int a, int b);

} // namespace hamdec

#endif
