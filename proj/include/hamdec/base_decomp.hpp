#ifndef HAMDEC_BASE_DECOMP_HPP
#define HAMDEC_BASE_DECOMP_HPP

#include <optional>
#include <span>

#include "hamdec/decomposition.hpp"
#include "hamdec/gamma.hpp"
#include "hamdec/verify.hpp"

namespace hamdec {

enum class Orientation { Clockwise, Anticlockwise };

/// Hamilton cycle decomposition of a Gamma(2,1) graph by the explicit
/// two-edge exchange between C_0 and C_1. Satisfies Q1.
Decomposition decompose_gamma21(const GammaGraph& g);

/// Base decomposition for Gamma(alpha, beta) with {alpha, beta} = {1, 2}:
/// alpha = 2 uses the formula directly, alpha = 1 transposes first and pulls
/// the result back through the bijection.
Decomposition decompose_base(const GammaGraph& g);

/// Scan the quads (x, x+a, x+a+b, x+b) of a circulant host for an odd
/// alternating 4-cycle; first hit by smallest x, then smallest diagonal.
std::optional<Q2Certificate> find_q2_certificate(const MultiGraph& g, const Decomposition& d,
                                                 int a, int b);

/// General-host variant: scans all 4-cycles in canonical order.
std::optional<Q2Certificate> find_q2_certificate(const MultiGraph& g, const Decomposition& d);

/// Check a specific quad; returns the certificate if it qualifies.
std::optional<Q2Certificate> certify_quad(const MultiGraph& g, const Decomposition& d,
                                          const std::array<int, 4>& quad);

struct SpecialBase {
    GammaGraph gamma;
    Decomposition decomp;
    Q2Certificate cert;
};

/// The 12-vertex graph C3 box C4 = Gamma(3,4) with c = 0, with a stored
/// decomposition satisfying Q1 and Q2 (oracle-found, frozen).
SpecialBase special_c3_box_c4();

/// The unique 12-vertex Gamma(3,2) graph (k = 4, c = 2), stored likewise.
SpecialBase special_gamma32();

/// Relabel a decomposition through a vertex bijection (map[v] = new vertex).
Decomposition relabel(const Decomposition& d, const std::vector<int>& map);

} // namespace hamdec

#endif
