#ifndef HAMDEC_PRODUCT_DECOMP_HPP
#define HAMDEC_PRODUCT_DECOMP_HPP

#include <vector>

#include "hamdec/decomposition.hpp"
#include "hamdec/jump_pairing.hpp"
#include "hamdec/multigraph.hpp"
#include "hamdec/verify.hpp"

namespace hamdec {

/// Hamilton cycles of a multigraph host; a cycle listed with multiplicity m
/// stands for m identical Hamilton cycles.
struct HamiltonCycleSet {
    std::vector<std::vector<int>> cycles;
    std::vector<int> multiplicity; // empty means all 1
};

/// Decompose C_n x G into 4 Hamilton cycles, where D is a 2-cycle Hamilton
/// decomposition of G and cert an odd alternating 4-cycle for it.
/// Host vertex (t, u) is flattened as t*|V(G)| + u.
Decomposition decompose_cn_cross_g(int n, const MultiGraph& g, const Decomposition& d,
                                   const Q2Certificate& cert);

struct ProvenanceTag {
    int pair = 0;    // index into the jump pairing
    int h_cycle = 0; // index of the H cycle, counted with multiplicity

    bool operator==(const ProvenanceTag&) const = default;
};

struct ProductDecomposition {
    MultiGraph host; // tensor_product(G, H)
    Decomposition cycles;
    std::vector<ProvenanceTag> provenance; // one tag per cycle
};

/// Main theorem pipeline: G a circulant with property Q, H any Hamilton
/// decomposable multigraph given by its cycles.
ProductDecomposition decompose_product(const CirculantSpec& gspec, const MultiGraph& h,
                                       const HamiltonCycleSet& h_cycles);

} // namespace hamdec

#endif
