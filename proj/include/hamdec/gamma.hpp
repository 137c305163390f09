#ifndef HAMDEC_GAMMA_HPP
#define HAMDEC_GAMMA_HPP

#include <utility>
#include <variant>
#include <vector>

#include "hamdec/multigraph.hpp"

namespace hamdec {

/// The Gamma(alpha, beta) coordinate form of a 4-regular circulant:
/// alpha vertical cycles of length k, parallel matchings between consecutive
/// cycles, the last matching shifted by c. beta = gcd(k, c), gcd(k, 0) = k.
struct GammaGraph {
    int alpha = 0; // number of a-cycles
    int k = 0;     // length of each a-cycle
    int c = 0;     // shift of the matching between C_{alpha-1} and C_0

    int n() const { return alpha * k; }
    int beta() const;

    /// Flat vertex index of (i, j), row-major.
    int vid(int i, int j) const { return i * k + j; }
    std::pair<int, int> coords(int v) const { return {v / k, v % k}; }

    /// First kind: (i,j)-(i,j+1). Second kind: (i,j)-(i+1,j) for i < alpha-1
    /// and (alpha-1,j)-(0,j+c).
    MultiGraph to_multigraph() const;

    /// Endpoints of the matching edge between C_i and C_{i+1} at column j
    /// (C_alpha = C_0; the last matching carries the c shift).
    std::pair<int, int> matching_edge(int i, int j) const;

    bool operator==(const GammaGraph&) const = default;
};

/// Bijection (i,j) <-> i*b + j*a (mod n) between gamma coordinates and the
/// group elements of the circulant.
struct LabelMap {
    int n = 0;
    int alpha = 0;
    int k = 0;
    int a = 0; // first-kind jump
    int b = 0; // second-kind jump
    std::vector<int> group_of; // flat gamma index -> group element
    std::vector<int> gamma_of; // group element -> flat gamma index
};

/// Label Circ(n, {a, b}) as a GammaGraph with a the first-kind jump.
/// c is found by walking the a-cycle C_0 to the vertex alpha*b.
std::pair<GammaGraph, LabelMap> to_gamma(int n, int a, int b);

struct TransposeResult {
    GammaGraph g;
    std::vector<int> fwd; // old flat index -> new flat index
    std::vector<int> inv; // new flat index -> old flat index
};

/// The isomorphic Gamma(beta, alpha) form: first- and second-kind edges swap
/// roles under the returned bijection.
TransposeResult transpose(const GammaGraph& g);

/// The three shapes whose reduction is not simple.
enum class NonSimpleKind {
    Loops_c0_alpha3,
    Doubled_c0_alpha4,
    Doubled_chalf_alpha3,
};

const char* non_simple_name(NonSimpleKind kind);

/// Delete the last two a-cycles and rewire the shifted matching; same k, c.
std::variant<GammaGraph, NonSimpleKind> reduce(const GammaGraph& g);

/// Inverse of reduce: insert two a-cycles before the shifted matching.
GammaGraph lift(const GammaGraph& g);

} // namespace hamdec

#endif
