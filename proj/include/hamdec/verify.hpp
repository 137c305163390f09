#ifndef HAMDEC_VERIFY_HPP
#define HAMDEC_VERIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hamdec/decomposition.hpp"
#include "hamdec/gamma.hpp"
#include "hamdec/multigraph.hpp"

namespace hamdec {

/// An odd alternating 4-cycle witness: quad (v1 v2 v3 v4) with edges v1v2,
/// v3v4 on cycle pairing[0] and v2v3, v4v1 on cycle pairing[1]; the diagonal
/// pair is at odd distance along both Hamilton cycles.
struct Q2Certificate {
    std::array<int, 4> quad{};
    std::array<int, 2> pairing{};
    std::array<int, 2> diagonal{};

    bool operator==(const Q2Certificate&) const = default;
};

struct VerificationReport {
    bool ok = true;
    // kind in {NotACycle, MissedVertex, NotAnEdge, EdgeOveruse, EdgeUnderuse,
    //          Q1Violation, Q2Invalid}
    std::vector<std::pair<std::string, std::string>> failures;

    void add(const std::string& kind, const std::string& detail) {
        ok = false;
        failures.emplace_back(kind, detail);
    }
};

/// ok iff every cycle is a spanning cycle of g and the cycles' edge multiset
/// equals E(g) exactly, multiplicities included.
VerificationReport verify_hamilton_decomposition(const MultiGraph& g, const Decomposition& d);

/// True iff for every i (with C_alpha = C_0) both cycles own at least one
/// second-kind edge between C_i and C_{i+1}.
bool verify_q1(const GammaGraph& gg, const Decomposition& d);

/// Q1 restricted to the matching between C_{alpha-1} and C_0 (what a lift
/// consumes).
bool verify_q1_last(const GammaGraph& gg, const Decomposition& d);

bool verify_q2_certificate(const MultiGraph& g, const Decomposition& d, const Q2Certificate& cert);

/// Common parity of the two arc lengths between u and v (0 even, 1 odd).
/// Requires an even cycle; throws ParityUndefined / VertexAbsent.
int cycle_distance_parity(const std::vector<int>& cycle, int u, int v);

struct OracleConstraints {
    std::optional<GammaGraph> q1_on;
    bool q2_required = false;
};

/// Exhaustive backtracking decomposition of a 2k-regular multigraph into k
/// Hamilton cycles; lexicographically first solution satisfying the
/// constraints, or nullopt. Documented limit: 16 vertices.
std::optional<Decomposition> brute_force_decomposition(const MultiGraph& g,
                                                       const OracleConstraints& constraints = {});

} // namespace hamdec

#endif
