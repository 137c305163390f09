#ifndef HAMDEC_JUMP_PAIRING_HPP
#define HAMDEC_JUMP_PAIRING_HPP

#include <utility>
#include <vector>

#include "hamdec/multigraph.hpp"

namespace hamdec {

/// Odd jumps paired with even jumps so each pair induces a connected
/// 4-regular circulant.
struct JumpPairing {
    std::vector<std::pair<int, int>> pairs; // (odd_jump, even_jump)

    bool operator==(const JumpPairing&) const = default;
};

/// Property Q analysis via maximum bipartite matching between odd and even
/// jumps; deterministic (lexicographically smallest matching).
JumpPairing check_property_q(const CirculantSpec& spec);

/// Split a circulant into the 4-regular circulants of its pairing; the edge
/// multisets partition the original's.
std::vector<CirculantSpec> split_by_pairing(const CirculantSpec& spec, const JumpPairing& pairing);

} // namespace hamdec

#endif
