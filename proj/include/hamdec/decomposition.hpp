#ifndef HAMDEC_DECOMPOSITION_HPP
#define HAMDEC_DECOMPOSITION_HPP

#include <vector>

namespace hamdec {

/// An ordered list of Hamilton cycles given as cyclic vertex sequences.
/// Claims to partition the host's edge multiset; see verify.hpp.
struct Decomposition {
    std::vector<std::vector<int>> cycles;

    bool operator==(const Decomposition&) const = default;
};

} // namespace hamdec

#endif
