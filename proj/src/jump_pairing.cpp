#include "hamdec/jump_pairing.hpp"

#include <algorithm>
#include <numeric>

#include "hamdec/errors.hpp"

namespace hamdec {

namespace {

bool admissible(int n, int odd, int even) {
    return std::gcd(std::gcd(n, odd), even) == 1;
}

// Kuhn's augmenting-path matching on the admissibility graph.
bool try_kuhn(int u, const std::vector<std::vector<char>>& adm, std::vector<char>& used,
              std::vector<int>& match_of_even) {
    for (size_t v = 0; v < adm[u].size(); ++v) {
        if (!adm[u][v] || used[v]) continue;
        used[v] = 1;
        if (match_of_even[v] < 0 ||
            try_kuhn(match_of_even[v], adm, used, match_of_even)) {
            match_of_even[v] = u;
            return true;
        }
    }
    return false;
}

bool has_perfect_matching(const std::vector<std::vector<char>>& adm) {
    size_t no = adm.size();
    if (no == 0) return true;
    size_t ne = adm[0].size();
    if (no != ne) return false;
    std::vector<int> match_of_even(ne, -1);
    for (size_t u = 0; u < no; ++u) {
        std::vector<char> used(ne, 0);
        if (!try_kuhn(u, adm, used, match_of_even)) return false;
    }
    return true;
}

} // namespace

JumpPairing check_property_q(const CirculantSpec& spec) {
    spec.validate();
    for (int j : spec.jumps)
        if (2 * j == spec.n) fail(Err::HalfJumpPresent, "jump n/2 cannot be paired");

    std::vector<int> odds, evens;
    for (int j : spec.jumps) (j % 2 ? odds : evens).push_back(j);
    if (odds.size() != evens.size())
        fail(Err::UnbalancedJumps, "odd and even jump counts differ");

    size_t m = odds.size();
    std::vector<std::vector<char>> adm(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) adm[i][j] = admissible(spec.n, odds[i], evens[j]);

    if (!has_perfect_matching(adm)) fail(Err::NoValidPairing, "no perfect odd-even pairing");

    // Lexicographically smallest: fix partners of ascending odd jumps,
    // committing the smallest even partner that keeps the rest matchable.
    JumpPairing out;
    std::vector<char> even_taken(m, 0);
    for (size_t i = 0; i < m; ++i) {
        bool done = false;
        for (size_t j = 0; j < m && !done; ++j) {
            if (even_taken[j] || !adm[i][j]) continue;
            // residual admissibility without row i and column j
            std::vector<std::vector<char>> rest;
            for (size_t i2 = i + 1; i2 < m; ++i2) {
                std::vector<char> row;
                for (size_t j2 = 0; j2 < m; ++j2)
                    if (!even_taken[j2] && j2 != j) row.push_back(adm[i2][j2]);
                rest.push_back(std::move(row));
            }
            if (has_perfect_matching(rest)) {
                even_taken[j] = 1;
                out.pairs.emplace_back(odds[i], evens[j]);
                done = true;
            }
        }
        if (!done) fail(Err::Internal, "lexicographic completion failed");
    }
    return out;
}

std::vector<CirculantSpec> split_by_pairing(const CirculantSpec& spec, const JumpPairing& pairing) {
    spec.validate();
    std::vector<int> covered;
    for (auto [o, e] : pairing.pairs) {
        if (o % 2 == 0 || e % 2 != 0) fail(Err::PairingMismatch, "pair is not (odd, even)");
        covered.push_back(o);
        covered.push_back(e);
        if (!admissible(spec.n, o, e)) fail(Err::PairingMismatch, "pair induces a disconnected circulant");
    }
    std::sort(covered.begin(), covered.end());
    if (covered != spec.jumps) fail(Err::PairingMismatch, "pairing does not cover the jump list");

    std::vector<CirculantSpec> out;
    for (auto [o, e] : pairing.pairs)
        out.push_back(CirculantSpec{spec.n, {std::min(o, e), std::max(o, e)}});
    return out;
}

} // namespace hamdec
