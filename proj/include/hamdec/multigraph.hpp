#ifndef HAMDEC_MULTIGRAPH_HPP
#define HAMDEC_MULTIGRAPH_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hamdec {

/// Undirected loopless multigraph. Edges are stored canonically (u < v)
/// with an explicit multiplicity counter, never as parallel entries.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int vertex_count);

    int vertex_count() const { return n_; }

    void add_edge(int u, int v, int mult = 1);
    int multiplicity(int u, int v) const;
    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

    /// Total number of edges counting multiplicity.
    int edge_count() const;
    /// Degree counting multiplicity.
    int degree(int v) const;

    /// Distinct neighbors of v, ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Canonical (u, v, multiplicity) triples, u < v, lexicographic.
    const std::map<std::pair<int, int>, int>& edges() const { return edges_; }

    bool operator==(const MultiGraph& other) const = default;

private:
    int n_ = 0;
    std::map<std::pair<int, int>, int> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Order n plus strictly increasing jump list in [1, n/2].
struct CirculantSpec {
    int n = 0;
    std::vector<int> jumps;

    /// Throws InvalidSpec on violated invariants.
    void validate() const;
};

MultiGraph build_circulant(const CirculantSpec& spec);

/// Cycles formed by a single jump: gcd(n, jump) cycles of length n/gcd,
/// cycle l starting at vertex l and stepping by +jump.
std::vector<std::vector<int>> jump_cycles(const CirculantSpec& spec, int jump);

/// Tensor product; vertex (g, h) is flattened row-major as g*|V(H)| + h.
MultiGraph tensor_product(const MultiGraph& g, const MultiGraph& h);

struct ComponentPartition {
    std::vector<std::vector<int>> blocks; // ordered by smallest vertex
};

ComponentPartition components(const MultiGraph& g);

/// Two-coloring if bipartite, nullopt otherwise.
std::optional<std::vector<int>> is_bipartite(const MultiGraph& g);

} // namespace hamdec

#endif
