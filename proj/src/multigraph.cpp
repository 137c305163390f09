#include "hamdec/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "hamdec/errors.hpp"

namespace hamdec {

MultiGraph::MultiGraph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
    if (vertex_count < 1) fail(Err::InvalidSpec, "vertex count must be >= 1");
}

void MultiGraph::add_edge(int u, int v, int mult) {
    if (u == v) fail(Err::InvalidSpec, "loop edge rejected");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) fail(Err::InvalidSpec, "vertex out of range");
    if (mult < 1) fail(Err::InvalidSpec, "multiplicity must be >= 1");
    if (u > v) std::swap(u, v);
    int& m = edges_[{u, v}];
    if (m == 0) {
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    }
    m += mult;
}

int MultiGraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

int MultiGraph::edge_count() const {
    int total = 0;
    for (const auto& [e, m] : edges_) total += m;
    return total;
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (int w : adj_[v]) d += multiplicity(v, w);
    return d;
}

void CirculantSpec::validate() const {
    if (n < 3) fail(Err::InvalidSpec, "circulant order must be >= 3");
    if (jumps.empty()) fail(Err::InvalidSpec, "jump list empty");
    int prev = 0;
    for (int l : jumps) {
        if (l <= prev) fail(Err::InvalidSpec, "jumps must be strictly increasing");
        if (l < 1 || 2 * l > n) fail(Err::InvalidSpec, "jump out of [1, n/2]");
        prev = l;
    }
}

MultiGraph build_circulant(const CirculantSpec& spec) {
    spec.validate();
    MultiGraph g(spec.n);
    for (int l : spec.jumps)
        for (int u = 0; u < spec.n; ++u) {
            int v = (u + l) % spec.n;
            if (u < v ? !g.has_edge(u, v) : !g.has_edge(v, u)) g.add_edge(u, v);
        }
    return g;
}

std::vector<std::vector<int>> jump_cycles(const CirculantSpec& spec, int jump) {
    spec.validate();
    if (std::find(spec.jumps.begin(), spec.jumps.end(), jump) == spec.jumps.end())
        fail(Err::InvalidSpec, "jump not in the spec's jump list");
    if (2 * jump == spec.n) fail(Err::HalfJump, "half jump forms a 1-factor, not cycles");
    int g = std::gcd(spec.n, jump);
    std::vector<std::vector<int>> cycles(g);
    for (int l = 0; l < g; ++l) {
        int v = l;
        for (int s = 0; s < spec.n / g; ++s) {
            cycles[l].push_back(v);
            v = (v + jump) % spec.n;
        }
    }
    return cycles;
}

MultiGraph tensor_product(const MultiGraph& g, const MultiGraph& h) {
    int nh = h.vertex_count();
    MultiGraph p(g.vertex_count() * nh);
    for (const auto& [ge, gm] : g.edges())
        for (const auto& [he, hm] : h.edges()) {
            auto [g1, g2] = ge;
            auto [h1, h2] = he;
            p.add_edge(g1 * nh + h1, g2 * nh + h2, gm * hm);
            p.add_edge(g1 * nh + h2, g2 * nh + h1, gm * hm);
        }
    return p;
}

ComponentPartition components(const MultiGraph& g) {
    ComponentPartition part;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> block;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            block.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(block.begin(), block.end());
        part.blocks.push_back(std::move(block));
    }
    return part;
}

std::optional<std::vector<int>> is_bipartite(const MultiGraph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

} // namespace hamdec
