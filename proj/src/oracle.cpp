#include "kconn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace kconn {

namespace {

using Mask = std::uint64_t;

bool connected_within(const std::vector<Mask>& adj, Mask alive) {
    if (alive == 0) return true;
    Mask seen = alive & (~alive + 1);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= alive & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == alive;
}

// Every subset S of `within` with |S| < k leaves `within - S` connected.
bool survives_small_removals(const std::vector<Mask>& adj, Mask within, int k) {
    const int n = std::popcount(within);
    if (n <= k) return false;
    std::vector<int> ids;
    for (Mask m = within; m; m &= m - 1) ids.push_back(std::countr_zero(m));
    // Walk all subsets of size < k of `ids` by index combinations.
    for (int size = 0; size < k; ++size) {
        std::vector<int> c(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) c[static_cast<std::size_t>(i)] = i;
        while (true) {
            Mask removed = 0;
            for (int i : c) removed |= Mask{1} << ids[static_cast<std::size_t>(i)];
            if (!connected_within(adj, within & ~removed)) return false;
            int i = size - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return true;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    if (g.order() > 64) throw GraphError("definitional check: order above 64");
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    return adj;
}

}  // namespace

bool k_connected_by_definition(const Graph& g, int k) {
    if (k < 1) throw GraphError("definitional check: k must be positive");
    std::vector<Mask> adj = adjacency_masks(g);
    Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
    return survives_small_removals(adj, all, k);
}

bool subgraph_k_connected_by_definition(const Graph& g, const VertexSet& vertices,
                                        const std::vector<Edge>& edges, int k) {
    if (k < 1) throw GraphError("definitional check: k must be positive");
    if (g.order() > 64) throw GraphError("definitional check: order above 64");
    Mask within = 0;
    for (Vertex v : vertices) {
        if (!g.valid(v)) throw GraphError("definitional check: vertex out of range");
        within |= Mask{1} << v;
    }
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : edges) {
        if (!g.valid(e.u) || !g.valid(e.v) || !g.has_edge(e)) {
            throw GraphError("definitional check: edge not in the host graph");
        }
        if (!((within >> e.u) & 1) || !((within >> e.v) & 1)) {
            throw GraphError("definitional check: edge leaves the vertex set");
        }
        adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    return survives_small_removals(adj, within, k);
}

int separating_set_size_by_enumeration(const Graph& g, Vertex u, Vertex v) {
    if (!g.valid(u) || !g.valid(v) || u == v || g.adjacent(u, v)) {
        throw GraphError("separating set: endpoints must be distinct and nonadjacent");
    }
    std::vector<Mask> adj = adjacency_masks(g);
    const int n = g.order();
    Mask others = 0;
    for (Vertex w = 0; w < n; ++w) {
        if (w != u && w != v) others |= Mask{1} << w;
    }
    int best = n;
    for (Mask s = others;; s = (s - 1) & others) {
        int size = std::popcount(s);
        if (size < best) {
            Mask alive = (Mask{1} << u) | (Mask{1} << v) | (others & ~s);
            // Reachability from u inside `alive`.
            Mask seen = Mask{1} << u;
            Mask frontier = seen;
            while (frontier) {
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
                next &= alive & ~seen;
                seen |= next;
                frontier = next;
            }
            if (!((seen >> v) & 1)) best = size;
        }
        if (s == 0) break;
    }
    return best;
}

bool brute_force_super_minimal_oracle(const Graph& g, int k) {
    const int n = g.order();
    if (n > kOracleMaxOrder) throw GraphError("super-minimal oracle: order above " + std::to_string(kOracleMaxOrder));
    if (!k_connected_by_definition(g, k)) return false;
    const Mask all = (Mask{1} << n) - 1;
    std::vector<Edge> edges = g.edges();

    // Larger vertex sets first; within a set, larger edge sets first.
    std::vector<Mask> subsets;
    for (Mask u = 1; u <= all; ++u) {
        if (std::popcount(u) > k) subsets.push_back(u);
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });

    for (Mask u : subsets) {
        std::vector<Edge> inner;
        for (const Edge& e : edges) {
            if (((u >> e.u) & 1) && ((u >> e.v) & 1)) inner.push_back(e);
        }
        const int m = static_cast<int>(inner.size());
        const int need = (k * std::popcount(u) + 1) / 2;
        const std::uint64_t full = (std::uint64_t{1} << m) - 1;
        for (std::uint64_t f = full;; --f) {
            const bool proper = u != all || f != full;
            if (proper && std::popcount(f) >= need) {
                std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
                for (int i = 0; i < m; ++i) {
                    if ((f >> i) & 1) {
                        const Edge& e = inner[static_cast<std::size_t>(i)];
                        adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
                        adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
                    }
                }
                bool degrees_ok = true;
                for (Mask r = u; r && degrees_ok; r &= r - 1) {
                    degrees_ok = std::popcount(adj[static_cast<std::size_t>(std::countr_zero(r))]) >= k;
                }
                if (degrees_ok && survives_small_removals(adj, u, k)) return false;
            }
            if (f == 0) break;
        }
    }
    return true;
}

}  // namespace kconn
