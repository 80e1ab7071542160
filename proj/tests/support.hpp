#pragma once

// Hand-built graphs and brute-force helpers shared by the unit tests.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <vector>

#include "kconn/graph.hpp"
#include "kconn/graph6.hpp"

namespace test {

using kconn::Edge;
using kconn::Graph;
using kconn::GraphBuilder;
using kconn::Vertex;

inline Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

inline Graph path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

inline Graph complete(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

inline Graph complete_bipartite(int a, int c) {
    GraphBuilder b(a + c);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < c; ++j) b.add_edge(i, a + j);
    return std::move(b).build();
}

/// Rim 0..n-1, hub n.
inline Graph wheel(int n) {
    GraphBuilder b(n + 1);
    for (int i = 0; i < n; ++i) {
        b.add_edge(i, (i + 1) % n);
        b.add_edge(i, n);
    }
    return std::move(b).build();
}

/// Triangular prism: triangles 012 and 345, rungs i -- i+3.
inline Graph prism() {
    return kconn::build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

/// Rim v1..v2n as 0..2n-1, x = 2n adjacent to odd-numbered rim vertices
/// (v1, v3, ... i.e. ids 0, 2, ...), y = 2n+1 adjacent to the others.
inline Graph alternating_double_wheel(int n) {
    GraphBuilder b(2 * n + 2);
    for (int i = 0; i < 2 * n; ++i) {
        b.add_edge(i, (i + 1) % (2 * n));
        b.add_edge(i, i % 2 == 0 ? 2 * n : 2 * n + 1);
    }
    return std::move(b).build();
}

/// Theta graph with paths of the given lengths between two ends, plus an apex
/// joined to every interior path vertex (all lengths >= 2 here).
/// With `augmented`, the apex is joined to every theta vertex instead.
inline Graph dimensional_wheel(const std::vector<int>& lengths, bool augmented = false) {
    int interior = 0;
    for (int l : lengths) interior += l - 1;
    const int s = interior, t = interior + 1, apex = interior + 2;
    GraphBuilder b(interior + 3);
    int next = 0;
    for (int l : lengths) {
        int prev = s;
        for (int i = 1; i < l; ++i) {
            b.add_edge(prev, next);
            b.add_edge(next, apex);
            prev = next++;
        }
        b.add_edge(prev, t);
    }
    if (augmented) {
        b.add_edge(s, apex);
        b.add_edge(t, apex);
    }
    return std::move(b).build();
}

/// K_n minus the Hamiltonian cycle 0-1-...-(n-1)-0.
inline Graph complete_minus_cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i != 1 && j - i != n - 1) b.add_edge(i, j);
    return std::move(b).build();
}

/// K_n - C_n plus two nonadjacent vertices n, n+1 joined to all of it.
inline Graph q_graph(int n) {
    GraphBuilder b(complete_minus_cycle(n));
    Vertex x = b.add_vertex();
    Vertex y = b.add_vertex();
    for (int i = 0; i < n; ++i) {
        b.add_edge(x, i);
        b.add_edge(y, i);
    }
    return std::move(b).build();
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.order());
    for (const Edge& e : g.edges()) b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return std::move(b).build();
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return std::move(b).build();
}

/// Labeled graph on n vertices whose upper-triangle edges are the bits of `mask`.
inline Graph from_mask(int n, unsigned long mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1UL) b.add_edge(i, j);
    return std::move(b).build();
}

/// Isomorphism by trying every permutation.
inline bool isomorphic_by_permutation(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const Edge& e : a.edges()) {
            if (!b.adjacent(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// One representative of every graph on 1..7 vertices.
inline std::vector<Graph> atlas() {
    std::ifstream in(std::string(KCONN_TEST_DATA) + "/atlas7.g6");
    std::vector<Graph> out;
    for (auto& rec : kconn::read_graph6_stream(in)) out.push_back(rec.graph);
    return out;
}

}  // namespace test
