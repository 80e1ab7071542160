#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kconn {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Raised when an operation's precondition does not hold (bad id, missing edge, ...).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a checked structural claim fails. Seeing one means either a bug
/// or a counterexample; the message carries the offending graph in graph6.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    /// Normalizes so that u < v. Loops are rejected by the graph, not here.
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool has(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
    bool valid(Vertex v) const { return v >= 0 && v < order(); }

    int min_degree() const;
    int max_degree() const;
    int count_degree(int d) const;

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

    /// Debug validator for the representation invariants; throws InvariantViolation.
    void check_invariants() const;

private:
    friend Graph build_graph(int n, std::span<const Edge> edges);
    friend class GraphBuilder;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> bits_;
    int words_ = 0;
    int edge_count_ = 0;
};

/// Mutable staging area used by constructors and transforms.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : adj_(static_cast<std::size_t>(n)) {}
    explicit GraphBuilder(const Graph& g);

    int order() const { return static_cast<int>(adj_.size()); }
    Vertex add_vertex();
    /// Returns false if the edge was already present. Loops and bad ids throw.
    bool add_edge(Vertex a, Vertex b);
    bool remove_edge(Vertex a, Vertex b);
    bool adjacent(Vertex a, Vertex b) const;

    Graph build() &&;
    Graph build() const&;

private:
    std::vector<std::vector<Vertex>> adj_;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

/// A graph together with the translation of ids from its source graph.
struct Relabeled {
    Graph graph;
    std::vector<Vertex> old_to_new;  ///< -1 for removed source vertices
    std::vector<Vertex> new_to_old;  ///< for merged vertices, the smallest source id
};

/// Result of contracting a set of edges. `simple` reports whether the
/// contraction was simple before loops and parallel edges were discarded.
struct Contraction {
    Graph graph;
    std::vector<Vertex> old_to_new;
    bool simple = true;
};

struct AddEdge { Edge e; };
struct DeleteEdge { Edge e; };
struct DeleteVertex { Vertex v; };
struct ContractEdge { Edge e; };
using Edit = std::variant<AddEdge, DeleteEdge, DeleteVertex, ContractEdge>;

Relabeled mutate(const Graph& g, const Edit& edit);

Graph add_edge(const Graph& g, Edge e);
Graph delete_edge(const Graph& g, Edge e);
Graph delete_edges(const Graph& g, std::span<const Edge> es);
Relabeled delete_vertex(const Graph& g, Vertex v);
Relabeled delete_vertices(const Graph& g, const VertexSet& s);
Contraction contract_edge(const Graph& g, Edge e);
/// Identifies the endpoints of every edge in `es` (component-wise), then simplifies.
Contraction contract_edges(const Graph& g, std::span<const Edge> es);

/// Subgraph induced by `s`; new ids follow the sorted order of `s`.
Relabeled induced_subgraph(const Graph& g, const VertexSet& s);

VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet neighborhoods(const Graph& g, const VertexSet& s, bool closed);

/// Sorts and deduplicates; validates every id against `g`.
VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> ids);

/// Connected components in order of smallest member; each component sorted.
std::vector<VertexSet> components(const Graph& g);
/// Components of g - removed, in original ids.
std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed);
bool is_connected(const Graph& g);
/// True when the subgraph induced by `s` has no cycle.
bool is_forest(const Graph& g, const VertexSet& s);

/// Relaxed k-separation: two edge-disjoint subgraphs covering the graph whose
/// vertex sets meet in exactly the boundary. Parts may contain isolated vertices.
struct Separation {
    VertexSet a_vertices;
    std::vector<Edge> a_edges;
    VertexSet b_vertices;
    std::vector<Edge> b_edges;
    VertexSet boundary;

    int k() const { return static_cast<int>(boundary.size()); }
};

/// Checks every separation invariant against `g`; returns an empty string when valid.
std::string validate_separation(const Graph& g, const Separation& s);

std::string to_string(const VertexSet& s);

}  // namespace kconn
