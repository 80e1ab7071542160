#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

/// Replaces v by adjacent vertices: v keeps the neighbors in `a`, the new
/// vertex (id = order) takes those in `b`. Requires d(v) >= 4, min(|a|,|b|) >= 2
/// and a, b partitioning N(v). In strict mode a 3-connected input must yield a
/// 3-connected output.
Graph split_vertex(const Graph& g, Vertex v, const VertexSet& a, const VertexSet& b);

struct ForestContraction {
    Graph graph;
    std::vector<Edge> forest_edges;  ///< edges of g among vertices of degree > k
    std::vector<Vertex> old_to_new;
    bool simple = true;
};

/// Contracts every edge between vertices of degree > k. The induced subgraph on
/// those vertices must be a forest; a cycle throws InvariantViolation when g is
/// minimally k-connected and GraphError otherwise. For k = 3, strict mode also
/// checks that a minimally and critically 3-connected input stays so.
ForestContraction contract_degree_forest(const Graph& g, int k);

/// Minimum endpoint degree.
int edge_order(const Graph& g, Edge e);

/// Whether the simplified contraction g / e is 3-connected. g must be 3-connected.
bool is_3_contractible(const Graph& g, Edge e);

enum class DeletionCase { Both, One, Plain };

std::string to_string(DeletionCase c);

struct EnhancedDeletion {
    Graph graph;
    DeletionCase which = DeletionCase::Plain;
    std::vector<Edge> added_edges;  ///< in source ids
    VertexSet removed_vertices;     ///< in source ids
    std::vector<Vertex> old_to_new;
};

/// g \\ xy. An endpoint qualifies when it is left with exactly two nonadjacent
/// neighbors in g \ xy. Both qualify with different pairs: both are suppressed,
/// even when the pairs share a vertex, which undoes bridging two incident edges.
/// Exactly one qualifies: that one is suppressed. Otherwise the plain deletion.
/// g must be 3-connected.
EnhancedDeletion enhanced_delete(const Graph& g, Edge xy);

/// For 3-connected g other than K4: if xy is not 3-contractible then g \\ xy is
/// 3-connected. Returns false only on a counterexample.
bool kriesell_implication_holds(const Graph& g, Edge xy);

/// Subdivides ab by a new vertex y (id = order) and joins x to y.
Graph bridge_vertex_edge(const Graph& g, Vertex x, Edge ab);

/// Subdivides ab by x (id = order) and cd by y (id = order + 1), then joins x and y.
Graph bridge_edge_edge(const Graph& g, Edge ab, Edge cd);

/// An edge with its endpoints assigned to the two sides of a separation.
struct OrientedEdge {
    Vertex a = 0;  ///< endpoint on side A
    Vertex b = 0;  ///< endpoint on side B

    bool operator==(const OrientedEdge&) const = default;
};

enum class CompatibleType { ThreeEdges, TwoEdgesOneVertex, OneEdgeTwoVertices };

std::string to_string(CompatibleType t);

/// Three edges, two edges and a vertex, or one edge and two vertices along
/// which a 3-connected graph cleaves. `separation` is a relaxed 0-, 1- or
/// 2-separation of g minus `edges` with boundary `vertices`.
struct CompatibleSet {
    CompatibleType type = CompatibleType::ThreeEdges;
    std::vector<OrientedEdge> edges;
    VertexSet vertices;
    Separation separation;
};

/// Empty string when `s` is a compatible set of g. Besides the separation and
/// degree conditions, the A-ends and the B-ends of the edges must be distinct
/// vertices outside the boundary so that both cleaved graphs are simple.
std::string validate_compatible_set(const Graph& g, const CompatibleSet& s);

/// Visits compatible sets containing ab: first three-edge sets, then
/// two-edge sets, then one-edge sets, each in lexicographic order. The
/// visitor returns true to stop.
void for_each_compatible_set(const Graph& g, Edge ab, const std::function<bool(const CompatibleSet&)>& visit);

/// None when g \ ab is internally 3-connected; otherwise the first compatible
/// set containing ab, or none if the search finds nothing.
std::optional<CompatibleSet> find_compatible_set(const Graph& g, Edge ab);

struct Cleaved {
    Graph a;  ///< part A plus a new last vertex joined to the three A-terminals
    Graph b;
    std::vector<Vertex> a_to_source;  ///< source id per vertex of `a` (new vertex: -1)
    std::vector<Vertex> b_to_source;
};

/// Cleaves g along a valid compatible set. Strict mode checks that both parts
/// are 3-connected when g is, and super-minimally 3-connected when g is.
Cleaved cleave(const Graph& g, const CompatibleSet& s);

}  // namespace kconn
