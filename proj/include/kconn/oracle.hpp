#pragma once

// Definitional checks that share no code with the flow-based predicates.
// They enumerate vertex subsets directly, so they only suit small graphs.

#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

inline constexpr int kOracleMaxOrder = 8;

/// |V| > k and g - S is connected for every S with |S| < k. Order <= 64.
bool k_connected_by_definition(const Graph& g, int k);

/// The subgraph (vertices, edges) of g, checked by definition.
bool subgraph_k_connected_by_definition(const Graph& g, const VertexSet& vertices,
                                        const std::vector<Edge>& edges, int k);

/// Smallest vertex set separating nonadjacent u and v, by subset enumeration.
int separating_set_size_by_enumeration(const Graph& g, Vertex u, Vertex v);

/// Tries every proper subgraph (every vertex subset, every subset of its
/// induced edges). Throws GraphError above kOracleMaxOrder vertices.
bool brute_force_super_minimal_oracle(const Graph& g, int k);

}  // namespace kconn
