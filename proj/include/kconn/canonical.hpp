#pragma once

#include <string>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

inline constexpr int kDefaultCanonicalCap = 12;
/// Hard limit of the bit-packed refinement.
inline constexpr int kMaxCanonicalOrder = 16;

/// Canonical relabeling: `labels[v]` is the position of v in the canonical order.
/// Computed by equitable refinement plus individualization search with
/// automorphism pruning; the canonical form maximizes the permuted adjacency rows.
std::vector<Vertex> canonical_labeling(const Graph& g, int cap = kDefaultCanonicalCap);

Graph canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

/// Equal for two graphs iff they are isomorphic. The key is the graph6 text of
/// the canonical form. Throws GraphError when the order exceeds `cap`.
std::string canonical_key(const Graph& g, int cap = kDefaultCanonicalCap);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace kconn
