#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

/// Internally disjoint paths sharing `source`. For a u-v family `targets` is {v};
/// for a fan it is the target set Y.
struct PathFamily {
    Vertex source = 0;
    VertexSet targets;
    std::vector<std::vector<Vertex>> paths;
};

/// `cut` separates every vertex of `side_a` from every vertex of `side_b`.
struct CutWitness {
    VertexSet cut;
    VertexSet side_a;
    VertexSet side_b;
};

/// Checks paths, internal disjointness and, when `fan` is set, distinct terminals in `targets`.
std::string validate_path_family(const Graph& g, const PathFamily& f, bool fan);
std::string validate_cut(const Graph& g, const CutWitness& c);

struct LocalConnectivity {
    int count = 0;
    PathFamily paths;
};

/// Maximum number of internally disjoint u-v paths. An edge uv counts as one path.
LocalConnectivity local_connectivity(const Graph& g, Vertex u, Vertex v);

/// Same count without path extraction, stopping once `cap` paths are found.
int local_connectivity_count(const Graph& g, Vertex u, Vertex v, int cap);

/// A minimum u-v vertex cut for nonadjacent u, v.
CutWitness minimum_cut(const Graph& g, Vertex u, Vertex v);

struct VertexConnectivity {
    int kappa = 0;
    std::optional<CutWitness> cut;  ///< absent for complete graphs and order <= 1
};

VertexConnectivity vertex_connectivity(const Graph& g);

enum class ConnectivityBasis { OrderBound, Complete, Flow };

struct KConnectivity {
    bool connected = false;
    ConnectivityBasis basis = ConnectivityBasis::Flow;
    std::optional<CutWitness> cut;  ///< a minimum cut when false and order > k
};

/// Certified answer: on failure with order > k the witness is a minimum cut.
KConnectivity is_k_connected_certified(const Graph& g, int k);

/// Fast decision used inside searches.
bool is_k_connected(const Graph& g, int k);

/// For order > k: a vertex cut of size < k (not necessarily minimum), or none
/// when g is k-connected.
std::optional<VertexSet> find_small_cut(const Graph& g, int k);

/// First relaxed k-separation by lexicographic cut set, or none.
std::optional<Separation> find_separation(const Graph& g, int k);

/// A relaxed separation whose boundary is exactly `boundary`, or none.
std::optional<Separation> find_separation_with_boundary(const Graph& g, const VertexSet& boundary);

/// Builds the separation with boundary X whose part A holds the listed
/// components of g - X. Edges inside X go to part B.
Separation separation_from_components(const Graph& g, const VertexSet& boundary,
                                      const std::vector<VertexSet>& a_components);

/// k internally disjoint x-Y paths with distinct terminals, or none.
std::optional<PathFamily> find_fan(const Graph& g, Vertex x, const VertexSet& targets, int k);

bool is_internally_3_connected(const Graph& g);

}  // namespace kconn
