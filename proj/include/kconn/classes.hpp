#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kconn/connectivity.hpp"
#include "kconn/graph.hpp"

namespace kconn {

struct ClassLabel {
    int k = 0;
    bool k_connected = false;
    bool minimal = false;
    bool critical = false;
    bool uniform = false;
    bool super_minimal = false;

    bool operator==(const ClassLabel&) const = default;
};

/// Empty string when the hierarchy between the flags holds.
std::string check_label_invariants(const ClassLabel& label);

/// A proper subgraph of the host, claimed k-connected.
struct SubgraphWitness {
    VertexSet vertices;
    std::vector<Edge> edges;
};

/// A vertex pair whose local connectivity differs from k.
struct PairWitness {
    Vertex u = 0;
    Vertex v = 0;
    int count = 0;
    PathFamily paths;
};

/// Outcome of one class predicate. `witness` refutes the class; `checked`
/// counts the cases examined when the class holds (edges, vertices, pairs or
/// search nodes, depending on the predicate).
template <typename Witness>
struct Verdict {
    bool holds = false;
    bool k_connected = false;
    std::optional<CutWitness> cut;  ///< set when g is not k-connected and |V| > k
    std::optional<Witness> witness;
    long checked = 0;
};

Verdict<Edge> is_minimally_k_connected(const Graph& g, int k);
Verdict<Vertex> is_critically_k_connected(const Graph& g, int k);
Verdict<PairWitness> is_uniformly_k_connected(const Graph& g, int k);
Verdict<SubgraphWitness> is_super_minimally_k_connected(const Graph& g, int k);

/// Vertex set S with g[S] k-connected (S != V(g) when `forbid_full`), or none.
/// Peels vertices of degree < k, then splits along a small cut and recurses on
/// cut + component; subproblems without a solution are memoized per call by
/// canonical key.
std::optional<VertexSet> contains_k_connected_induced(const Graph& g, int k, bool forbid_full);

struct ClassCertificate {
    std::optional<CutWitness> not_k_connected;
    std::optional<Edge> not_minimal;             ///< g \ e is k-connected
    std::optional<Vertex> not_critical;          ///< g - v is k-connected
    std::optional<PairWitness> not_uniform;
    std::optional<SubgraphWitness> not_super_minimal;
    long edges_checked = 0;
    long vertices_checked = 0;
    long pairs_checked = 0;
    long subproblems_checked = 0;
};

struct Classification {
    ClassLabel label;
    ClassCertificate certificate;
};

/// All five flags with witnesses. Throws InvariantViolation if the flags break the hierarchy.
Classification classify(const Graph& g, int k);

/// Re-checks every witness against the definitions with code independent of
/// the search that produced it. Empty string when everything checks out.
std::string validate_certificate(const Graph& g, const Classification& c);

}  // namespace kconn
