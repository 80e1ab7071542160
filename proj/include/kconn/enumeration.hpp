#pragma once

#include <map>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kconn/classes.hpp"
#include "kconn/graph.hpp"
#include "kconn/graph6.hpp"

namespace kconn {

inline constexpr int kMaxInternalOrder = 10;

struct EnumerationOptions {
    int min_degree = 0;
    int workers = 1;
    /// Drops graphs with more edges than this at the final order; negative means no cap.
    int max_edges = -1;
};

/// One canonical representative per isomorphism class of connected graphs on n
/// vertices with minimum degree at least `min_degree`, sorted by canonical key.
/// Built by adding one vertex at a time to connected graphs of the previous
/// order, keeping only degrees that can still reach the target.
std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& options = {});

/// Graph6 lines from a stream; graphs below `min_degree` are dropped, malformed
/// lines are kept as error records.
std::vector<StreamRecord> enumerate_stream(std::istream& in, int min_degree);

/// A population member with its class label at a fixed k.
struct ClassifiedGraph {
    Graph graph;
    std::string graph6;
    Classification classification;
    int degree_k_vertices = 0;  ///< v_k: vertices of degree exactly k
    std::string error;          ///< set when classification raised InvariantViolation
};

/// Classifies every graph at k; `workers` threads, results in input order.
std::vector<ClassifiedGraph> classify_graphs(const std::vector<Graph>& graphs, int k, int workers);

struct OrderRange {
    int lo = 1;
    int hi = 1;
};

/// Classified connected graphs with minimum degree >= k, grouped by order. They come
/// from internal enumeration or from a supplied list (for instance a decoded
/// stream) restricted to the order range.
struct ClassifiedPopulation {
    int k = 3;
    OrderRange orders;
    std::string source;  ///< "internal" or "stream"
    std::map<int, std::vector<ClassifiedGraph>> by_order;
};

ClassifiedPopulation build_population(int k, OrderRange orders, int workers,
                                      const std::vector<Graph>* external = nullptr);

using Json = nlohmann::ordered_json;

/// Result of one verification or search job: JSON-lines records in a fixed
/// order, plus totals that determine the exit status.
struct JobReport {
    std::string job;
    std::vector<Json> records;
    long violations = 0;
    long input_errors = 0;

    int exit_status() const { return input_errors > 0 ? 2 : violations > 0 ? 1 : 0; }
};

enum class GraphClass { Minimal, Uniform, SuperMinimal };

std::string to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(const std::string& s);

/// Exact rational lower bound num / den on v_k for a class at order n.
struct DegreeBound {
    long num = 0;
    long den = 1;
    bool satisfied_by(long count) const { return count * den >= num; }
    long ceiling() const { return (num + den - 1) / den; }
};

/// Mader's bound for minimal graphs (Dirac at k = 2, Halin at k = 3),
/// (2n+2)/3 for uniform and (n+3)/2 for super-minimal graphs at k = 3.
std::optional<DegreeBound> degree_bound(GraphClass c, int k, int n);

/// Each job throws GraphError when the class and k have no known bound.
JobReport verify_degree_bound(const ClassifiedPopulation& pop, GraphClass c);
JobReport verify_edge_bound(const ClassifiedPopulation& pop, GraphClass c);
JobReport verify_inclusions(const ClassifiedPopulation& pop);
JobReport extremal_search(const ClassifiedPopulation& pop);
/// Structural claims about minimally 3-connected graphs over a k = 3
/// population, plus the bipartite witness searches.
JobReport check_structure_lemmas(const ClassifiedPopulation& pop);
/// Bridging, enhanced deletion and cleaving claims over a k = 3 population.
/// Bridging and enhanced deletion run on orders up to `small_order`.
JobReport check_operations(const ClassifiedPopulation& pop, int small_order = 7);
JobReport conjecture_scan(const ClassifiedPopulation& pop);

/// Bipartite instances for the degree-3 lemmas: X = 0..x-1, Y after it; each
/// Y-vertex is given by its neighbor set in X.
struct BipartiteInstance {
    int x = 0;
    std::vector<std::vector<int>> y;
    Graph graph() const;
};

/// Instances with |X| = x, every Y-neighborhood of size at least `min_y_degree`
/// (exactly 3 when `semi_cubic`), |Y| in [lo_y, hi_y] and each neighborhood
/// used at most `max_multiplicity` times, one per orbit under permutations of X.
std::vector<BipartiteInstance> bipartite_instances(int x, bool semi_cubic, int lo_y, int hi_y, int max_multiplicity);

/// Two Y-vertices with the same three neighbors.
std::optional<std::pair<int, int>> find_k32(const BipartiteInstance& inst);
/// Z subset of Y with G[N[Z]] 3-connected and, when `with_internal` is set, some
/// h in Z with G[N[Z]] - h internally 3-connected. Z = Y is skipped when `proper`.
/// Returns Z and, with `with_internal`, h appended last.
std::optional<std::vector<int>> find_neighborhood_witness(const BipartiteInstance& inst, bool with_internal, bool proper);

/// A super-minimally 3-connected graph with an edge of order at least four whose
/// contraction is not super-minimally 3-connected, found by search.
struct ContractionCounterexample {
    Graph graph;
    Edge edge;
    SubgraphWitness witness;  ///< k-connected proper subgraph of the contraction
};
std::optional<ContractionCounterexample> find_contraction_counterexample(const std::vector<Graph>& super_minimal);

}  // namespace kconn
