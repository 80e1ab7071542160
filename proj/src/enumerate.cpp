#include "kconn/enumeration.hpp"

#include <algorithm>
#include <map>

#include "kconn/canonical.hpp"
#include "kconn/connectivity.hpp"
#include "parallel.hpp"

namespace kconn {

namespace {

int min_degree(const Graph& g) {
    int d = g.order() > 0 ? g.order() : 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

using Level = std::map<std::string, Graph>;

// Children of `parent` with a new last vertex joined to a nonempty subset,
// keyed canonically.
void extend(const Graph& parent, int floor, int max_edges, Level& out) {
    const int m = parent.order();
    std::vector<int> deficit;
    for (Vertex v = 0; v < m; ++v) deficit.push_back(std::max(0, floor - parent.degree(v)));
    if (std::any_of(deficit.begin(), deficit.end(), [](int d) { return d > 1; })) return;
    unsigned required = 0;
    for (Vertex v = 0; v < m; ++v) required |= deficit[static_cast<std::size_t>(v)] ? 1u << v : 0u;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        if ((mask & required) != required) continue;
        const int d = std::popcount(mask);
        if (d < floor) continue;
        if (max_edges >= 0 && parent.size() + d > max_edges) continue;
        GraphBuilder b(parent);
        Vertex w = b.add_vertex();
        for (Vertex v = 0; v < m; ++v) {
            if ((mask >> v) & 1u) b.add_edge(v, w);
        }
        Graph child = std::move(b).build();
        std::vector<Vertex> labels = canonical_labeling(child);
        GraphBuilder c(child.order());
        for (const Edge& e : child.edges()) {
            c.add_edge(labels[static_cast<std::size_t>(e.u)], labels[static_cast<std::size_t>(e.v)]);
        }
        Graph canon = std::move(c).build();
        std::string key = to_graph6(canon);
        out.try_emplace(std::move(key), std::move(canon));
    }
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& options) {
    if (n < 1 || n > kMaxInternalOrder) {
        throw GraphError("enumerate_graphs: order must be in 1.." + std::to_string(kMaxInternalOrder));
    }
    if (options.min_degree < 0) throw GraphError("enumerate_graphs: negative minimum degree");
    if (options.min_degree >= n && n > 1) return {};
    std::vector<Graph> level = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        const int floor = std::max(0, options.min_degree - (n - m));
        const int cap = m == n ? options.max_edges : -1;
        std::vector<Level> parts(level.size());
        detail::parallel_for(level.size(), options.workers,
                             [&](std::size_t i) { extend(level[i], std::max(floor, 1), cap, parts[i]); });
        Level merged;
        for (Level& part : parts) merged.merge(part);
        level.clear();
        for (auto& [key, g] : merged) level.push_back(std::move(g));
    }
    if (n == 1 && options.min_degree > 0) return {};
    return level;
}

std::vector<StreamRecord> enumerate_stream(std::istream& in, int min_degree_filter) {
    std::vector<StreamRecord> out;
    for (StreamRecord& r : read_graph6_stream(in)) {
        if (r.ok() && min_degree(r.graph) < min_degree_filter) continue;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ClassifiedGraph> classify_graphs(const std::vector<Graph>& graphs, int k, int workers) {
    std::vector<ClassifiedGraph> out(graphs.size());
    detail::parallel_for(graphs.size(), workers, [&](std::size_t i) {
        ClassifiedGraph& c = out[i];
        c.graph = graphs[i];
        c.graph6 = to_graph6(c.graph);
        for (Vertex v = 0; v < c.graph.order(); ++v) c.degree_k_vertices += c.graph.degree(v) == k ? 1 : 0;
        try {
            c.classification = classify(c.graph, k);
        } catch (const InvariantViolation& e) {
            c.error = e.what();
        }
    });
    return out;
}

ClassifiedPopulation build_population(int k, OrderRange orders, int workers, const std::vector<Graph>* external) {
    if (k < 1) throw GraphError("population: k must be positive");
    if (orders.lo < 1 || orders.hi < orders.lo) throw GraphError("population: empty order range");
    if (!external && orders.hi > kMaxInternalOrder) {
        throw GraphError("population: internal enumeration stops at order " + std::to_string(kMaxInternalOrder));
    }
    ClassifiedPopulation pop;
    pop.k = k;
    pop.orders = orders;
    pop.source = external ? "stream" : "internal";
    for (int n = orders.lo; n <= orders.hi; ++n) {
        std::vector<Graph> graphs;
        if (external) {
            for (const Graph& g : *external) {
                if (g.order() == n && min_degree(g) >= k && is_connected(g)) graphs.push_back(g);
            }
        } else {
            EnumerationOptions options;
            options.min_degree = k;
            options.workers = workers;
            graphs = enumerate_graphs(n, options);
        }
        pop.by_order[n] = classify_graphs(graphs, k, workers);
    }
    return pop;
}

}  // namespace kconn
