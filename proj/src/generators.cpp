#include "kconn/generators.hpp"

#include <algorithm>
#include <numeric>

namespace kconn {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw GraphError(message);
}

GraphBuilder theta_builder(std::span<const int> lengths, int extra) {
    require(lengths.size() >= 2, "theta: needs at least two paths");
    require(std::all_of(lengths.begin(), lengths.end(), [](int l) { return l >= 1; }), "theta: lengths must be positive");
    require(std::count(lengths.begin(), lengths.end(), 1) <= 1, "theta: at most one length may be 1");
    int interior = 0;
    for (int l : lengths) interior += l - 1;
    const Vertex s = interior, t = interior + 1;
    GraphBuilder b(interior + 2 + extra);
    Vertex next = 0;
    for (int l : lengths) {
        Vertex prev = s;
        for (int i = 1; i < l; ++i) {
            b.add_edge(prev, next);
            prev = next++;
        }
        b.add_edge(prev, t);
    }
    return b;
}

Graph apex_over_theta(std::span<const int> lengths, bool all) {
    GraphBuilder b = theta_builder(lengths, 1);
    const Vertex apex = b.order() - 1;
    Graph theta = b.build();
    for (Vertex v = 0; v < apex; ++v) {
        if (all || theta.degree(v) == 2) b.add_edge(v, apex);
    }
    return std::move(b).build();
}

}  // namespace

Graph cycle_graph(int n) {
    require(n >= 3, "cycle: n must be at least 3");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph complete_graph(int n) {
    require(n >= 1, "complete: n must be at least 1");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

Graph complete_bipartite_graph(int a, int c) {
    require(a >= 1 && c >= 1, "complete_bipartite: both sides must be nonempty");
    GraphBuilder b(a + c);
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < c; ++j) b.add_edge(i, a + j);
    return std::move(b).build();
}

Graph wheel_graph(int spokes) {
    require(spokes >= 3, "wheel: needs at least 3 spokes");
    GraphBuilder b(spokes + 1);
    for (Vertex i = 0; i < spokes; ++i) {
        b.add_edge(i, (i + 1) % spokes);
        b.add_edge(i, spokes);
    }
    return std::move(b).build();
}

Graph theta_graph(std::span<const int> lengths) { return theta_builder(lengths, 0).build(); }

Graph dimensional_wheel(std::span<const int> lengths) { return apex_over_theta(lengths, false); }

Graph augmented_dimensional_wheel(std::span<const int> lengths) { return apex_over_theta(lengths, true); }

Graph alternating_double_wheel(int n) {
    require(n >= 2, "alt_double_wheel: n must be at least 2");
    const int rim = 2 * n;
    GraphBuilder b(rim + 2);
    for (Vertex i = 0; i < rim; ++i) {
        b.add_edge(i, (i + 1) % rim);
        b.add_edge(i, rim + i % 2);
    }
    return std::move(b).build();
}

Graph complete_minus_cycle(int n) {
    require(n >= 4, "kn_minus_cn: n must be at least 4");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) b.add_edge(i, j);
    return std::move(b).build();
}

Graph complete_minus_path(int n) {
    require(n >= 2, "kn_minus_pn: n must be at least 2");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 2; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

Graph q_graph(int n) {
    require(n >= 4, "q: n must be at least 4");
    GraphBuilder b(complete_minus_cycle(n));
    const Vertex x = b.add_vertex();
    const Vertex y = b.add_vertex();
    for (Vertex i = 0; i < n; ++i) {
        b.add_edge(x, i);
        b.add_edge(y, i);
    }
    return std::move(b).build();
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {"cycle",         "complete",         "complete_bipartite",
                                                   "wheel",         "theta",            "dim_wheel",
                                                   "aug_dim_wheel", "alt_double_wheel", "kn_minus_cn",
                                                   "kn_minus_pn",   "q"};
    return names;
}

Graph generate(std::string_view family, std::span<const int> params) {
    auto one = [&]() {
        require(params.size() == 1, std::string(family) + ": expects one parameter");
        return params[0];
    };
    if (family == "cycle") return cycle_graph(one());
    if (family == "complete") return complete_graph(one());
    if (family == "complete_bipartite") {
        require(params.size() == 2, "complete_bipartite: expects two parameters");
        return complete_bipartite_graph(params[0], params[1]);
    }
    if (family == "wheel") return wheel_graph(one());
    if (family == "theta") return theta_graph(params);
    if (family == "dim_wheel") return dimensional_wheel(params);
    if (family == "aug_dim_wheel") return augmented_dimensional_wheel(params);
    if (family == "alt_double_wheel") return alternating_double_wheel(one());
    if (family == "kn_minus_cn") return complete_minus_cycle(one());
    if (family == "kn_minus_pn") return complete_minus_path(one());
    if (family == "q") return q_graph(one());
    throw GraphError("unknown family '" + std::string(family) + "'");
}

}  // namespace kconn
