#include "kconn/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "flow.hpp"

namespace kconn {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
    if (!g.valid(v)) throw GraphError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

bool is_complete(const Graph& g) {
    long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

CutWitness cut_with_sides(const Graph& g, VertexSet cut, Vertex anchor) {
    CutWitness w;
    w.cut = std::move(cut);
    for (const VertexSet& comp : components_avoiding(g, w.cut)) {
        bool has_anchor = std::binary_search(comp.begin(), comp.end(), anchor);
        VertexSet& side = has_anchor ? w.side_a : w.side_b;
        side.insert(side.end(), comp.begin(), comp.end());
    }
    std::sort(w.side_b.begin(), w.side_b.end());
    return w;
}

// Calls f(subset) for every k-subset of 0..n-1 in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
    if (k > n || k < 0) return false;
    VertexSet s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (f(s)) return true;
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Vertex min_degree_vertex(const Graph& g) {
    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v) {
        if (g.degree(v) < g.degree(best)) best = v;
    }
    return best;
}

}  // namespace

std::string validate_path_family(const Graph& g, const PathFamily& f, bool fan) {
    if (!g.valid(f.source)) return "source out of range";
    std::set<Vertex> targets(f.targets.begin(), f.targets.end());
    if (targets.count(f.source)) return "source lies in the target set";
    std::set<Vertex> interior;
    std::set<Vertex> terminals;
    std::set<std::vector<Vertex>> seen;
    for (const auto& p : f.paths) {
        if (p.size() < 2) return "path with fewer than two vertices";
        if (p.front() != f.source) return "path does not start at the source";
        if (!targets.count(p.back())) return "path does not end in the target set";
        if (!seen.insert(p).second) return "repeated path";
        std::set<Vertex> on_path;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!g.valid(p[i])) return "vertex out of range";
            if (!on_path.insert(p[i]).second) return "path repeats a vertex";
            if (i > 0 && !g.adjacent(p[i - 1], p[i])) return "consecutive path vertices are not adjacent";
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (fan && targets.count(p[i])) return "fan path passes through the target set";
            if (!interior.insert(p[i]).second) return "paths share an internal vertex";
        }
        if (fan && !terminals.insert(p.back()).second) return "fan terminals are not distinct";
    }
    for (Vertex t : terminals) {
        if (interior.count(t)) return "fan terminal is internal to another path";
    }
    return {};
}

std::string validate_cut(const Graph& g, const CutWitness& c) {
    std::vector<int> role(static_cast<std::size_t>(g.order()), 0);
    auto mark = [&](const VertexSet& s, int r) -> std::string {
        for (Vertex v : s) {
            if (!g.valid(v)) return "vertex out of range";
            if (role[static_cast<std::size_t>(v)] != 0) return "cut and sides overlap";
            role[static_cast<std::size_t>(v)] = r;
        }
        return {};
    };
    for (auto [s, r] : {std::pair{&c.cut, 1}, std::pair{&c.side_a, 2}, std::pair{&c.side_b, 3}}) {
        if (std::string err = mark(*s, r); !err.empty()) return err;
    }
    if (c.side_a.empty() || c.side_b.empty()) return "empty side";
    for (Vertex v : c.side_a) {
        for (Vertex u : g.neighbors(v)) {
            if (role[static_cast<std::size_t>(u)] == 3) return "edge joins the two sides";
        }
    }
    return {};
}

LocalConnectivity local_connectivity(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u, "local_connectivity");
    check_vertex(g, v, "local_connectivity");
    if (u == v) throw GraphError("local_connectivity: endpoints coincide");
    LocalConnectivity out;
    out.paths.source = u;
    out.paths.targets = {v};
    const Edge uv(u, v);
    const bool adjacent = g.adjacent(u, v);
    detail::SplitFlow flow(g, u, v, adjacent ? &uv : nullptr);
    out.count = flow.max_flow(flow.out(u), flow.in(v), g.order());
    out.paths.paths = flow.paths(u, v);
    if (adjacent) {
        out.count += 1;
        out.paths.paths.insert(out.paths.paths.begin(), {u, v});
    }
    return out;
}

int local_connectivity_count(const Graph& g, Vertex u, Vertex v, int cap) {
    check_vertex(g, u, "local_connectivity");
    check_vertex(g, v, "local_connectivity");
    if (u == v) throw GraphError("local_connectivity: endpoints coincide");
    const Edge uv(u, v);
    if (g.adjacent(u, v)) {
        if (cap <= 1) return 1;
        detail::SplitFlow flow(g, u, v, &uv);
        return 1 + flow.max_flow(flow.out(u), flow.in(v), cap - 1);
    }
    detail::SplitFlow flow(g, u, v);
    return flow.max_flow(flow.out(u), flow.in(v), cap);
}

CutWitness minimum_cut(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u, "minimum_cut");
    check_vertex(g, v, "minimum_cut");
    if (u == v || g.adjacent(u, v)) throw GraphError("minimum_cut: endpoints must be distinct and nonadjacent");
    detail::SplitFlow flow(g, u, v);
    flow.max_flow(flow.out(u), flow.in(v), g.order());
    std::vector<bool> reach = flow.residual_reach(flow.out(u));
    VertexSet cut;
    for (Vertex w = 0; w < g.order(); ++w) {
        if (w != u && w != v && reach[static_cast<std::size_t>(flow.in(w))] &&
            !reach[static_cast<std::size_t>(flow.out(w))]) {
            cut.push_back(w);
        }
    }
    return cut_with_sides(g, std::move(cut), u);
}

VertexConnectivity vertex_connectivity(const Graph& g) {
    VertexConnectivity out;
    const int n = g.order();
    if (n <= 1) return out;
    if (!is_connected(g)) {
        out.cut = cut_with_sides(g, {}, 0);
        return out;
    }
    if (is_complete(g)) {
        out.kappa = n - 1;
        return out;
    }
    // Esfahanian-Hakimi: pairs (v, non-neighbor) and nonadjacent pairs inside N(v).
    const Vertex v = min_degree_vertex(g);
    out.kappa = g.degree(v);
    out.cut = cut_with_sides(g, VertexSet(g.neighbors(v).begin(), g.neighbors(v).end()), v);
    auto consider = [&](Vertex a, Vertex b) {
        if (local_connectivity_count(g, a, b, out.kappa) < out.kappa) {
            out.cut = minimum_cut(g, a, b);
            out.kappa = static_cast<int>(out.cut->cut.size());
        }
    };
    for (Vertex u = 0; u < n; ++u) {
        if (u != v && !g.adjacent(u, v)) consider(v, u);
    }
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
        for (std::size_t j = i + 1; j < nv.size(); ++j) {
            if (!g.adjacent(nv[i], nv[j])) consider(nv[i], nv[j]);
        }
    }
    return out;
}

KConnectivity is_k_connected_certified(const Graph& g, int k) {
    if (k < 1) throw GraphError("is_k_connected: k must be positive");
    KConnectivity out;
    if (g.order() <= k) {
        out.basis = ConnectivityBasis::OrderBound;
        return out;
    }
    if (is_complete(g)) {
        out.connected = true;
        out.basis = ConnectivityBasis::Complete;
        return out;
    }
    VertexConnectivity vc = vertex_connectivity(g);
    out.connected = vc.kappa >= k;
    if (!out.connected) out.cut = std::move(vc.cut);
    return out;
}

std::optional<VertexSet> find_small_cut(const Graph& g, int k) {
    if (k < 1) throw GraphError("find_small_cut: k must be positive");
    const int n = g.order();
    if (n <= k) throw GraphError("find_small_cut: order must exceed k");
    if (!is_connected(g)) return VertexSet{};
    const Vertex v = min_degree_vertex(g);
    if (g.degree(v) < k) return VertexSet(g.neighbors(v).begin(), g.neighbors(v).end());
    if (is_complete(g)) return std::nullopt;
    auto small = [&](Vertex a, Vertex b) { return local_connectivity_count(g, a, b, k) < k; };
    for (Vertex u = 0; u < n; ++u) {
        if (u != v && !g.adjacent(u, v) && small(v, u)) return minimum_cut(g, v, u).cut;
    }
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
        for (std::size_t j = i + 1; j < nv.size(); ++j) {
            if (!g.adjacent(nv[i], nv[j]) && small(nv[i], nv[j])) return minimum_cut(g, nv[i], nv[j]).cut;
        }
    }
    return std::nullopt;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw GraphError("is_k_connected: k must be positive");
    const int n = g.order();
    if (n <= k) return false;
    if (g.min_degree() < k) return false;
    if (is_complete(g)) return true;
    if (k == 1) return is_connected(g);
    const Vertex v = min_degree_vertex(g);
    for (Vertex u = 0; u < n; ++u) {
        if (u != v && !g.adjacent(u, v) && local_connectivity_count(g, v, u, k) < k) return false;
    }
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
        for (std::size_t j = i + 1; j < nv.size(); ++j) {
            if (!g.adjacent(nv[i], nv[j]) && local_connectivity_count(g, nv[i], nv[j], k) < k) return false;
        }
    }
    return true;
}

Separation separation_from_components(const Graph& g, const VertexSet& boundary,
                                      const std::vector<VertexSet>& a_components) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), 2);
    for (Vertex v : boundary) side[static_cast<std::size_t>(v)] = 0;
    for (const VertexSet& comp : a_components) {
        for (Vertex v : comp) side[static_cast<std::size_t>(v)] = 1;
    }
    Separation s;
    s.boundary = boundary;
    for (Vertex v = 0; v < g.order(); ++v) {
        int r = side[static_cast<std::size_t>(v)];
        if (r != 2) s.a_vertices.push_back(v);
        if (r != 1) s.b_vertices.push_back(v);
    }
    for (const Edge& e : g.edges()) {
        bool in_a = side[static_cast<std::size_t>(e.u)] == 1 || side[static_cast<std::size_t>(e.v)] == 1;
        (in_a ? s.a_edges : s.b_edges).push_back(e);
    }
    return s;
}

std::optional<Separation> find_separation(const Graph& g, int k) {
    if (k < 0) throw GraphError("find_separation: k must be nonnegative");
    if (g.order() < k + 2) return std::nullopt;
    std::optional<Separation> found;
    for_each_subset(g.order(), k, [&](const VertexSet& x) {
        std::vector<VertexSet> comps = components_avoiding(g, x);
        if (comps.size() < 2) return false;
        found = separation_from_components(g, x, {comps.front()});
        return true;
    });
    return found;
}

std::optional<Separation> find_separation_with_boundary(const Graph& g, const VertexSet& boundary) {
    VertexSet x = make_vertex_set(g, boundary);
    std::vector<VertexSet> comps = components_avoiding(g, x);
    if (comps.size() < 2) return std::nullopt;
    return separation_from_components(g, x, {comps.front()});
}

std::optional<PathFamily> find_fan(const Graph& g, Vertex x, const VertexSet& targets, int k) {
    check_vertex(g, x, "find_fan");
    VertexSet y = make_vertex_set(g, targets);
    if (std::binary_search(y.begin(), y.end(), x)) throw GraphError("find_fan: source lies in the target set");
    if (k < 1) throw GraphError("find_fan: k must be positive");
    if (static_cast<int>(y.size()) < k) return std::nullopt;
    detail::SplitFlow flow(g, x, -1);
    for (Vertex t : y) flow.add_arc(flow.out(t), flow.super_sink(), 1);
    if (flow.max_flow(flow.out(x), flow.super_sink(), k) < k) return std::nullopt;
    PathFamily fam;
    fam.source = x;
    fam.targets = y;
    for (auto path : flow.paths(x, -1)) {
        auto hit = std::find_if(path.begin() + 1, path.end(),
                                [&](Vertex v) { return std::binary_search(y.begin(), y.end(), v); });
        path.erase(hit + 1, path.end());
        fam.paths.push_back(std::move(path));
    }
    return fam;
}

bool is_internally_3_connected(const Graph& g) {
    const int n = g.order();
    if (n < 4 || !is_k_connected(g, 2)) return false;
    for (Vertex c = 0; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
            std::vector<VertexSet> comps = components_avoiding(g, {c, d});
            const std::size_t m = comps.size();
            if (m < 2) continue;
            // Two components on each side: neither part can be a path on three vertices.
            if (m >= 4) return false;
            const bool cd = g.adjacent(c, d);
            // A part is P3 when it has one private vertex, joined to both c and d, and not the cd edge.
            auto part_is_p3 = [&](std::size_t mask, bool holds_cd) {
                if (holds_cd || std::popcount(mask) != 1) return false;
                const VertexSet& comp = comps[static_cast<std::size_t>(std::countr_zero(mask))];
                return comp.size() == 1 && g.adjacent(comp[0], c) && g.adjacent(comp[0], d);
            };
            const std::size_t full = (std::size_t{1} << m) - 1;
            for (std::size_t mask = 1; mask < full; ++mask) {
                for (int cd_in_a = 0; cd_in_a <= (cd ? 1 : 0); ++cd_in_a) {
                    bool a_p3 = part_is_p3(mask, cd_in_a == 1);
                    bool b_p3 = part_is_p3(full & ~mask, cd && cd_in_a == 0);
                    if (!a_p3 && !b_p3) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace kconn
