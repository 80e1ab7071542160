#include "kconn/transforms.hpp"

#include <algorithm>
#include <set>

#include "kconn/assertions.hpp"
#include "kconn/classes.hpp"
#include "kconn/connectivity.hpp"

namespace kconn {

namespace {

void require_edge(const Graph& g, Edge e, const char* what) {
    if (!g.valid(e.u) || !g.valid(e.v) || e.u == e.v || !g.has_edge(e)) {
        throw GraphError(std::string(what) + ": edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " is not in the graph");
    }
}

void require_3_connected(const Graph& g, const char* what) {
    if (!is_k_connected(g, 3)) throw GraphError(std::string(what) + ": input is not 3-connected");
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace

Graph split_vertex(const Graph& g, Vertex v, const VertexSet& a, const VertexSet& b) {
    if (!g.valid(v)) throw GraphError("split_vertex: vertex out of range");
    if (g.degree(v) < 4) throw GraphError("split_vertex: vertex degree below four");
    VertexSet sa = make_vertex_set(g, a);
    VertexSet sb = make_vertex_set(g, b);
    if (sa.size() < 2 || sb.size() < 2) throw GraphError("split_vertex: each side needs two neighbors");
    VertexSet joined;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(joined));
    VertexSet nv(g.neighbors(v).begin(), g.neighbors(v).end());
    if (joined != nv || sa.size() + sb.size() != nv.size()) {
        throw GraphError("split_vertex: sides must partition the neighborhood");
    }
    GraphBuilder builder(g);
    Vertex w = builder.add_vertex();
    builder.add_edge(v, w);
    for (Vertex u : sb) {
        builder.remove_edge(v, u);
        builder.add_edge(w, u);
    }
    Graph out = std::move(builder).build();
    if (strict_assertions() && is_k_connected(g, 3) && !is_k_connected(out, 3)) {
        report_violation("vertex splitting preserves 3-connectivity", g);
    }
    return out;
}

ForestContraction contract_degree_forest(const Graph& g, int k) {
    if (k < 1) throw GraphError("contract_degree_forest: k must be positive");
    VertexSet high;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > k) high.push_back(v);
    }
    if (!is_forest(g, high)) {
        if (is_minimally_k_connected(g, k).holds) {
            report_violation("vertices of degree above k induce a forest in a minimally k-connected graph", g);
        }
        throw GraphError("contract_degree_forest: vertices of degree above k induce a cycle");
    }
    ForestContraction out;
    for (const Edge& e : g.edges()) {
        if (contains(high, e.u) && contains(high, e.v)) out.forest_edges.push_back(e);
    }
    Contraction c = contract_edges(g, out.forest_edges);
    out.graph = std::move(c.graph);
    out.old_to_new = std::move(c.old_to_new);
    out.simple = c.simple;
    if (strict_assertions() && k == 3 && is_minimally_k_connected(g, 3).holds &&
        is_critically_k_connected(g, 3).holds) {
        if (!out.simple || !is_minimally_k_connected(out.graph, 3).holds ||
            !is_critically_k_connected(out.graph, 3).holds) {
            report_violation("forest contraction keeps a minimally and critically 3-connected graph so", g);
        }
    }
    return out;
}

int edge_order(const Graph& g, Edge e) {
    require_edge(g, e, "edge_order");
    return std::min(g.degree(e.u), g.degree(e.v));
}

bool is_3_contractible(const Graph& g, Edge e) {
    require_edge(g, e, "is_3_contractible");
    require_3_connected(g, "is_3_contractible");
    return is_k_connected(contract_edge(g, e).graph, 3);
}

std::string to_string(DeletionCase c) {
    switch (c) {
        case DeletionCase::Both: return "i";
        case DeletionCase::One: return "ii";
        case DeletionCase::Plain: return "iii";
    }
    return "?";
}

EnhancedDeletion enhanced_delete(const Graph& g, Edge xy) {
    require_edge(g, xy, "enhanced_delete");
    require_3_connected(g, "enhanced_delete");
    Graph h = delete_edge(g, xy);
    auto leftover_pair = [&](Vertex z) -> std::optional<Edge> {
        auto nz = h.neighbors(z);
        if (nz.size() != 2 || h.adjacent(nz[0], nz[1])) return std::nullopt;
        return Edge(nz[0], nz[1]);
    };
    std::optional<Edge> px = leftover_pair(xy.u);
    std::optional<Edge> py = leftover_pair(xy.v);

    EnhancedDeletion out;
    if (px && py && *px != *py) {
        out.which = DeletionCase::Both;
        out.added_edges = {*px, *py};
        out.removed_vertices = {xy.u, xy.v};
    } else if (px.has_value() != py.has_value()) {
        out.which = DeletionCase::One;
        out.added_edges = {px ? *px : *py};
        out.removed_vertices = {px ? xy.u : xy.v};
    }
    GraphBuilder builder(h);
    for (const Edge& e : out.added_edges) builder.add_edge(e.u, e.v);
    Relabeled r = delete_vertices(std::move(builder).build(), out.removed_vertices);
    out.graph = std::move(r.graph);
    out.old_to_new = std::move(r.old_to_new);
    return out;
}

bool kriesell_implication_holds(const Graph& g, Edge xy) {
    require_3_connected(g, "kriesell_implication_holds");
    if (g.order() == 4) return true;
    if (is_3_contractible(g, xy)) return true;
    return is_k_connected(enhanced_delete(g, xy).graph, 3);
}

Graph bridge_vertex_edge(const Graph& g, Vertex x, Edge ab) {
    require_edge(g, ab, "bridge_vertex_edge");
    if (!g.valid(x)) throw GraphError("bridge_vertex_edge: vertex out of range");
    if (ab.has(x)) throw GraphError("bridge_vertex_edge: the vertex is an end of the edge");
    GraphBuilder builder(g);
    builder.remove_edge(ab.u, ab.v);
    Vertex y = builder.add_vertex();
    builder.add_edge(ab.u, y);
    builder.add_edge(y, ab.v);
    builder.add_edge(x, y);
    Graph out = std::move(builder).build();
    if (strict_assertions() && is_k_connected(g, 3) && !is_k_connected(out, 3)) {
        report_violation("vertex-to-edge bridging preserves 3-connectivity", g);
    }
    return out;
}

Graph bridge_edge_edge(const Graph& g, Edge ab, Edge cd) {
    require_edge(g, ab, "bridge_edge_edge");
    require_edge(g, cd, "bridge_edge_edge");
    if (ab == cd) throw GraphError("bridge_edge_edge: the two edges coincide");
    GraphBuilder builder(g);
    builder.remove_edge(ab.u, ab.v);
    builder.remove_edge(cd.u, cd.v);
    Vertex x = builder.add_vertex();
    Vertex y = builder.add_vertex();
    builder.add_edge(ab.u, x);
    builder.add_edge(x, ab.v);
    builder.add_edge(cd.u, y);
    builder.add_edge(y, cd.v);
    builder.add_edge(x, y);
    Graph out = std::move(builder).build();
    if (strict_assertions() && is_k_connected(g, 3) && !is_k_connected(out, 3)) {
        report_violation("edge-to-edge bridging preserves 3-connectivity", g);
    }
    return out;
}

std::string to_string(CompatibleType t) {
    switch (t) {
        case CompatibleType::ThreeEdges: return "i";
        case CompatibleType::TwoEdgesOneVertex: return "ii";
        case CompatibleType::OneEdgeTwoVertices: return "iii";
    }
    return "?";
}

namespace {

int part_degree(const std::vector<Edge>& edges, Vertex w) {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.has(w); }));
}

std::vector<Edge> plain_edges(const std::vector<OrientedEdge>& es) {
    std::vector<Edge> out;
    for (const OrientedEdge& e : es) out.emplace_back(e.a, e.b);
    return out;
}

bool distinct(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Tries every split of the components of (g - removed) - boundary into two
// sides with ab.u on side A and every removed edge crossing. Returns true
// when the visitor asks to stop.
bool visit_groupings(const Graph& g, CompatibleType type, const std::vector<Edge>& removed, const VertexSet& boundary,
                     const std::function<bool(const CompatibleSet&)>& visit) {
    for (const Edge& e : removed) {
        if (contains(boundary, e.u) || contains(boundary, e.v)) return false;
    }
    Graph h = delete_edges(g, removed);
    std::vector<VertexSet> comps = components_avoiding(h, boundary);
    const std::size_t m = comps.size();
    if (m < 2 || m > 20) return false;
    std::vector<int> comp_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < m; ++i) {
        for (Vertex v : comps[i]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    const std::size_t anchor = static_cast<std::size_t>(comp_of[static_cast<std::size_t>(removed.front().u)]);
    const std::size_t full = (std::size_t{1} << m) - 1;
    const bool boundary_edge = boundary.size() == 2 && h.adjacent(boundary[0], boundary[1]);

    for (std::size_t mask = 1; mask < full; ++mask) {
        if (!((mask >> anchor) & 1)) continue;
        auto on_a = [&](Vertex v) { return (mask >> comp_of[static_cast<std::size_t>(v)]) & 1; };
        CompatibleSet s;
        s.type = type;
        s.vertices = boundary;
        bool crossing = true;
        for (const Edge& e : removed) {
            if (on_a(e.u) == on_a(e.v)) {
                crossing = false;
                break;
            }
            s.edges.push_back(on_a(e.u) ? OrientedEdge{e.u, e.v} : OrientedEdge{e.v, e.u});
        }
        if (!crossing) continue;
        std::vector<Vertex> as, bs;
        for (const OrientedEdge& e : s.edges) {
            as.push_back(e.a);
            bs.push_back(e.b);
        }
        if (!distinct(as) || !distinct(bs)) continue;

        std::vector<VertexSet> a_comps;
        for (std::size_t i = 0; i < m; ++i) {
            if ((mask >> i) & 1) a_comps.push_back(comps[i]);
        }
        Separation base = separation_from_components(h, boundary, a_comps);
        for (int variant = 0; variant < (boundary_edge ? 2 : 1); ++variant) {
            s.separation = base;
            if (variant == 1) {
                Edge cd(boundary[0], boundary[1]);
                std::erase(s.separation.b_edges, cd);
                s.separation.a_edges.insert(
                    std::lower_bound(s.separation.a_edges.begin(), s.separation.a_edges.end(), cd), cd);
            }
            bool degrees_ok = true;
            for (Vertex w : boundary) {
                degrees_ok = degrees_ok && part_degree(s.separation.a_edges, w) >= 2 &&
                             part_degree(s.separation.b_edges, w) >= 2;
            }
            if (degrees_ok && visit(s)) return true;
        }
    }
    return false;
}

}  // namespace

std::string validate_compatible_set(const Graph& g, const CompatibleSet& s) {
    const std::size_t want_edges = s.type == CompatibleType::ThreeEdges ? 3 : s.type == CompatibleType::TwoEdgesOneVertex ? 2 : 1;
    if (s.edges.size() != want_edges || s.vertices.size() != 3 - want_edges) return "wrong number of edges or vertices";
    std::vector<Edge> removed = plain_edges(s.edges);
    std::set<Edge> unique(removed.begin(), removed.end());
    if (unique.size() != removed.size()) return "repeated edge";
    for (const Edge& e : removed) {
        if (!g.valid(e.u) || !g.valid(e.v) || e.u == e.v || !g.has_edge(e)) return "edge not in the graph";
    }
    for (Vertex v : s.vertices) {
        if (!g.valid(v)) return "vertex out of range";
    }
    if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) || !distinct(s.vertices)) return "vertices not a sorted set";
    Graph h = delete_edges(g, removed);
    const Separation& sep = s.separation;
    if (std::string err = validate_separation(h, sep); !err.empty()) return "separation: " + err;
    if (sep.boundary != s.vertices) return "separation boundary differs from the listed vertices";
    std::vector<Vertex> as, bs;
    for (const OrientedEdge& e : s.edges) {
        if (!contains(sep.a_vertices, e.a) || contains(sep.boundary, e.a)) return "A-end not inside side A";
        if (!contains(sep.b_vertices, e.b) || contains(sep.boundary, e.b)) return "B-end not inside side B";
        as.push_back(e.a);
        bs.push_back(e.b);
    }
    if (!distinct(as) || !distinct(bs)) return "terminals on one side repeat";
    for (Vertex w : s.vertices) {
        if (part_degree(sep.a_edges, w) < 2 || part_degree(sep.b_edges, w) < 2) {
            return "boundary vertex has fewer than two neighbors on a side";
        }
    }
    return {};
}

void for_each_compatible_set(const Graph& g, Edge ab, const std::function<bool(const CompatibleSet&)>& visit) {
    require_edge(g, ab, "for_each_compatible_set");
    std::vector<Edge> others;
    for (const Edge& e : g.edges()) {
        if (e != ab) others.push_back(e);
    }
    for (std::size_t i = 0; i < others.size(); ++i) {
        for (std::size_t j = i + 1; j < others.size(); ++j) {
            if (visit_groupings(g, CompatibleType::ThreeEdges, {ab, others[i], others[j]}, {}, visit)) return;
        }
    }
    for (const Edge& e : others) {
        for (Vertex c = 0; c < g.order(); ++c) {
            if (visit_groupings(g, CompatibleType::TwoEdgesOneVertex, {ab, e}, {c}, visit)) return;
        }
    }
    for (Vertex c = 0; c < g.order(); ++c) {
        for (Vertex d = c + 1; d < g.order(); ++d) {
            if (visit_groupings(g, CompatibleType::OneEdgeTwoVertices, {ab}, {c, d}, visit)) return;
        }
    }
}

std::optional<CompatibleSet> find_compatible_set(const Graph& g, Edge ab) {
    require_edge(g, ab, "find_compatible_set");
    if (is_internally_3_connected(delete_edge(g, ab))) return std::nullopt;
    std::optional<CompatibleSet> found;
    for_each_compatible_set(g, ab, [&](const CompatibleSet& s) {
        found = s;
        return true;
    });
    return found;
}

Cleaved cleave(const Graph& g, const CompatibleSet& s) {
    if (std::string err = validate_compatible_set(g, s); !err.empty()) {
        throw GraphError("cleave: invalid compatible set: " + err);
    }
    auto build_side = [&](const VertexSet& vertices, const std::vector<Edge>& edges, bool side_a,
                          std::vector<Vertex>& to_source) {
        std::vector<Vertex> to_new(static_cast<std::size_t>(g.order()), -1);
        to_source = vertices;
        for (std::size_t i = 0; i < vertices.size(); ++i) to_new[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
        GraphBuilder b(static_cast<int>(vertices.size()));
        for (const Edge& e : edges) b.add_edge(to_new[static_cast<std::size_t>(e.u)], to_new[static_cast<std::size_t>(e.v)]);
        Vertex extra = b.add_vertex();
        to_source.push_back(-1);
        for (const OrientedEdge& e : s.edges) b.add_edge(extra, to_new[static_cast<std::size_t>(side_a ? e.a : e.b)]);
        for (Vertex w : s.vertices) b.add_edge(extra, to_new[static_cast<std::size_t>(w)]);
        return std::move(b).build();
    };
    Cleaved out;
    out.a = build_side(s.separation.a_vertices, s.separation.a_edges, true, out.a_to_source);
    out.b = build_side(s.separation.b_vertices, s.separation.b_edges, false, out.b_to_source);
    if (strict_assertions()) {
        if (is_k_connected(g, 3) && !(is_k_connected(out.a, 3) && is_k_connected(out.b, 3))) {
            report_violation("cleaving a 3-connected graph gives 3-connected parts", g);
        }
        if (is_super_minimally_k_connected(g, 3).holds &&
            !(is_super_minimally_k_connected(out.a, 3).holds && is_super_minimally_k_connected(out.b, 3).holds)) {
            report_violation("cleaving a super-minimally 3-connected graph gives super-minimal parts", g);
        }
    }
    return out;
}

}  // namespace kconn
