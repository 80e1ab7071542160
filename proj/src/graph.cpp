#include "kconn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kconn {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void require_vertex(int n, Vertex v, const char* what) {
    if (v < 0 || v >= n) {
        throw GraphError(std::string(what) + ": vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n) + ")");
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[idx(x)] != x) {
            parent[idx(x)] = parent[idx(parent[idx(x)])];
            x = parent[idx(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[idx(b)] = a;
        return true;
    }
};

}  // namespace

Graph::Graph(int order) {
    if (order < 0) throw GraphError("negative vertex count");
    adj_.resize(idx(order));
    words_ = (order + 63) / 64;
    bits_.assign(idx(order) * idx(words_), 0);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!valid(u) || !valid(v)) return false;
    return (bits_[idx(u) * idx(words_) + idx(v / 64)] >> (v % 64)) & 1U;
}

int Graph::min_degree() const {
    int best = order() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::count_degree(int d) const {
    int c = 0;
    for (Vertex v = 0; v < order(); ++v) c += degree(v) == d ? 1 : 0;
    return c;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(idx(edge_count_));
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::check_invariants() const {
    int half_edges = 0;
    for (Vertex v = 0; v < order(); ++v) {
        const auto& nb = adj_[idx(v)];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            Vertex u = nb[i];
            if (!valid(u)) throw InvariantViolation("adjacency holds an out-of-range id");
            if (u == v) throw InvariantViolation("loop at vertex " + std::to_string(v));
            if (i > 0 && nb[i - 1] >= u) throw InvariantViolation("adjacency not strictly sorted");
            if (!std::binary_search(adj_[idx(u)].begin(), adj_[idx(u)].end(), v)) {
                throw InvariantViolation("asymmetric adjacency");
            }
            if (!adjacent(v, u)) throw InvariantViolation("bit matrix out of sync");
        }
        half_edges += static_cast<int>(nb.size());
    }
    if (half_edges != 2 * edge_count_) throw InvariantViolation("edge count out of sync");
}

GraphBuilder::GraphBuilder(const Graph& g) : adj_(idx(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) {
        adj_[idx(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    }
}

Vertex GraphBuilder::add_vertex() {
    adj_.emplace_back();
    return order() - 1;
}

bool GraphBuilder::adjacent(Vertex a, Vertex b) const {
    const auto& nb = adj_[idx(a)];
    return std::find(nb.begin(), nb.end(), b) != nb.end();
}

bool GraphBuilder::add_edge(Vertex a, Vertex b) {
    require_vertex(order(), a, "add_edge");
    require_vertex(order(), b, "add_edge");
    if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
    if (adjacent(a, b)) return false;
    adj_[idx(a)].push_back(b);
    adj_[idx(b)].push_back(a);
    return true;
}

bool GraphBuilder::remove_edge(Vertex a, Vertex b) {
    require_vertex(order(), a, "remove_edge");
    require_vertex(order(), b, "remove_edge");
    auto& na = adj_[idx(a)];
    auto it = std::find(na.begin(), na.end(), b);
    if (it == na.end()) return false;
    na.erase(it);
    auto& nb = adj_[idx(b)];
    nb.erase(std::find(nb.begin(), nb.end(), a));
    return true;
}

Graph GraphBuilder::build() const& {
    GraphBuilder copy = *this;
    return std::move(copy).build();
}

Graph GraphBuilder::build() && {
    Graph g(order());
    int half = 0;
    for (Vertex v = 0; v < order(); ++v) {
        auto& nb = adj_[idx(v)];
        std::sort(nb.begin(), nb.end());
        for (Vertex u : nb) g.bits_[idx(v) * idx(g.words_) + idx(u / 64)] |= std::uint64_t{1} << (u % 64);
        half += static_cast<int>(nb.size());
    }
    g.adj_ = std::move(adj_);
    g.edge_count_ = half / 2;
    return g;
}

Graph build_graph(int n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    GraphBuilder b(n);
    for (const Edge& e : edges) b.add_edge(e.u, e.v);
    return std::move(b).build();
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    GraphBuilder b(n);
    for (auto [x, y] : edges) b.add_edge(x, y);
    return std::move(b).build();
}

Graph add_edge(const Graph& g, Edge e) {
    GraphBuilder b(g);
    if (!b.add_edge(e.u, e.v)) throw GraphError("add_edge: edge already present");
    return std::move(b).build();
}

Graph delete_edge(const Graph& g, Edge e) {
    GraphBuilder b(g);
    if (!b.remove_edge(e.u, e.v)) throw GraphError("delete_edge: edge not present");
    return std::move(b).build();
}

Graph delete_edges(const Graph& g, std::span<const Edge> es) {
    GraphBuilder b(g);
    for (const Edge& e : es) {
        if (!b.remove_edge(e.u, e.v)) throw GraphError("delete_edges: edge not present");
    }
    return std::move(b).build();
}

Relabeled delete_vertices(const Graph& g, const VertexSet& s) {
    std::vector<bool> gone(idx(g.order()), false);
    for (Vertex v : s) {
        require_vertex(g.order(), v, "delete_vertices");
        gone[idx(v)] = true;
    }
    VertexSet keep;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!gone[idx(v)]) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

Relabeled delete_vertex(const Graph& g, Vertex v) {
    require_vertex(g.order(), v, "delete_vertex");
    return delete_vertices(g, VertexSet{v});
}

Contraction contract_edges(const Graph& g, std::span<const Edge> es) {
    UnionFind uf(g.order());
    std::set<Edge> contracted;
    for (const Edge& e : es) {
        if (!g.has_edge(e)) throw GraphError("contract: edge not present");
        uf.unite(e.u, e.v);
        contracted.insert(e);
    }
    Contraction out;
    out.old_to_new.assign(idx(g.order()), -1);
    std::vector<Vertex> root_id(idx(g.order()), -1);
    int next = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        int r = uf.find(v);
        if (root_id[idx(r)] < 0) root_id[idx(r)] = next++;
        out.old_to_new[idx(v)] = root_id[idx(r)];
    }
    GraphBuilder b(next);
    for (const Edge& e : g.edges()) {
        if (contracted.count(e)) continue;
        Vertex a = out.old_to_new[idx(e.u)];
        Vertex c = out.old_to_new[idx(e.v)];
        if (a == c || !b.add_edge(a, c)) out.simple = false;
    }
    out.graph = std::move(b).build();
    return out;
}

Contraction contract_edge(const Graph& g, Edge e) {
    const Edge one[] = {e};
    return contract_edges(g, one);
}

Relabeled mutate(const Graph& g, const Edit& edit) {
    auto identity = [&](Graph h) {
        Relabeled r;
        r.old_to_new.resize(idx(g.order()));
        std::iota(r.old_to_new.begin(), r.old_to_new.end(), 0);
        r.new_to_old.resize(idx(h.order()));
        std::iota(r.new_to_old.begin(), r.new_to_old.end(), 0);
        r.graph = std::move(h);
        return r;
    };
    return std::visit(
        [&](const auto& op) -> Relabeled {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, AddEdge>) {
                return identity(add_edge(g, op.e));
            } else if constexpr (std::is_same_v<T, DeleteEdge>) {
                return identity(delete_edge(g, op.e));
            } else if constexpr (std::is_same_v<T, DeleteVertex>) {
                return delete_vertex(g, op.v);
            } else {
                Contraction c = contract_edge(g, op.e);
                Relabeled r;
                r.new_to_old.assign(idx(c.graph.order()), -1);
                for (Vertex v = g.order() - 1; v >= 0; --v) r.new_to_old[idx(c.old_to_new[idx(v)])] = v;
                r.old_to_new = std::move(c.old_to_new);
                r.graph = std::move(c.graph);
                return r;
            }
        },
        edit);
}

Relabeled induced_subgraph(const Graph& g, const VertexSet& s) {
    Relabeled r;
    r.old_to_new.assign(idx(g.order()), -1);
    for (Vertex v : s) {
        require_vertex(g.order(), v, "induced_subgraph");
        if (r.old_to_new[idx(v)] >= 0) throw GraphError("induced_subgraph: duplicate id");
        r.old_to_new[idx(v)] = 0;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (r.old_to_new[idx(v)] >= 0) {
            r.old_to_new[idx(v)] = static_cast<Vertex>(r.new_to_old.size());
            r.new_to_old.push_back(v);
        }
    }
    GraphBuilder b(static_cast<int>(r.new_to_old.size()));
    for (Vertex nv = 0; nv < b.order(); ++nv) {
        for (Vertex u : g.neighbors(r.new_to_old[idx(nv)])) {
            Vertex nu = r.old_to_new[idx(u)];
            if (nu > nv) b.add_edge(nv, nu);
        }
    }
    r.graph = std::move(b).build();
    return r;
}

VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> ids) {
    for (Vertex v : ids) require_vertex(g.order(), v, "vertex set");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<bool> mark(idx(g.order()), false);
    for (Vertex v : s) {
        require_vertex(g.order(), v, "neighborhood");
        mark[idx(v)] = true;
        for (Vertex u : g.neighbors(v)) mark[idx(u)] = true;
    }
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (mark[idx(v)]) out.push_back(v);
    }
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet closed = closed_neighborhood(g, s);
    VertexSet sorted = make_vertex_set(g, s);
    VertexSet out;
    std::set_difference(closed.begin(), closed.end(), sorted.begin(), sorted.end(), std::back_inserter(out));
    return out;
}

VertexSet neighborhoods(const Graph& g, const VertexSet& s, bool closed) {
    return closed ? closed_neighborhood(g, s) : open_neighborhood(g, s);
}

std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed) {
    std::vector<int> comp(idx(g.order()), -1);
    for (Vertex v : removed) comp[idx(v)] = -2;
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[idx(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[idx(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex u : g.neighbors(v)) {
                if (comp[idx(u)] == -1) {
                    comp[idx(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_avoiding(g, {}); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_forest(const Graph& g, const VertexSet& s) {
    std::vector<bool> in(idx(g.order()), false);
    for (Vertex v : s) in[idx(v)] = true;
    UnionFind uf(g.order());
    for (Vertex v : s) {
        for (Vertex u : g.neighbors(v)) {
            if (u > v && in[idx(u)] && !uf.unite(u, v)) return false;
        }
    }
    return true;
}

std::string validate_separation(const Graph& g, const Separation& s) {
    auto sorted_unique = [](const VertexSet& vs) {
        return std::is_sorted(vs.begin(), vs.end()) && std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    };
    if (!sorted_unique(s.a_vertices) || !sorted_unique(s.b_vertices) || !sorted_unique(s.boundary)) {
        return "vertex sets must be sorted and duplicate-free";
    }
    for (const VertexSet* vs : {&s.a_vertices, &s.b_vertices}) {
        for (Vertex v : *vs) {
            if (!g.valid(v)) return "vertex id out of range";
        }
    }
    VertexSet meet;
    std::set_intersection(s.a_vertices.begin(), s.a_vertices.end(), s.b_vertices.begin(), s.b_vertices.end(),
                          std::back_inserter(meet));
    if (meet != s.boundary) return "boundary is not the intersection of the parts";
    VertexSet all;
    std::set_union(s.a_vertices.begin(), s.a_vertices.end(), s.b_vertices.begin(), s.b_vertices.end(),
                   std::back_inserter(all));
    if (static_cast<int>(all.size()) != g.order()) return "parts do not cover every vertex";
    int k = s.k();
    if (static_cast<int>(s.a_vertices.size()) < k + 1 || static_cast<int>(s.b_vertices.size()) < k + 1) {
        return "a part has fewer than k+1 vertices";
    }
    std::set<Edge> seen;
    auto take = [&](const std::vector<Edge>& es, const VertexSet& vs) -> std::string {
        for (const Edge& e : es) {
            if (!g.has_edge(e)) return "part edge not in graph";
            if (!std::binary_search(vs.begin(), vs.end(), e.u) || !std::binary_search(vs.begin(), vs.end(), e.v)) {
                return "part edge leaves its part";
            }
            if (!seen.insert(e).second) return "edge assigned to both parts";
        }
        return {};
    };
    if (auto err = take(s.a_edges, s.a_vertices); !err.empty()) return err;
    if (auto err = take(s.b_edges, s.b_vertices); !err.empty()) return err;
    if (static_cast<int>(seen.size()) != g.size()) return "parts do not cover every edge";
    return {};
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

}  // namespace kconn
