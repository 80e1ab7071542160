#include "kconn/classes.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "kconn/assertions.hpp"
#include "kconn/canonical.hpp"
#include "kconn/oracle.hpp"

namespace kconn {

namespace {

template <typename W>
bool start_verdict(const Graph& g, int k, Verdict<W>& out) {
    KConnectivity kc = is_k_connected_certified(g, k);
    out.k_connected = kc.connected;
    out.cut = std::move(kc.cut);
    return kc.connected;
}

class InducedSearch {
public:
    InducedSearch(const Graph& g, int k) : g_(g), k_(k) {}

    std::optional<VertexSet> run(bool forbid_full) {
        VertexSet all(static_cast<std::size_t>(g_.order()));
        for (Vertex v = 0; v < g_.order(); ++v) all[static_cast<std::size_t>(v)] = v;
        VertexSet core = peel(all);
        if (forbid_full && core == all && is_k_connected(g_, k_)) {
            // A proper induced subgraph misses some vertex.
            for (Vertex v = 0; v < g_.order(); ++v) {
                VertexSet rest;
                for (Vertex u : all) {
                    if (u != v) rest.push_back(u);
                }
                if (auto found = search(rest)) return found;
            }
            return std::nullopt;
        }
        return search(all);
    }

    long nodes() const { return nodes_; }

private:
    // Repeatedly drops vertices with fewer than k neighbors inside the set.
    VertexSet peel(VertexSet w) const {
        std::vector<char> in(static_cast<std::size_t>(g_.order()), 0);
        for (Vertex v : w) in[static_cast<std::size_t>(v)] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v : w) {
                if (!in[static_cast<std::size_t>(v)]) continue;
                int d = 0;
                for (Vertex u : g_.neighbors(v)) d += in[static_cast<std::size_t>(u)];
                if (d < k_) {
                    in[static_cast<std::size_t>(v)] = 0;
                    changed = true;
                }
            }
        }
        std::erase_if(w, [&](Vertex v) { return !in[static_cast<std::size_t>(v)]; });
        return w;
    }

    std::optional<VertexSet> search(const VertexSet& start) {
        ++nodes_;
        VertexSet w = peel(start);
        if (static_cast<int>(w.size()) <= k_) return std::nullopt;
        if (dead_sets_.count(w)) return std::nullopt;
        Relabeled h = induced_subgraph(g_, w);
        std::string key;
        if (h.graph.order() <= kDefaultCanonicalCap) {
            key = canonical_key(h.graph);
            if (dead_keys_.count(key)) return std::nullopt;
        }
        std::optional<VertexSet> cut = find_small_cut(h.graph, k_);
        if (!cut) return w;
        VertexSet x;
        for (Vertex c : *cut) x.push_back(h.new_to_old[static_cast<std::size_t>(c)]);
        for (const VertexSet& comp : components_avoiding(h.graph, *cut)) {
            VertexSet sub = x;
            for (Vertex c : comp) sub.push_back(h.new_to_old[static_cast<std::size_t>(c)]);
            std::sort(sub.begin(), sub.end());
            if (auto found = search(sub)) return found;
        }
        dead_sets_.insert(w);
        if (!key.empty()) dead_keys_.insert(key);
        return std::nullopt;
    }

    const Graph& g_;
    int k_;
    long nodes_ = 0;
    std::set<VertexSet> dead_sets_;
    std::unordered_set<std::string> dead_keys_;
};

SubgraphWitness induced_witness(const Graph& g, const VertexSet& s) {
    SubgraphWitness w;
    w.vertices = s;
    for (const Edge& e : g.edges()) {
        if (std::binary_search(s.begin(), s.end(), e.u) && std::binary_search(s.begin(), s.end(), e.v)) {
            w.edges.push_back(e);
        }
    }
    return w;
}

SubgraphWitness spanning_witness(const Graph& g, Edge removed) {
    SubgraphWitness w;
    for (Vertex v = 0; v < g.order(); ++v) w.vertices.push_back(v);
    for (const Edge& e : g.edges()) {
        if (e != removed) w.edges.push_back(e);
    }
    return w;
}

}  // namespace

std::string check_label_invariants(const ClassLabel& l) {
    if ((l.minimal || l.critical || l.uniform || l.super_minimal) && !l.k_connected) {
        return "a class flag is set on a graph that is not k-connected";
    }
    if (l.super_minimal && !(l.minimal && l.critical)) return "super-minimal without minimal and critical";
    if (l.k >= 2 && l.uniform && !l.super_minimal) return "uniform without super-minimal";
    return {};
}

Verdict<Edge> is_minimally_k_connected(const Graph& g, int k) {
    Verdict<Edge> out;
    if (!start_verdict(g, k, out)) return out;
    for (const Edge& e : g.edges()) {
        ++out.checked;
        if (is_k_connected(delete_edge(g, e), k)) {
            out.witness = e;
            break;
        }
    }
    out.holds = !out.witness;
    if (k == 3) {
        // Second route: minimal iff every adjacent pair has exactly three disjoint paths.
        bool by_paths = true;
        for (const Edge& e : g.edges()) {
            if (local_connectivity_count(g, e.u, e.v, 4) != 3) {
                by_paths = false;
                break;
            }
        }
        if (by_paths != out.holds) report_violation("edge-deletion and path-count minimality disagree", g);
    }
    return out;
}

Verdict<Vertex> is_critically_k_connected(const Graph& g, int k) {
    Verdict<Vertex> out;
    if (!start_verdict(g, k, out)) return out;
    for (Vertex v = 0; v < g.order(); ++v) {
        ++out.checked;
        if (is_k_connected(delete_vertex(g, v).graph, k)) {
            out.witness = v;
            break;
        }
    }
    out.holds = !out.witness;
    return out;
}

namespace {

Verdict<PairWitness> uniformity(const Graph& g, int k, std::optional<Edge> hint) {
    Verdict<PairWitness> out;
    if (!start_verdict(g, k, out)) return out;
    auto refute = [&](Vertex u, Vertex v) {
        LocalConnectivity lc = local_connectivity(g, u, v);
        out.witness = PairWitness{u, v, lc.count, std::move(lc.paths)};
    };
    if (hint && local_connectivity_count(g, hint->u, hint->v, k + 1) != k) {
        refute(hint->u, hint->v);
        return out;
    }
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            ++out.checked;
            if (local_connectivity_count(g, u, v, k + 1) != k) {
                refute(u, v);
                return out;
            }
        }
    }
    out.holds = true;
    return out;
}

Verdict<SubgraphWitness> super_minimality(const Graph& g, int k, const Verdict<Edge>& minimal) {
    Verdict<SubgraphWitness> out;
    out.k_connected = minimal.k_connected;
    out.cut = minimal.cut;
    if (!out.k_connected) return out;
    if (minimal.witness) {
        out.witness = spanning_witness(g, *minimal.witness);
        return out;
    }
    // Any proper k-connected subgraph on all vertices would make some g \ e
    // k-connected, so only proper induced subgraphs remain to be excluded.
    InducedSearch search(g, k);
    std::optional<VertexSet> found = search.run(true);
    out.checked = search.nodes();
    if (found) out.witness = induced_witness(g, *found);
    out.holds = !found;
    return out;
}

}  // namespace

Verdict<PairWitness> is_uniformly_k_connected(const Graph& g, int k) { return uniformity(g, k, std::nullopt); }

std::optional<VertexSet> contains_k_connected_induced(const Graph& g, int k, bool forbid_full) {
    if (k < 1) throw GraphError("contains_k_connected_induced: k must be positive");
    return InducedSearch(g, k).run(forbid_full);
}

Verdict<SubgraphWitness> is_super_minimally_k_connected(const Graph& g, int k) {
    return super_minimality(g, k, is_minimally_k_connected(g, k));
}

Classification classify(const Graph& g, int k) {
    Classification c;
    c.label.k = k;
    Verdict<Edge> minimal = is_minimally_k_connected(g, k);
    c.label.k_connected = minimal.k_connected;
    if (!minimal.k_connected) {
        if (minimal.cut) c.certificate.not_k_connected = minimal.cut;
        return c;
    }
    c.label.minimal = minimal.holds;
    c.certificate.not_minimal = minimal.witness;
    c.certificate.edges_checked = minimal.checked;

    Verdict<Vertex> critical = is_critically_k_connected(g, k);
    c.label.critical = critical.holds;
    c.certificate.not_critical = critical.witness;
    c.certificate.vertices_checked = critical.checked;

    Verdict<PairWitness> uniform = uniformity(g, k, minimal.witness);
    c.label.uniform = uniform.holds;
    c.certificate.not_uniform = std::move(uniform.witness);
    c.certificate.pairs_checked = uniform.checked;

    Verdict<SubgraphWitness> sm = super_minimality(g, k, minimal);
    c.label.super_minimal = sm.holds;
    c.certificate.not_super_minimal = std::move(sm.witness);
    c.certificate.subproblems_checked = sm.checked;

    if (std::string err = check_label_invariants(c.label); !err.empty()) report_violation(err, g);
    return c;
}

std::string validate_certificate(const Graph& g, const Classification& c) {
    const ClassLabel& l = c.label;
    const ClassCertificate& cert = c.certificate;
    const int k = l.k;
    if (std::string err = check_label_invariants(l); !err.empty()) return err;
    if (k_connected_by_definition(g, k) != l.k_connected) return "k-connectivity flag disagrees with the definition";
    if (!l.k_connected) {
        if (g.order() <= k) return {};
        if (!cert.not_k_connected) return "missing cut witness";
        if (std::string err = validate_cut(g, *cert.not_k_connected); !err.empty()) return "cut witness: " + err;
        if (static_cast<int>(cert.not_k_connected->cut.size()) >= k) return "cut witness is not smaller than k";
        return {};
    }

    const long n = g.order();
    if (l.minimal) {
        if (cert.edges_checked != g.size()) return "minimality attested over the wrong number of edges";
    } else {
        if (!cert.not_minimal || !g.has_edge(*cert.not_minimal)) return "missing or foreign edge witness";
        if (!k_connected_by_definition(delete_edge(g, *cert.not_minimal), k)) return "edge witness does not refute minimality";
    }
    if (l.critical) {
        if (cert.vertices_checked != n) return "criticality attested over the wrong number of vertices";
    } else {
        if (!cert.not_critical || !g.valid(*cert.not_critical)) return "missing vertex witness";
        if (!k_connected_by_definition(delete_vertex(g, *cert.not_critical).graph, k)) {
            return "vertex witness does not refute criticality";
        }
    }
    if (l.uniform) {
        if (cert.pairs_checked != n * (n - 1) / 2) return "uniformity attested over the wrong number of pairs";
    } else {
        if (!cert.not_uniform) return "missing pair witness";
        const PairWitness& p = *cert.not_uniform;
        if (p.paths.source != p.u || p.paths.targets != VertexSet{p.v}) return "pair witness paths have wrong ends";
        if (std::string err = validate_path_family(g, p.paths, false); !err.empty()) return "pair witness: " + err;
        if (static_cast<int>(p.paths.paths.size()) != p.count || p.count <= k) {
            return "pair witness does not exceed k disjoint paths";
        }
    }
    if (!l.super_minimal) {
        if (!cert.not_super_minimal) return "missing subgraph witness";
        const SubgraphWitness& w = *cert.not_super_minimal;
        if (w.vertices.size() == static_cast<std::size_t>(n) && w.edges.size() == static_cast<std::size_t>(g.size())) {
            return "subgraph witness is not proper";
        }
        if (!subgraph_k_connected_by_definition(g, w.vertices, w.edges, k)) return "subgraph witness is not k-connected";
    }
    return {};
}

}  // namespace kconn
