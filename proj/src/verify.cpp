#include <algorithm>
#include <array>
#include <sstream>

#include "kconn/assertions.hpp"
#include "kconn/canonical.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/enumeration.hpp"
#include "kconn/generators.hpp"
#include "kconn/oracle.hpp"
#include "kconn/transforms.hpp"

namespace kconn {

namespace {

bool in_class(const ClassLabel& l, GraphClass c) {
    switch (c) {
        case GraphClass::Minimal: return l.minimal;
        case GraphClass::Uniform: return l.uniform;
        case GraphClass::SuperMinimal: return l.super_minimal;
    }
    return false;
}

// Membership re-checked from the definitions, for violation entries.
bool confirm_class(const Graph& g, int k, GraphClass c) {
    if (!k_connected_by_definition(g, k)) return false;
    if (c == GraphClass::SuperMinimal && g.order() <= kOracleMaxOrder) return brute_force_super_minimal_oracle(g, k);
    for (const Edge& e : g.edges()) {
        if (k_connected_by_definition(delete_edge(g, e), k)) return false;
    }
    if (c == GraphClass::Uniform) {
        for (Vertex u = 0; u < g.order(); ++u) {
            for (Vertex v = u + 1; v < g.order(); ++v) {
                int paths = g.adjacent(u, v) ? 1 + separating_set_size_by_enumeration(delete_edge(g, Edge(u, v)), u, v)
                                             : separating_set_size_by_enumeration(g, u, v);
                if (paths != k) return false;
            }
        }
    }
    if (c == GraphClass::SuperMinimal) return !contains_k_connected_induced(g, k, true);
    return true;
}

Json header(const std::string& job, const ClassifiedPopulation& pop) {
    Json h;
    h["record"] = "job";
    h["job"] = job;
    h["k"] = pop.k;
    h["orders"] = {pop.orders.lo, pop.orders.hi};
    h["source"] = pop.source;
    return h;
}

JobReport start(const std::string& job, const ClassifiedPopulation& pop) {
    JobReport r;
    r.job = job;
    r.records.push_back(header(job, pop));
    return r;
}

void add_violation(JobReport& r, const std::string& claim, const std::string& graph6, Json detail = Json::object()) {
    Json v;
    v["record"] = "violation";
    v["claim"] = claim;
    v["graph6"] = graph6;
    v["detail"] = std::move(detail);
    r.records.push_back(std::move(v));
    ++r.violations;
}

// Classification failures are violations of the class hierarchy in every job.
void report_errors(JobReport& r, const std::vector<ClassifiedGraph>& graphs) {
    for (const ClassifiedGraph& c : graphs) {
        if (!c.error.empty()) add_violation(r, "classification", c.graph6, Json{{"error", c.error}});
    }
}

void finish(JobReport& r) {
    Json s;
    s["record"] = "summary";
    s["job"] = r.job;
    s["violations"] = r.violations;
    s["input_errors"] = r.input_errors;
    r.records.push_back(std::move(s));
}

std::string fraction(long num, long den) { return std::to_string(num) + "/" + std::to_string(den); }

bool is_wheel(const Graph& g) { return g.order() >= 4 && isomorphic(g, wheel_graph(g.order() - 1)); }

int min_degree(const Graph& g) {
    int d = g.order();
    for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

struct EdgeBound {
    long bound = 0;
    std::string equality;  ///< name of the only graphs attaining it; empty when unstated
    std::optional<Graph> extremal;
};

std::optional<EdgeBound> edge_bound(GraphClass c, int k, int n) {
    if (k == 3 && (c == GraphClass::SuperMinimal || c == GraphClass::Uniform)) {
        if (n < 4) return std::nullopt;
        return EdgeBound{2L * n - 2, "wheel", wheel_graph(n - 1)};
    }
    if (k == 3 && c == GraphClass::Minimal) {
        if (n < 7) return std::nullopt;
        if (n < 8) return EdgeBound{3L * n - 9, "", std::nullopt};
        return EdgeBound{3L * n - 9, "K3,n-3", complete_bipartite_graph(3, n - 3)};
    }
    if (k == 2 && c == GraphClass::Minimal) {
        if (n < 4) return std::nullopt;
        return EdgeBound{2L * n - 4, "K2,n-2", complete_bipartite_graph(2, n - 2)};
    }
    throw GraphError("edge bound: no bound known for class " + to_string(c) + " at k = " + std::to_string(k));
}

}  // namespace

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Minimal: return "minimal";
        case GraphClass::Uniform: return "uniform";
        case GraphClass::SuperMinimal: return "super-minimal";
    }
    return "?";
}

std::optional<GraphClass> parse_graph_class(const std::string& s) {
    if (s == "minimal") return GraphClass::Minimal;
    if (s == "uniform") return GraphClass::Uniform;
    if (s == "super-minimal" || s == "superminimal") return GraphClass::SuperMinimal;
    return std::nullopt;
}

std::optional<DegreeBound> degree_bound(GraphClass c, int k, int n) {
    if (k == 3 && c == GraphClass::SuperMinimal) return DegreeBound{n + 3L, 2};
    if (k == 3 && c == GraphClass::Uniform) return DegreeBound{2L * n + 2, 3};
    if (k >= 2) return DegreeBound{(k - 1L) * n + 2L * k, 2L * k - 1};
    return std::nullopt;
}

JobReport verify_degree_bound(const ClassifiedPopulation& pop, GraphClass c) {
    const int k = pop.k;
    JobReport r = start("degree-bound", pop);
    r.records.front()["class"] = to_string(c);
    if (!degree_bound(c, k, k + 1)) throw GraphError("degree bound: no bound known at k = " + std::to_string(k));
    for (const auto& [n, graphs] : pop.by_order) {
        report_errors(r, graphs);
        const DegreeBound bound = *degree_bound(c, k, n);
        long members = 0, attained = 0;
        int min_vk = -1;
        for (const ClassifiedGraph& g : graphs) {
            if (!g.error.empty() || !in_class(g.classification.label, c)) continue;
            ++members;
            min_vk = min_vk < 0 ? g.degree_k_vertices : std::min(min_vk, g.degree_k_vertices);
            attained += g.degree_k_vertices == bound.ceiling() ? 1 : 0;
            if (!bound.satisfied_by(g.degree_k_vertices)) {
                add_violation(r, "v_k >= " + fraction(bound.num, bound.den), g.graph6,
                              Json{{"v_k", g.degree_k_vertices}, {"confirmed_member", confirm_class(g.graph, k, c)}});
            }
        }
        Json rec;
        rec["record"] = "order";
        rec["n"] = n;
        rec["examined"] = graphs.size();
        rec["members"] = members;
        rec["min_v_k"] = min_vk;
        rec["bound"] = fraction(bound.num, bound.den);
        rec["bound_ceiling"] = bound.ceiling();
        rec["attaining"] = attained;
        r.records.push_back(std::move(rec));
    }
    finish(r);
    return r;
}

JobReport verify_edge_bound(const ClassifiedPopulation& pop, GraphClass c) {
    const int k = pop.k;
    JobReport r = start("edge-bound", pop);
    r.records.front()["class"] = to_string(c);
    edge_bound(c, k, 100);
    for (const auto& [n, graphs] : pop.by_order) {
        report_errors(r, graphs);
        std::optional<EdgeBound> bound = edge_bound(c, k, n);
        long members = 0;
        int max_edges = -1;
        std::vector<std::string> equality;
        bool extremal_found = false;
        for (const ClassifiedGraph& g : graphs) {
            if (!g.error.empty() || !in_class(g.classification.label, c)) continue;
            ++members;
            max_edges = std::max(max_edges, g.graph.size());
            if (!bound) continue;
            const bool is_extremal = bound->extremal && isomorphic(g.graph, *bound->extremal);
            extremal_found = extremal_found || is_extremal;
            if (g.graph.size() > bound->bound) {
                add_violation(r, "|E| <= " + std::to_string(bound->bound), g.graph6,
                              Json{{"edges", g.graph.size()}, {"confirmed_member", confirm_class(g.graph, k, c)}});
            } else if (g.graph.size() == bound->bound) {
                equality.push_back(g.graph6);
                if (bound->extremal && !is_extremal) {
                    add_violation(r, "equality only for " + bound->equality, g.graph6,
                                  Json{{"edges", g.graph.size()}, {"confirmed_member", confirm_class(g.graph, k, c)}});
                }
            }
        }
        // The named extremal graph must itself be in the class and attain the bound.
        if (bound && bound->extremal && min_degree(*bound->extremal) >= k && !extremal_found) {
            add_violation(r, bound->equality + " attains the bound", to_graph6(*bound->extremal));
        }
        Json rec;
        rec["record"] = "order";
        rec["n"] = n;
        rec["examined"] = graphs.size();
        rec["members"] = members;
        rec["max_edges"] = max_edges;
        if (bound) {
            rec["bound"] = bound->bound;
            rec["equality"] = equality;
            if (!bound->equality.empty()) rec["equality_only"] = bound->equality;
        } else {
            rec["bound"] = nullptr;
        }
        r.records.push_back(std::move(rec));
    }
    finish(r);
    return r;
}

JobReport verify_inclusions(const ClassifiedPopulation& pop) {
    const int k = pop.k;
    JobReport r = start("inclusions", pop);
    struct Relation {
        const char* name;
        std::optional<std::string> witness;
    };
    std::array<Relation, 4> strict = {Relation{"minimal-not-super-minimal", {}}, Relation{"super-minimal-not-uniform", {}},
                                      Relation{"critical-not-minimal", {}}, Relation{"minimal-and-critical-not-super-minimal", {}}};
    for (const auto& [n, graphs] : pop.by_order) {
        report_errors(r, graphs);
        std::array<long, 5> tally{};
        for (const ClassifiedGraph& g : graphs) {
            if (!g.error.empty()) continue;
            const ClassLabel& l = g.classification.label;
            tally[0] += l.k_connected;
            tally[1] += l.minimal;
            tally[2] += l.critical;
            tally[3] += l.uniform;
            tally[4] += l.super_minimal;
            if (std::string err = check_label_invariants(l); !err.empty()) add_violation(r, err, g.graph6);
            if (l.minimal && !l.super_minimal && !strict[0].witness) strict[0].witness = g.graph6;
            if (l.super_minimal && !l.uniform && !strict[1].witness) strict[1].witness = g.graph6;
            if (l.critical && !l.minimal && !strict[2].witness) strict[2].witness = g.graph6;
            if (l.minimal && l.critical && !l.super_minimal && !strict[3].witness) strict[3].witness = g.graph6;
            if (k == 2) {
                const bool cycle = g.graph.size() == n && l.k_connected;
                if (l.super_minimal != cycle) add_violation(r, "super-minimally 2-connected exactly the cycles", g.graph6);
            }
            if (k == 1 && l.super_minimal != (n == 2)) {
                add_violation(r, "super-minimally 1-connected exactly K2", g.graph6);
            }
        }
        if (k == 2 && n >= 3) {
            // The cycle itself has minimum degree 2, so it must be in the population.
            const std::string cycle = canonical_key(cycle_graph(n));
            bool present = std::any_of(graphs.begin(), graphs.end(),
                                       [&](const ClassifiedGraph& g) { return canonical_key(g.graph) == cycle; });
            if (!present) add_violation(r, "cycle present in the population", to_graph6(cycle_graph(n)));
        }
        if (k == 1 && n == 2 && graphs.size() != 1) add_violation(r, "K2 present in the population", "A_");
        Json rec;
        rec["record"] = "tally";
        rec["n"] = n;
        rec["k"] = k;
        rec["examined"] = graphs.size();
        rec["k_connected"] = tally[0];
        rec["minimal"] = tally[1];
        rec["critical"] = tally[2];
        rec["uniform"] = tally[3];
        rec["super_minimal"] = tally[4];
        r.records.push_back(std::move(rec));
    }
    for (const Relation& rel : strict) {
        Json rec;
        rec["record"] = "strictness";
        rec["relation"] = rel.name;
        rec["found"] = rel.witness.has_value();
        rec["graph6"] = rel.witness ? Json(*rel.witness) : Json(nullptr);
        r.records.push_back(std::move(rec));
    }
    finish(r);
    return r;
}

JobReport extremal_search(const ClassifiedPopulation& pop) {
    if (pop.k != 3) throw GraphError("extremal search runs at k = 3");
    JobReport r = start("extremal", pop);
    for (const auto& [n, graphs] : pop.by_order) {
        report_errors(r, graphs);
        const long target = (n + 4) / 2;  // ceil((n + 3) / 2)
        Json found = Json::array();
        for (const ClassifiedGraph& g : graphs) {
            if (!g.error.empty() || !g.classification.label.super_minimal) continue;
            if (g.degree_k_vertices < target) {
                add_violation(r, "v_3 >= (n+3)/2", g.graph6, Json{{"v_k", g.degree_k_vertices}});
            }
            if (g.degree_k_vertices != target) continue;
            Json e;
            e["graph6"] = g.graph6;
            e["edges"] = g.graph.size();
            e["wheel"] = is_wheel(g.graph);
            const bool belt = n >= 13 && (n - 13) % 12 == 0 && g.degree_k_vertices == 8 + 6 * ((n - 13) / 12);
            e["belt_fingerprint"] = belt;
            found.push_back(std::move(e));
        }
        Json rec;
        rec["record"] = "extremal";
        rec["n"] = n;
        rec["v_3"] = target;
        rec["count"] = found.size();
        rec["graphs"] = std::move(found);
        r.records.push_back(std::move(rec));
    }
    finish(r);
    return r;
}

JobReport check_structure_lemmas(const ClassifiedPopulation& pop) {
    if (pop.k != 3) throw GraphError("structure lemmas run at k = 3");
    JobReport r = start("lemmas", pop);
    struct Counter {
        std::string name;
        long graphs = 0;
        long cases = 0;
        long violations = 0;
    };
    std::vector<Counter> counters = {{"high-degree-forest"},       {"cycles-meet-two-degree-3"},
                                     {"order-4-contraction"},      {"degree-forest-contraction"},
                                     {"forest-contraction-lifts"}};
    auto fail = [&](Counter& c, const std::string& graph6, Json detail) {
        ++c.violations;
        add_violation(r, c.name, graph6, std::move(detail));
    };
    std::vector<Graph> super_minimal;
    for (const auto& [n, graphs] : pop.by_order) {
        report_errors(r, graphs);
        for (const ClassifiedGraph& cg : graphs) {
            const Graph& g = cg.graph;
            const ClassLabel& l = cg.classification.label;
            if (l.super_minimal) super_minimal.push_back(g);

            // Forests of one or two edges whose contraction is simple and
            // 3-connected lift 3-connectivity back to g.
            Counter& lift = counters[4];
            ++lift.graphs;
            const std::vector<Edge>& es = g.edges();
            for (std::size_t i = 0; i < es.size(); ++i) {
                for (std::size_t j = i; j < es.size(); ++j) {
                    std::vector<Edge> forest = {es[i]};
                    if (j != i) forest.push_back(es[j]);
                    ++lift.cases;
                    Contraction c = contract_edges(g, forest);
                    if (c.simple && is_k_connected(c.graph, 3) && !l.k_connected) {
                        fail(lift, cg.graph6, Json{{"edges", Json::array({Json::array({es[i].u, es[i].v}),
                                                                           Json::array({es[j].u, es[j].v})})}});
                    }
                }
            }
            if (!l.minimal) continue;

            VertexSet high;
            for (Vertex v = 0; v < g.order(); ++v) {
                if (g.degree(v) > 3) high.push_back(v);
            }
            ++counters[0].graphs;
            ++counters[0].cases;
            if (!is_forest(g, high)) fail(counters[0], cg.graph6, Json::object());

            // A cycle through at most one degree-3 vertex lives in the
            // high-degree vertices plus that vertex.
            ++counters[1].graphs;
            for (Vertex v = 0; v < g.order(); ++v) {
                if (g.degree(v) != 3) continue;
                ++counters[1].cases;
                VertexSet s = high;
                s.insert(std::upper_bound(s.begin(), s.end(), v), v);
                if (!is_forest(g, s)) fail(counters[1], cg.graph6, Json{{"vertex", v}});
            }

            ++counters[2].graphs;
            for (const Edge& e : es) {
                if (edge_order(g, e) < 4) continue;
                ++counters[2].cases;
                Contraction c = contract_edge(g, e);
                if (!c.simple || !is_minimally_k_connected(c.graph, 3).holds) {
                    fail(counters[2], cg.graph6, Json{{"edge", {e.u, e.v}}});
                }
            }

            if (l.critical) {
                ++counters[3].graphs;
                ++counters[3].cases;
                try {
                    ForestContraction f = contract_degree_forest(g, 3);
                    if (!f.simple || !is_minimally_k_connected(f.graph, 3).holds ||
                        !is_critically_k_connected(f.graph, 3).holds) {
                        fail(counters[3], cg.graph6, Json::object());
                    }
                } catch (const InvariantViolation& e) {
                    fail(counters[3], cg.graph6, Json{{"error", e.what()}});
                }
            }
        }
    }
    for (const Counter& c : counters) {
        Json rec;
        rec["record"] = "lemma";
        rec["lemma"] = c.name;
        rec["graphs"] = c.graphs;
        rec["cases"] = c.cases;
        rec["violations"] = c.violations;
        r.records.push_back(std::move(rec));
    }

    // Super-minimal graph whose order-4 edge contracts to a non-super-minimal graph.
    std::optional<ContractionCounterexample> cx = find_contraction_counterexample(super_minimal);
    Json rec;
    rec["record"] = "search";
    rec["search"] = "order-4-contraction-leaves-super-minimality";
    rec["found"] = cx.has_value();
    if (cx) {
        rec["graph6"] = to_graph6(cx->graph);
        rec["edge"] = {cx->edge.u, cx->edge.v};
        rec["subgraph_vertices"] = cx->witness.vertices;
    }
    r.records.push_back(std::move(rec));

    // Bipartite witness searches. Y-neighborhood multiplicities and |Y| are
    // capped; more Y-vertices only add candidate subsets.
    struct BipartiteJob {
        const char* name;
        bool semi_cubic;
        int slack;  ///< |Y| >= 2|X| - slack
        bool with_internal;
        bool proper;
    };
    const BipartiteJob jobs[] = {{"semi-cubic-k32-or-internally-3-connected", true, 4, true, false},
                                 {"neighborhood-3-connected", false, 3, false, false},
                                 {"proper-neighborhood-3-connected", false, 2, false, true}};
    for (const BipartiteJob& job : jobs) {
        long instances = 0, k32 = 0, witnessed = 0, failures = 0;
        for (int x = 3; x <= 5; ++x) {
            const int lo = std::max(0, 2 * x - job.slack);
            const int hi = lo + (x <= 4 ? 2 : 1);
            const int mult = x <= 4 ? 3 : 2;
            for (const BipartiteInstance& inst : bipartite_instances(x, job.semi_cubic, lo, hi, mult)) {
                ++instances;
                if (job.semi_cubic && find_k32(inst)) {
                    ++k32;
                    continue;
                }
                if (find_neighborhood_witness(inst, job.with_internal, job.proper)) {
                    ++witnessed;
                    continue;
                }
                ++failures;
                Json y = Json::array();
                for (const auto& nb : inst.y) y.push_back(nb);
                add_violation(r, job.name, to_graph6(inst.graph()), Json{{"x", inst.x}, {"y", std::move(y)}});
            }
        }
        Json b;
        b["record"] = "lemma";
        b["lemma"] = job.name;
        b["instances"] = instances;
        if (job.semi_cubic) b["k32"] = k32;
        b["witnessed"] = witnessed;
        b["violations"] = failures;
        r.records.push_back(std::move(b));
    }
    finish(r);
    return r;
}

std::optional<ContractionCounterexample> find_contraction_counterexample(const std::vector<Graph>& super_minimal) {
    for (const Graph& g : super_minimal) {
        for (const Edge& e : g.edges()) {
            if (edge_order(g, e) < 4) continue;
            Contraction c = contract_edge(g, e);
            Verdict<SubgraphWitness> v = is_super_minimally_k_connected(c.graph, 3);
            if (!v.holds && v.witness) return ContractionCounterexample{g, e, *v.witness};
        }
    }
    return std::nullopt;
}

JobReport check_operations(const ClassifiedPopulation& pop, int small_order) {
    if (pop.k != 3) throw GraphError("operation checks run at k = 3");
    JobReport r = start("operations", pop);
    struct Counter {
        std::string name;
        long cases = 0;
        long violations = 0;
    };
    Counter bridging{"bridging-keeps-3-connectivity"}, kriesell{"non-contractible-edge-enhanced-deletion"},
        cleaving{"cleaving-keeps-super-minimality"}, counts{"cleave-count-identities"}, wheels{"wheel-bridging"};
    std::array<long, 3> by_type{};
    auto guarded = [&](Counter& c, const std::string& graph6, auto&& check) {
        ++c.cases;
        bool ok = false;
        std::string error;
        try {
            ok = check();
        } catch (const InvariantViolation& e) {
            error = e.what();
        }
        if (!ok) {
            ++c.violations;
            add_violation(r, c.name, graph6, error.empty() ? Json::object() : Json{{"error", error}});
        }
    };
    for (const auto& [n, graphs] : pop.by_order) {
        report_errors(r, graphs);
        for (const ClassifiedGraph& cg : graphs) {
            const Graph& g = cg.graph;
            const ClassLabel& l = cg.classification.label;
            if (!l.k_connected) continue;
            const std::vector<Edge>& es = g.edges();
            if (n <= small_order) {
                for (const Edge& ab : es) {
                    for (Vertex x = 0; x < g.order(); ++x) {
                        if (ab.has(x)) continue;
                        guarded(bridging, cg.graph6, [&] { return is_k_connected(bridge_vertex_edge(g, x, ab), 3); });
                    }
                }
                for (std::size_t i = 0; i < es.size(); ++i) {
                    for (std::size_t j = i + 1; j < es.size(); ++j) {
                        guarded(bridging, cg.graph6, [&] { return is_k_connected(bridge_edge_edge(g, es[i], es[j]), 3); });
                    }
                }
                if (n > 4) {
                    for (const Edge& e : es) {
                        if (is_3_contractible(g, e)) continue;
                        guarded(kriesell, cg.graph6, [&] { return is_k_connected(enhanced_delete(g, e).graph, 3); });
                    }
                }
            }
            if (!l.super_minimal) continue;
            for (const Edge& ab : es) {
                for_each_compatible_set(g, ab, [&](const CompatibleSet& s) {
                    ++by_type[static_cast<std::size_t>(s.type)];
                    std::optional<Cleaved> parts;
                    guarded(cleaving, cg.graph6, [&] {
                        parts = cleave(g, s);
                        return is_super_minimally_k_connected(parts->a, 3).holds &&
                               is_super_minimally_k_connected(parts->b, 3).holds;
                    });
                    if (parts) {
                        const int t = static_cast<int>(s.type);
                        guarded(counts, cg.graph6, [&] {
                            return g.size() == parts->a.size() + parts->b.size() - 3 - t &&
                                   g.order() + 2 + t == parts->a.order() + parts->b.order();
                        });
                    }
                    return false;
                });
            }
        }
    }
    for (int spokes = 3; spokes <= 6; ++spokes) {
        const Graph w = wheel_graph(spokes);
        for (const Edge& ab : w.edges()) {
            for (Vertex x = 0; x <= spokes; ++x) {
                if (ab.has(x)) continue;
                guarded(wheels, to_graph6(w), [&] {
                    const Graph b = bridge_vertex_edge(w, x, ab);
                    const bool hub_to_rim = w.degree(x) == spokes;
                    const bool sm = is_super_minimally_k_connected(b, 3).holds;
                    return sm == hub_to_rim && (!sm || isomorphic(b, wheel_graph(spokes + 1)));
                });
            }
        }
    }
    for (const Counter* c : {&bridging, &wheels, &kriesell, &cleaving, &counts}) {
        Json rec;
        rec["record"] = "operation";
        rec["claim"] = c->name;
        rec["cases"] = c->cases;
        rec["violations"] = c->violations;
        if (c == &cleaving) rec["compatible_sets_by_type"] = by_type;
        r.records.push_back(std::move(rec));
    }
    finish(r);
    return r;
}

JobReport conjecture_scan(const ClassifiedPopulation& pop) {
    const int k = pop.k;
    if (k < 2) throw GraphError("conjecture scan needs k >= 2");
    JobReport r = start("conjecture", pop);
    for (const auto& [n, graphs] : pop.by_order) {
        report_errors(r, graphs);
        for (GraphClass c : {GraphClass::Minimal, GraphClass::Uniform, GraphClass::SuperMinimal}) {
            long members = 0;
            int min_vk = -1;
            for (const ClassifiedGraph& g : graphs) {
                if (!g.error.empty() || !in_class(g.classification.label, c)) continue;
                ++members;
                min_vk = min_vk < 0 ? g.degree_k_vertices : std::min(min_vk, g.degree_k_vertices);
            }
            Json rec;
            rec["record"] = "ratio";
            rec["n"] = n;
            rec["class"] = to_string(c);
            rec["members"] = members;
            if (members > 0) {
                rec["min_v_k"] = min_vk;
                rec["min_ratio"] = fraction(min_vk, n);
                rec["min_ratio_value"] = static_cast<double>(min_vk) / n;
                const DegreeBound b = *degree_bound(c, k, n);
                rec["bound_ratio"] = fraction(b.num, b.den * n);
                if (!b.satisfied_by(min_vk)) {
                    add_violation(r, "min v_k / n >= " + fraction(b.num, b.den * n), "",
                                  Json{{"n", n}, {"class", to_string(c)}, {"min_v_k", min_vk}});
                }
            }
            r.records.push_back(std::move(rec));
        }
    }
    finish(r);
    return r;
}

}  // namespace kconn
