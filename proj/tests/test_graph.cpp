#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "kconn/canonical.hpp"
#include "kconn/graph.hpp"
#include "kconn/graph6.hpp"
#include "support.hpp"

using namespace kconn;

namespace {

// Straight transcription of the graph6 bit layout, for orders below 63.
Graph decode_small_graph6(const std::string& s) {
    int n = s[0] - 63;
    GraphBuilder b(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = s[1 + static_cast<std::size_t>(k / 6)] - 63;
            if (byte & (32 >> (k % 6))) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

}  // namespace

TEST_CASE("build_graph produces complete graphs, cycles and K33") {
    Graph k4 = test::complete(4);
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.size() == 5);
    CHECK(c5 == test::cycle(5));
    Graph k33 = test::complete_bipartite(3, 3);
    CHECK(k33.size() == 9);
    for (Vertex v = 0; v < 6; ++v) CHECK(k33.degree(v) == 3);
    k33.check_invariants();
}

TEST_CASE("build_graph collapses duplicates and rejects bad input") {
    Graph g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.size() == 2);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{-1, 1}}), GraphError);
}

TEST_CASE("mutate contracts, deletes and adds") {
    Graph w4 = test::wheel(4);
    Relabeled c = mutate(w4, ContractEdge{Edge(0, 1)});
    CHECK(c.graph.order() == 4);
    CHECK(test::isomorphic_by_permutation(c.graph, test::complete(4)));
    c.graph.check_invariants();

    Relabeled d = mutate(w4, DeleteVertex{4});
    CHECK(d.graph == test::cycle(4));
    CHECK(d.old_to_new[4] == -1);

    Graph removed = mutate(w4, DeleteEdge{Edge(1, 2)}).graph;
    CHECK(removed.size() == 7);
    CHECK(mutate(removed, AddEdge{Edge(1, 2)}).graph == w4);

    CHECK_THROWS_AS(mutate(w4, AddEdge{Edge(0, 1)}), GraphError);
    CHECK_THROWS_AS(mutate(w4, DeleteEdge{Edge(0, 2)}), GraphError);
    CHECK_THROWS_AS(mutate(w4, DeleteVertex{5}), GraphError);
    CHECK_THROWS_AS(mutate(w4, ContractEdge{Edge(0, 2)}), GraphError);
}

TEST_CASE("delete_vertex renumbers contiguously") {
    Graph g = test::path(4);
    Relabeled r = delete_vertex(g, 1);
    CHECK(r.graph.order() == 3);
    CHECK(r.graph.size() == 1);
    CHECK(r.old_to_new == std::vector<Vertex>{0, -1, 1, 2});
    CHECK(r.new_to_old == std::vector<Vertex>{0, 2, 3});
    CHECK(r.graph.adjacent(1, 2));
}

TEST_CASE("contraction output is always simple") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = test::random_graph(3 + trial % 8, 0.5, rng);
        for (const Edge& e : g.edges()) {
            Contraction c = contract_edge(g, e);
            c.graph.check_invariants();
            CHECK(c.graph.order() == g.order() - 1);
            int common = 0;
            for (Vertex w : g.neighbors(e.u)) common += g.adjacent(w, e.v) ? 1 : 0;
            CHECK(c.graph.size() == g.size() - 1 - common);
            CHECK(c.simple == (common == 0));
        }
    }
}

TEST_CASE("induced subgraphs") {
    Graph k3 = induced_subgraph(test::complete(4), {0, 2, 3}).graph;
    CHECK(k3 == test::complete(3));
    Graph side = induced_subgraph(test::complete_bipartite(3, 3), {0, 1, 2}).graph;
    CHECK(side.order() == 3);
    CHECK(side.size() == 0);

    // A4: rim v1..v8 = 0..7, x = 8 adjacent to v1, v3, v5, v7.
    Graph a4 = test::alternating_double_wheel(4);
    Relabeled star = induced_subgraph(a4, {0, 2, 4, 6, 8});
    CHECK(star.graph.size() == 4);
    CHECK(star.graph.degree(4) == 4);
    CHECK(star.new_to_old[4] == 8);
    CHECK_THROWS_AS(induced_subgraph(a4, {0, 10}), GraphError);
}

TEST_CASE("open and closed neighborhoods") {
    Graph w5 = test::wheel(5);
    CHECK(neighborhoods(w5, {5}, false) == VertexSet{0, 1, 2, 3, 4});
    CHECK(neighborhoods(test::cycle(5), {0}, false) == VertexSet{1, 4});
    Graph a4 = test::alternating_double_wheel(4);
    CHECK(neighborhoods(a4, {8, 9}, true).size() == 10);
    CHECK(open_neighborhood(a4, {8, 9}).size() == 8);
    CHECK(closed_neighborhood(test::cycle(5), {0, 1}) == VertexSet{0, 1, 2, 4});
    CHECK_THROWS_AS(neighborhoods(w5, {6}, true), GraphError);
}

TEST_CASE("graph6 encodes K4 as C~") {
    CHECK(to_graph6(test::complete(4)) == "C~");
    CHECK(decode_small_graph6("C~") == test::complete(4));
    CHECK(from_graph6("C~") == test::complete(4));
    CHECK(from_graph6("C~\n") == test::complete(4));
    CHECK(from_graph6(">>graph6<<C~") == test::complete(4));
    Graph c5 = test::cycle(5);
    CHECK(from_graph6(to_graph6(c5)) == c5);
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(from_graph6("?").order() == 0);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), Graph6Error);
    CHECK_THROWS_AS(from_graph6("C"), Graph6Error);
    CHECK_THROWS_AS(from_graph6("C~~"), Graph6Error);
    CHECK_THROWS_AS(from_graph6("C\x01"), Graph6Error);
    CHECK_THROWS_AS(from_graph6("~?"), Graph6Error);
    CHECK_THROWS_AS(from_graph6("~??B"), Graph6Error);  // 2 vertices in long form
    CHECK_THROWS_AS(from_graph6("A@"), Graph6Error);    // padding bit set
}

TEST_CASE("graph6 round trip on random graphs of every order up to 12") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; i < 1000; ++i) {
            Graph g = test::random_graph(n, density(rng), rng);
            std::string s = to_graph6(g);
            REQUIRE(from_graph6(s) == g);
            REQUIRE(decode_small_graph6(s) == g);
        }
    }
}

TEST_CASE("graph6 round trip above the one-byte length header") {
    std::mt19937_64 rng(3);
    for (int n : {62, 63, 64, 100, 300}) {
        Graph g = test::random_graph(n, 0.1, rng);
        std::string s = to_graph6(g);
        CHECK((n <= 62 ? s[0] != '~' : s[0] == '~'));
        CHECK(from_graph6(s) == g);
    }
}

TEST_CASE("graph6 stream reports bad lines and keeps going") {
    std::istringstream in("C~\nDQc\n\ngarbage\x01\nBw\n");
    std::vector<StreamRecord> recs = read_graph6_stream(in);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].ok());
    CHECK(recs[1].ok());
    CHECK_FALSE(recs[2].ok());
    CHECK(recs[2].line_number == 4);
    CHECK(recs[3].ok());
}

TEST_CASE("canonical key ignores labeling") {
    Graph a = test::cycle(5);
    Graph b = build_graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(test::complete_bipartite(3, 3)) != canonical_key(test::prism()));
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(test::complete_bipartite(3, 3), test::prism()));
    CHECK_THROWS_AS(canonical_key(test::cycle(13)), GraphError);
    CHECK_NOTHROW(canonical_key(test::cycle(13), 16));
}

TEST_CASE("canonical key survives random relabelings") {
    std::mt19937_64 rng(5);
    std::vector<Graph> graphs = {test::cycle(8),           test::wheel(6),
                                 test::complete_bipartite(3, 5), test::prism(),
                                 test::alternating_double_wheel(4), test::dimensional_wheel({3, 3, 3}),
                                 test::complete(7),        Graph(5)};
    for (int i = 0; i < 12; ++i) graphs.push_back(test::random_graph(4 + i % 9, 0.45, rng));
    for (const Graph& g : graphs) {
        std::string key = canonical_key(g, 16);
        for (int t = 0; t < 100; ++t) {
            REQUIRE(canonical_key(test::relabel(g, test::random_permutation(g.order(), rng)), 16) == key);
        }
    }
}

TEST_CASE("canonical keys count isomorphism classes on small orders") {
    const int expected[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        const unsigned long masks = 1UL << (n * (n - 1) / 2);
        std::map<std::string, Graph> classes;
        for (unsigned long m = 0; m < masks; ++m) {
            Graph g = test::from_mask(n, m);
            auto [it, inserted] = classes.emplace(canonical_key(g), g);
            // Same key must mean isomorphic.
            if (!inserted && n <= 5) REQUIRE(test::isomorphic_by_permutation(g, it->second));
        }
        CHECK(classes.size() == static_cast<std::size_t>(expected[n]));
        // Distinct keys must mean non-isomorphic.
        std::vector<Graph> reps;
        for (auto& [key, g] : classes) reps.push_back(g);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                REQUIRE_FALSE(test::isomorphic_by_permutation(reps[i], reps[j]));
    }
}

TEST_CASE("canonical form is isomorphic to its input") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        Graph g = test::random_graph(2 + i % 7, 0.5, rng);
        Graph c = canonical_form(g);
        CHECK(test::isomorphic_by_permutation(g, c));
        CHECK(canonical_form(c) == c);
    }
}

TEST_CASE("separation validator") {
    // Star with centre 0 and leaves 1, 2, 3; boundary {0, 2}.
    Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    Separation s{{0, 1, 2}, {Edge(0, 1)}, {0, 2, 3}, {Edge(0, 2), Edge(0, 3)}, {0, 2}};
    CHECK(validate_separation(star, s).empty());
    Separation overlap = s;
    overlap.a_edges.push_back(Edge(0, 2));
    CHECK_FALSE(validate_separation(star, overlap).empty());
    Separation small = s;
    small.a_vertices = {0, 2};
    small.a_edges = {};
    small.b_edges.push_back(Edge(0, 1));
    CHECK_FALSE(validate_separation(star, small).empty());
}
