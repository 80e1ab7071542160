#include <doctest.h>

#include "kconn/canonical.hpp"
#include "kconn/classes.hpp"
#include "kconn/generators.hpp"
#include "support.hpp"

using namespace kconn;

namespace {

Graph gen(std::string_view family, std::vector<int> params) { return generate(family, params); }

}  // namespace

TEST_CASE("families match the hand-built graphs") {
    for (int n = 3; n <= 9; ++n) {
        CHECK(gen("cycle", {n}) == test::cycle(n));
        CHECK(gen("wheel", {n}) == test::wheel(n));
        CHECK(gen("complete", {n}) == test::complete(n));
    }
    CHECK(gen("complete_bipartite", {3, 4}) == test::complete_bipartite(3, 4));
    for (int n = 2; n <= 6; ++n) CHECK(gen("alt_double_wheel", {n}) == test::alternating_double_wheel(n));
    for (int n = 4; n <= 8; ++n) {
        CHECK(gen("kn_minus_cn", {n}) == test::complete_minus_cycle(n));
        CHECK(gen("q", {n}) == test::q_graph(n));
    }
    CHECK(gen("dim_wheel", {3, 3, 3, 3}) == test::dimensional_wheel({3, 3, 3, 3}));
    CHECK(gen("dim_wheel", {2, 3, 4}) == test::dimensional_wheel({2, 3, 4}));
    CHECK(gen("aug_dim_wheel", {3, 3, 3}) == test::dimensional_wheel({3, 3, 3}, true));
}

TEST_CASE("named small members") {
    CHECK(gen("wheel", {3}) == test::complete(4));
    for (int n = 3; n <= 10; ++n) {
        Graph w = gen("wheel", {n});
        CHECK(w.order() == n + 1);
        CHECK(w.size() == 2 * w.order() - 2);
    }
    CHECK(isomorphic(gen("kn_minus_cn", {5}), test::cycle(5)));
    Graph a4 = gen("alt_double_wheel", {4});
    CHECK(a4.order() == 10);
    CHECK(a4.degree(8) == 4);
    CHECK(a4.degree(9) == 4);
    CHECK_FALSE(a4.adjacent(8, 9));
    Graph q5 = gen("q", {5});
    CHECK(q5.order() == 7);
    CHECK_FALSE(q5.adjacent(5, 6));
    CHECK(q5.degree(5) == 5);
    CHECK(gen("complete", {1}).order() == 1);
    CHECK(gen("kn_minus_pn", {2}).size() == 0);
    CHECK(gen("kn_minus_pn", {4}).size() == 3);
    // Two paths make a cycle; the apex then sees every vertex.
    CHECK(isomorphic(gen("dim_wheel", {3, 4}), test::wheel(7)));
    // Two length-2 paths and a chord between their ends: K4 minus an edge.
    CHECK(isomorphic(gen("theta", {1, 2, 2}), delete_edge(test::complete(4), Edge(0, 1))));
}

TEST_CASE("theta counts") {
    std::vector<std::vector<int>> cases = {{1, 2}, {2, 2}, {1, 3, 3}, {3, 3, 3}, {2, 4, 5, 1}, {6, 2, 2, 2, 2}};
    for (const auto& l : cases) {
        Graph t = gen("theta", l);
        int sum = 0;
        for (int x : l) sum += x;
        CHECK(t.order() == sum - static_cast<int>(l.size()) + 2);
        CHECK(t.size() == sum);
        const Vertex s = t.order() - 2, e = t.order() - 1;
        CHECK(t.degree(s) == static_cast<int>(l.size()));
        CHECK(t.degree(e) == static_cast<int>(l.size()));
        CHECK(local_connectivity(t, s, e).count == static_cast<int>(l.size()));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gen("cycle", {2}), GraphError);
    CHECK_THROWS_AS(gen("complete", {0}), GraphError);
    CHECK_THROWS_AS(gen("complete_bipartite", {0, 3}), GraphError);
    CHECK_THROWS_AS(gen("complete_bipartite", {3}), GraphError);
    CHECK_THROWS_AS(gen("wheel", {2}), GraphError);
    CHECK_THROWS_AS(gen("theta", {1, 1, 3}), GraphError);
    CHECK_THROWS_AS(gen("theta", {3}), GraphError);
    CHECK_THROWS_AS(gen("theta", {0, 3}), GraphError);
    CHECK_THROWS_AS(gen("alt_double_wheel", {1}), GraphError);
    CHECK_THROWS_AS(gen("kn_minus_cn", {3}), GraphError);
    CHECK_THROWS_AS(gen("kn_minus_pn", {1}), GraphError);
    CHECK_THROWS_AS(gen("q", {3}), GraphError);
    CHECK_THROWS_AS(gen("petersen", {}), GraphError);
    CHECK_THROWS_AS(gen("wheel", {4, 5}), GraphError);
    for (const std::string& name : family_names()) CHECK_THROWS_AS(generate(name, std::vector<int>{}), GraphError);
}

TEST_CASE("complete minus a Hamiltonian cycle has connectivity n - 3") {
    for (int n = 5; n <= 10; ++n) {
        Graph g = gen("kn_minus_cn", {n});
        for (Vertex v = 0; v < n; ++v) CHECK(g.degree(v) == n - 3);
        CHECK(is_k_connected(g, n - 3));
        CHECK_FALSE(is_k_connected(g, n - 2));
        CHECK(vertex_connectivity(g).kappa == n - 3);
    }
}

TEST_CASE("families land in their classes") {
    for (int n = 4; n <= 6; ++n) {
        Classification c = classify(gen("alt_double_wheel", {n}), 3);
        CHECK(c.label.super_minimal);
        CHECK_FALSE(c.label.uniform);
    }
    Classification q = classify(gen("q", {5}), 4);
    CHECK(q.label.super_minimal);
    CHECK_FALSE(q.label.uniform);

    std::vector<int> four = {3, 3, 3, 3}, three = {3, 3, 3};
    Classification w = classify(gen("dim_wheel", four), 3);
    CHECK(w.label.minimal);
    CHECK(w.label.critical);
    CHECK_FALSE(w.label.super_minimal);
    REQUIRE(w.certificate.not_super_minimal);
    CHECK(isomorphic(induced_subgraph(gen("dim_wheel", four), w.certificate.not_super_minimal->vertices).graph,
                     gen("dim_wheel", three)));

    Classification aug = classify(gen("aug_dim_wheel", three), 3);
    CHECK(aug.label.critical);
    CHECK_FALSE(aug.label.minimal);
}
