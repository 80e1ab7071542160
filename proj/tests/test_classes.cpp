#include <doctest.h>

#include "kconn/canonical.hpp"
#include "kconn/classes.hpp"
#include "kconn/oracle.hpp"
#include "support.hpp"

using namespace kconn;

namespace {

ClassLabel label(int k, bool conn, bool minimal, bool critical, bool uniform, bool sm) {
    return ClassLabel{k, conn, minimal, critical, uniform, sm};
}

}  // namespace

TEST_CASE("minimality") {
    CHECK(is_minimally_k_connected(test::complete_bipartite(3, 4), 3).holds);
    auto k5 = is_minimally_k_connected(test::complete(5), 3);
    CHECK_FALSE(k5.holds);
    REQUIRE(k5.witness);
    CHECK(is_k_connected(delete_edge(test::complete(5), *k5.witness), 3));
    for (int n = 3; n <= 5; ++n) CHECK(is_minimally_k_connected(test::wheel(n), 3).holds);
    auto c5 = is_minimally_k_connected(test::cycle(5), 3);
    CHECK_FALSE(c5.k_connected);
    CHECK(c5.cut);
}

TEST_CASE("criticality") {
    CHECK(is_critically_k_connected(test::dimensional_wheel({3, 3, 3, 3}), 3).holds);
    Graph k34 = test::complete_bipartite(3, 4);
    auto v = is_critically_k_connected(k34, 3);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(k34.degree(*v.witness) == 3);
    Graph rest = delete_vertex(k34, *v.witness).graph;
    CHECK(isomorphic(rest, test::complete_bipartite(3, 3)));
    CHECK(is_critically_k_connected(test::complete(4), 3).holds);
}

TEST_CASE("uniformity") {
    CHECK(is_uniformly_k_connected(test::complete_bipartite(3, 3), 3).holds);
    Graph a4 = test::alternating_double_wheel(4);
    auto a = is_uniformly_k_connected(a4, 3);
    CHECK_FALSE(a.holds);
    REQUIRE(a.witness);
    CHECK(a.witness->count == 4);
    CHECK(validate_path_family(a4, a.witness->paths, false).empty());
    CHECK(local_connectivity(a4, 8, 9).count == 4);
    for (int n = 3; n <= 5; ++n) CHECK(is_uniformly_k_connected(test::wheel(n), 3).holds);
}

TEST_CASE("proper k-connected induced subgraphs") {
    Graph w4d = test::dimensional_wheel({3, 3, 3, 3});
    auto s = contains_k_connected_induced(w4d, 3, true);
    REQUIRE(s);
    Graph inner = induced_subgraph(w4d, *s).graph;
    CHECK(isomorphic(inner, test::dimensional_wheel({3, 3, 3})));
    CHECK_FALSE(contains_k_connected_induced(test::alternating_double_wheel(4), 3, true));
    CHECK_FALSE(contains_k_connected_induced(test::cycle(6), 3, true));
    CHECK_FALSE(contains_k_connected_induced(test::cycle(6), 3, false));
    auto whole = contains_k_connected_induced(test::complete(5), 3, false);
    REQUIRE(whole);
    CHECK(whole->size() == 5);
    auto part = contains_k_connected_induced(test::complete(5), 3, true);
    REQUIRE(part);
    CHECK(part->size() == 4);
}

TEST_CASE("super-minimality") {
    CHECK(is_super_minimally_k_connected(test::q_graph(5), 4).holds);
    Graph k34 = test::complete_bipartite(3, 4);
    auto v = is_super_minimally_k_connected(k34, 3);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    Graph w = induced_subgraph(k34, v.witness->vertices).graph;
    CHECK(w.size() == static_cast<int>(v.witness->edges.size()));
    CHECK(isomorphic(w, test::complete_bipartite(3, 3)));
    for (int n = 3; n <= 10; ++n) CHECK(is_super_minimally_k_connected(test::cycle(n), 2).holds);
}

TEST_CASE("definitional super-minimality oracle") {
    CHECK(brute_force_super_minimal_oracle(test::complete(4), 3));
    CHECK_FALSE(brute_force_super_minimal_oracle(test::complete(5), 3));
    CHECK(brute_force_super_minimal_oracle(test::wheel(5), 3));
    CHECK_FALSE(brute_force_super_minimal_oracle(test::complete_bipartite(3, 4), 3));
    CHECK_THROWS_AS(brute_force_super_minimal_oracle(test::cycle(9), 2), GraphError);
}

TEST_CASE("super-minimality agrees with the definitional oracle on all graphs up to 7 vertices") {
    int positives = 0;
    for (const Graph& g : test::atlas()) {
        for (int k = 2; k <= 3; ++k) {
            bool fast = is_super_minimally_k_connected(g, k).holds;
            REQUIRE(fast == brute_force_super_minimal_oracle(g, k));
            positives += fast ? 1 : 0;
        }
    }
    CHECK(positives > 0);
}

TEST_CASE("classification of the named graphs") {
    CHECK(classify(test::complete(5), 3).label == label(3, true, false, false, false, false));
    CHECK(classify(test::complete_bipartite(3, 4), 3).label == label(3, true, true, false, false, false));
    CHECK(classify(test::dimensional_wheel({3, 3, 3}, true), 3).label == label(3, true, false, true, false, false));
    Classification w = classify(test::dimensional_wheel({3, 3, 3, 3}), 3);
    CHECK(w.label == label(3, true, true, true, false, false));
    REQUIRE(w.certificate.not_super_minimal);
    CHECK(isomorphic(induced_subgraph(test::dimensional_wheel({3, 3, 3, 3}), w.certificate.not_super_minimal->vertices).graph,
                     test::dimensional_wheel({3, 3, 3})));
    CHECK(classify(test::alternating_double_wheel(4), 3).label == label(3, true, true, true, false, true));
    CHECK(classify(test::complete_bipartite(3, 3), 3).label == label(3, true, true, true, true, true));
    CHECK(classify(test::q_graph(5), 4).label == label(4, true, true, true, false, true));
    CHECK(classify(test::wheel(4), 3).label == label(3, true, true, true, true, true));
    CHECK(classify(test::complete(2), 1).label == label(1, true, true, true, true, true));
}

TEST_CASE("certificates re-validate on every small graph") {
    for (const Graph& g : test::atlas()) {
        for (int k = 1; k <= 4; ++k) {
            Classification c = classify(g, k);
            INFO(to_graph6(g), " k=", k);
            REQUIRE(validate_certificate(g, c) == "");
        }
    }
}

TEST_CASE("certificate validation catches forged witnesses") {
    Graph k5 = test::complete(5);
    Classification c = classify(k5, 3);
    REQUIRE(validate_certificate(k5, c).empty());
    Classification forged = c;
    forged.label.minimal = true;
    CHECK_FALSE(validate_certificate(k5, forged).empty());
    Graph k34 = test::complete_bipartite(3, 4);
    Classification d = classify(k34, 3);
    d.certificate.not_super_minimal->vertices = {0, 1, 2, 3};
    d.certificate.not_super_minimal->edges = {Edge(0, 3), Edge(1, 3), Edge(2, 3)};
    CHECK_FALSE(validate_certificate(k34, d).empty());
}

TEST_CASE("minimality by deletion matches the three-path count for 3-connected graphs") {
    for (const Graph& g : test::atlas()) {
        if (!is_k_connected(g, 3)) continue;
        bool by_paths = true;
        for (const Edge& e : g.edges()) by_paths = by_paths && local_connectivity(g, e.u, e.v).count == 3;
        REQUIRE(is_minimally_k_connected(g, 3).holds == by_paths);
    }
}
