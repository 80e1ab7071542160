#include <doctest.h>

#include <set>
#include <sstream>

#include "kconn/canonical.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/enumeration.hpp"
#include "kconn/generators.hpp"
#include "support.hpp"

using namespace kconn;

namespace {

std::vector<std::string> keys(const std::vector<Graph>& gs) {
    std::vector<std::string> out;
    for (const Graph& g : gs) out.push_back(canonical_key(g));
    return out;
}

long count_field(const JobReport& r, const std::string& record, const std::string& field) {
    long total = 0;
    for (const Json& j : r.records) {
        if (j.value("record", "") == record && j.contains(field)) total += j[field].get<long>();
    }
    return total;
}

}  // namespace

TEST_CASE("connected graph counts") {
    const long expected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        std::vector<Graph> gs = enumerate_graphs(n);
        CHECK(static_cast<long>(gs.size()) == expected[n]);
        std::vector<std::string> ks = keys(gs);
        CHECK(std::set<std::string>(ks.begin(), ks.end()).size() == ks.size());
        for (const Graph& g : gs) CHECK(is_connected(g));
    }
}

TEST_CASE("minimum degree filter matches the atlas") {
    std::map<std::pair<int, int>, long> atlas_counts;
    for (const Graph& g : test::atlas()) {
        if (!is_connected(g)) continue;
        int delta = g.order();
        for (Vertex v = 0; v < g.order(); ++v) delta = std::min(delta, g.degree(v));
        for (int d = 0; d <= delta; ++d) ++atlas_counts[{g.order(), d}];
    }
    for (int n = 1; n <= 7; ++n) {
        for (int d = 1; d <= 4; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            EnumerationOptions o;
            o.min_degree = d;
            CHECK(static_cast<long>(enumerate_graphs(n, o).size()) == atlas_counts[{n, d}]);
        }
    }
    EnumerationOptions three;
    three.min_degree = 3;
    std::vector<Graph> four = enumerate_graphs(4, three);
    REQUIRE(four.size() == 1);
    CHECK(isomorphic(four[0], complete_graph(4)));
}

TEST_CASE("enumeration is independent of worker count") {
    EnumerationOptions one, many;
    one.min_degree = many.min_degree = 2;
    many.workers = 3;
    CHECK(keys(enumerate_graphs(7, one)) == keys(enumerate_graphs(7, many)));
    std::vector<Graph> gs = enumerate_graphs(6);
    std::vector<ClassifiedGraph> a = classify_graphs(gs, 2, 1), b = classify_graphs(gs, 2, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].graph6 == b[i].graph6);
        CHECK(a[i].classification.label == b[i].classification.label);
    }
}

TEST_CASE("streams keep malformed lines as errors") {
    std::istringstream in("C~\n\nnot a graph\nDl{\nA_\n");
    std::vector<StreamRecord> rs = enumerate_stream(in, 3);
    long ok = 0, bad = 0;
    for (const StreamRecord& r : rs) (r.ok() ? ok : bad) += 1;
    CHECK(ok == 2);
    CHECK(bad == 1);
    std::istringstream all("C~\nnot a graph\nDl{\nA_\n");
    ok = bad = 0;
    for (const StreamRecord& r : enumerate_stream(all, 0)) (r.ok() ? ok : bad) += 1;
    CHECK(ok == 3);
    CHECK(bad == 1);
}

TEST_CASE("streamed and enumerated populations agree") {
    const std::vector<Graph> atlas = test::atlas();
    for (int k : {2, 3}) {
        ClassifiedPopulation internal = build_population(k, {1, 7}, 1);
        ClassifiedPopulation streamed = build_population(k, {1, 7}, 2, &atlas);
        CHECK(streamed.source == "stream");
        JobReport a = verify_inclusions(internal), b = verify_inclusions(streamed);
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(n);
            std::multiset<std::string> ka, kb;
            for (const ClassifiedGraph& c : internal.by_order[n]) ka.insert(canonical_key(c.graph));
            for (const ClassifiedGraph& c : streamed.by_order[n]) kb.insert(canonical_key(c.graph));
            CHECK(ka == kb);
        }
        CHECK(a.violations == 0);
        CHECK(b.violations == 0);
        std::vector<Json> ta, tb;
        for (const Json& j : a.records) {
            if (j.value("record", "") == "tally") ta.push_back(j);
        }
        for (const Json& j : b.records) {
            if (j.value("record", "") == "tally") tb.push_back(j);
        }
        CHECK(ta == tb);
    }
}

TEST_CASE("low k populations") {
    ClassifiedPopulation two = build_population(2, {3, 7}, 1);
    for (const auto& [n, gs] : two.by_order) {
        for (const ClassifiedGraph& c : gs) {
            CHECK(c.classification.label.super_minimal == isomorphic(c.graph, cycle_graph(n)));
        }
    }
    ClassifiedPopulation one = build_population(1, {2, 6}, 1);
    for (const auto& [n, gs] : one.by_order) {
        for (const ClassifiedGraph& c : gs) CHECK(c.classification.label.super_minimal == (n == 2));
    }
    CHECK(verify_inclusions(two).violations == 0);
    CHECK(verify_inclusions(one).violations == 0);
}

TEST_CASE("degree and edge bounds on small orders") {
    ClassifiedPopulation pop = build_population(3, {4, 8}, 1);
    for (GraphClass c : {GraphClass::Minimal, GraphClass::Uniform, GraphClass::SuperMinimal}) {
        JobReport r = verify_degree_bound(pop, c);
        CHECK(r.violations == 0);
        CHECK(r.exit_status() == 0);
    }
    JobReport e = verify_edge_bound(pop, GraphClass::SuperMinimal);
    CHECK(e.violations == 0);
    for (const Json& j : e.records) {
        if (j.value("record", "") != "order" || !j.contains("equality")) continue;
        for (const Json& g6 : j["equality"]) {
            Graph g = from_graph6(g6.get<std::string>());
            CHECK(isomorphic(g, wheel_graph(g.order() - 1)));
        }
    }
    CHECK_THROWS_AS(verify_degree_bound(build_population(1, {3, 4}, 1), GraphClass::Minimal), GraphError);
    REQUIRE(degree_bound(GraphClass::SuperMinimal, 3, 9));
    CHECK(degree_bound(GraphClass::SuperMinimal, 3, 9)->ceiling() == 6);
    CHECK(degree_bound(GraphClass::Uniform, 3, 8)->ceiling() == 6);
}

TEST_CASE("extremal search finds the small wheels") {
    JobReport r = extremal_search(build_population(3, {4, 6}, 1));
    std::vector<std::string> found;
    for (const Json& j : r.records) {
        if (j.value("record", "") != "extremal") continue;
        for (const Json& g : j["graphs"]) found.push_back(g["graph6"].get<std::string>());
    }
    REQUIRE(found.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(isomorphic(from_graph6(found[i]), wheel_graph(static_cast<int>(i) + 3)));
    }
}

TEST_CASE("semi-cubic instance with cyclic neighborhoods") {
    BipartiteInstance inst;
    inst.x = 4;
    for (int j = 0; j < 4; ++j) inst.y.push_back({j, (j + 1) % 4, (j + 2) % 4});
    for (auto& nb : inst.y) std::sort(nb.begin(), nb.end());
    CHECK_FALSE(find_k32(inst));
    const Graph g = inst.graph();
    REQUIRE(is_k_connected(g, 3));
    for (int j = 0; j < 4; ++j) {
        CHECK(is_internally_3_connected(delete_vertex(g, inst.x + j).graph));
    }
    std::optional<std::vector<int>> w = find_neighborhood_witness(inst, true, false);
    REQUIRE(w);
    CHECK(w->size() >= 4);
}

TEST_CASE("neighborhood witness in complete bipartite graphs") {
    BipartiteInstance inst;
    inst.x = 3;
    inst.y = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    CHECK(find_k32(inst));
    std::optional<std::vector<int>> w = find_neighborhood_witness(inst, false, false);
    REQUIRE(w);
    CHECK(*w == std::vector<int>{0, 1, 2});
    CHECK_FALSE(find_neighborhood_witness(inst, false, true));
    BipartiteInstance sparse;
    sparse.x = 4;
    sparse.y = {{0, 1, 2}, {1, 2, 3}};
    CHECK_FALSE(find_neighborhood_witness(sparse, false, false));
}

TEST_CASE("bipartite instances are distinct up to relabeling X") {
    for (bool semi : {true, false}) {
        std::vector<BipartiteInstance> insts = bipartite_instances(4, semi, 4, 5, 2);
        CHECK(!insts.empty());
        std::set<std::vector<std::vector<int>>> seen;
        for (const BipartiteInstance& inst : insts) {
            CHECK((inst.y.size() == 4 || inst.y.size() == 5));
            std::map<std::vector<int>, int> mult;
            for (const auto& nb : inst.y) {
                if (semi) CHECK(nb.size() == 3);
                CHECK(nb.size() >= 3);
                CHECK(++mult[nb] <= 2);
            }
            std::vector<int> perm{0, 1, 2, 3};
            std::vector<std::vector<int>> best;
            do {
                std::vector<std::vector<int>> image;
                for (const auto& nb : inst.y) {
                    std::vector<int> mapped;
                    for (int u : nb) mapped.push_back(perm[static_cast<std::size_t>(u)]);
                    std::sort(mapped.begin(), mapped.end());
                    image.push_back(mapped);
                }
                std::sort(image.begin(), image.end());
                if (best.empty() || image < best) best = image;
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(seen.insert(best).second);
        }
    }
}

TEST_CASE("operations and lemmas on small populations") {
    ClassifiedPopulation pop = build_population(3, {4, 7}, 1);
    JobReport ops = check_operations(pop, 6);
    CHECK(ops.violations == 0);
    CHECK(count_field(ops, "operation", "cases") > 0);
    JobReport lem = check_structure_lemmas(pop);
    CHECK(lem.violations == 0);
    CHECK(conjecture_scan(pop).violations == 0);
}
