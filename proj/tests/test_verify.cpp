#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "limpack/graph.hpp"
#include "limpack/harness.hpp"
#include "limpack/verify.hpp"
#include "oracles.hpp"

using namespace limpack;

namespace {

VertexSet mask_to_set(int n, unsigned mask) {
    VertexSet b(n);
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) b.set(v);
    return b;
}

} // namespace

TEST_CASE("k-limited packing predicate") {
    Graph p4 = path_graph(4);
    CHECK(is_k_limited_packing(p4, make_vertex_set(p4, {0, 1, 3}), 2).ok);
    CHECK(is_k_limited_packing(p4, make_vertex_set(p4, {}), 1).ok);

    // K4 with all four vertices: every closed neighborhood holds all 4 > 2
    Graph k4 = complete_graph(4);
    CheckResult r = is_k_limited_packing(k4, make_vertex_set(k4, {0, 1, 2, 3}), 2);
    REQUIRE(!r.ok);
    CHECK(r.violation->vertex == 0);
    CHECK(r.violation->observed == 4);
    CHECK(r.violation->bound == 2);
    CHECK(!r.violation->detail.empty());
}

TEST_CASE("k-total limited packing predicate") {
    Graph c5 = cycle_graph(5);
    CHECK(is_k_total_limited_packing(c5, make_vertex_set(c5, {0, 1, 2, 3, 4}), 2).ok);

    Graph star = star_graph(4);
    CheckResult r = is_k_total_limited_packing(star, make_vertex_set(star, {1, 2, 3}), 2);
    REQUIRE(!r.ok);
    CHECK(r.violation->vertex == 0);  // center sees all three leaves
    CHECK(r.violation->observed == 3);
}

TEST_CASE("k-tuple domination predicate") {
    Graph c4 = cycle_graph(4);
    CHECK(is_k_tuple_dominating(c4, make_vertex_set(c4, {0, 1, 2}), 2).ok);

    // {0,1} fails first at vertex 2: N[2] = {1,2,3} meets it only in 1
    CheckResult r = is_k_tuple_dominating(c4, make_vertex_set(c4, {0, 1}), 2);
    REQUIRE(!r.ok);
    CHECK(r.violation->vertex == 2);
    CHECK(r.violation->observed == 1);
    CHECK(r.violation->bound == 2);

    // undefined below the degree floor: delta(C4) = 2 < k - 1 for k = 4
    CHECK_THROWS_AS(is_k_tuple_dominating(c4, make_vertex_set(c4, {0, 1, 2, 3}), 4),
                    std::invalid_argument);
}

TEST_CASE("argument validation") {
    Graph p3 = path_graph(3);
    VertexSet wrong(4);
    CHECK_THROWS_AS(is_k_limited_packing(p3, wrong, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_k_limited_packing(p3, make_vertex_set(p3, {0}), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_k_total_limited_packing(p3, wrong, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_k_tuple_dominating(p3, make_vertex_set(p3, {0}), -1),
                    std::invalid_argument);
    VertexPartition p = VertexPartition::from_classes(3, {{0, 1, 2}});
    CHECK_THROWS_AS(is_klp_partition(path_graph(4), p, 2), std::invalid_argument);
}

TEST_CASE("packing route equals limited-packing route at k=1") {
    // the pairwise-disjointness predicates and the counting predicates are
    // written independently; they must agree on every subset
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : enumerate_labeled_graphs(n)) {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                VertexSet b = mask_to_set(n, mask);
                CHECK(is_packing(g, b).ok == is_k_limited_packing(g, b, 1).ok);
                CHECK(is_open_packing(g, b).ok == is_k_total_limited_packing(g, b, 1).ok);
            }
        }
    }
}

TEST_CASE("packing spot cases") {
    Graph p4 = path_graph(4);
    CHECK(is_packing(p4, make_vertex_set(p4, {0, 3})).ok);
    CHECK(!is_packing(p4, make_vertex_set(p4, {0, 2})).ok);  // N[0] and N[2] share 1
    CHECK(is_open_packing(p4, make_vertex_set(p4, {0, 1})).ok);
    CHECK(!is_open_packing(cycle_graph(4), make_vertex_set(cycle_graph(4), {0, 2})).ok);
}

TEST_CASE("partition predicates agree with per-class set predicates") {
    Graph star = star_graph(5);
    VertexPartition good = VertexPartition::from_classes(5, {{1, 2}, {3, 4}, {0}});
    CHECK(is_klp_partition(star, good, 2).ok);

    VertexPartition bad = VertexPartition::from_classes(5, {{1, 2, 3}, {4, 0}});
    CheckResult r = is_klp_partition(star, bad, 2);
    REQUIRE(!r.ok);
    CHECK(r.violation->vertex == 0);  // center sees three of class 0
    CHECK(r.violation->observed == 3);

    Graph k8 = complete_graph(8);
    VertexPartition pairs =
        VertexPartition::from_classes(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    CHECK(is_ktd_partition(k8, pairs, 2).ok);
    VertexPartition lopsided =
        VertexPartition::from_classes(8, {{0}, {1, 2, 3, 4, 5, 6, 7}});
    CHECK(!is_ktd_partition(k8, lopsided, 2).ok);  // vertex 0 meets class 0 once only
}

TEST_CASE("partition predicates match looping the set predicate over classes") {
    for (const Graph& g : enumerate_labeled_graphs(4)) {
        // a couple of fixed shapes exercised on every 4-vertex graph
        for (const auto& classes : {std::vector<std::vector<int>>{{0, 1}, {2, 3}},
                                    std::vector<std::vector<int>>{{0, 3}, {1}, {2}},
                                    std::vector<std::vector<int>>{{0, 1, 2, 3}}}) {
            VertexPartition p = VertexPartition::from_classes(4, classes);
            bool want = true;
            for (const Bitset& cls : p.class_sets())
                want = want && is_k_limited_packing(g, cls, 2).ok;
            CHECK(is_klp_partition(g, p, 2).ok == want);
        }
    }
}

TEST_CASE("two-distance coloring predicate") {
    Graph p4 = path_graph(4);
    VertexPartition ok3 = VertexPartition::from_classes(4, {{0, 3}, {1}, {2}});
    CHECK(is_2distance_coloring(p4, ok3).ok);

    VertexPartition clash = VertexPartition::from_classes(4, {{0, 2}, {1}, {3}});
    CheckResult r = is_2distance_coloring(p4, clash);
    REQUIRE(!r.ok);  // 0 and 2 are at distance 2

    // equivalently: every class is a packing
    for (const Graph& g : enumerate_labeled_graphs(4)) {
        for (const auto& classes : {std::vector<std::vector<int>>{{0, 1}, {2, 3}},
                                    std::vector<std::vector<int>>{{0, 2}, {1, 3}}}) {
            VertexPartition p = VertexPartition::from_classes(4, classes);
            bool want = true;
            for (const Bitset& cls : p.class_sets()) want = want && is_packing(g, cls).ok;
            CHECK(is_2distance_coloring(g, p).ok == want);
        }
    }
}
