#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "limpack/graph.hpp"
#include "limpack/harness.hpp"
#include "limpack/solve.hpp"
#include "limpack/tree.hpp"
#include "limpack/verify.hpp"

using namespace limpack;

TEST_CASE("is_tree") {
    CHECK(is_tree(complete_graph(1)));
    CHECK(is_tree(path_graph(7)));
    CHECK(is_tree(star_graph(6)));
    CHECK(!is_tree(cycle_graph(4)));
    CHECK(!is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));  // forest, not tree
    CHECK(!is_tree(complete_graph(3)));
}

TEST_CASE("root_tree picks the lowest max-degree vertex and fixed child order") {
    // path 0-1-2-3-4: max degree 2, first such vertex is 1
    RootedTree rt = root_tree(path_graph(5));
    CHECK(rt.root == 1);
    CHECK(rt.parent[rt.root] == -1);
    CHECK(rt.children[1] == std::vector<int>{0, 2});
    CHECK(rt.bfs_order.front() == 1);
    CHECK(rt.bfs_order.size() == 5);

    Graph star = star_graph(4);
    CHECK(root_tree(star).root == 0);

    CHECK_THROWS_AS(root_tree(cycle_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(root_tree(Graph::from_edges(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("class-count formula spot values") {
    CHECK(chi_x2_tree_value(star_graph(5)) == 3);   // max degree 4
    CHECK(chi_x2_tree_value(path_graph(4)) == 2);   // max degree 2
    CHECK(chi_x2_tree_value(complete_graph(2)) == 1);
    CHECK(chi_x2_tree_value(complete_graph(1)) == 1);
}

TEST_CASE("formula equals the exact solver on every tree up to n=9") {
    for (int n = 1; n <= 9; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            InvariantResult exact = chi_xk(t, 2);
            REQUIRE(exact.exact());
            CHECK(chi_x2_tree_value(t) == exact.value);
        }
    }
}

TEST_CASE("constructed partition is valid and optimal on every tree up to n=11") {
    for (int n = 1; n <= 11; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            VertexPartition p = tree_2lp_partition(t);
            CHECK(p.classes == chi_x2_tree_value(t));
            CHECK(is_klp_partition(t, p, 2).ok);
        }
    }
}

TEST_CASE("constructed partition stays valid on large random trees") {
    for (int n : {40, 97, 200}) {
        for (std::uint64_t seed : {11u, 12u, 13u}) {
            Graph t = random_tree(n, seed);
            VertexPartition p = tree_2lp_partition(t);
            CHECK(p.classes == chi_x2_tree_value(t));
            CHECK(is_klp_partition(t, p, 2).ok);
        }
    }
}

TEST_CASE("labeling is deterministic") {
    Graph t = random_tree(60, 321);
    CHECK(tree_2lp_partition(t).class_of == tree_2lp_partition(t).class_of);
}

TEST_CASE("case tags cover the construction branches") {
    // even max degree: only Root and Case1 appear
    TreeLabeling even = tree_2lp_partition_tagged(path_graph(6));
    REQUIRE(even.case_tag.size() == 6);
    int roots = 0;
    for (std::size_t v = 0; v < even.case_tag.size(); ++v) {
        if (even.case_tag[v] == LabelCase::Root) ++roots;
        else CHECK(even.case_tag[v] == LabelCase::Case1);
    }
    CHECK(roots == 1);

    // odd max degree: some vertex lands in one of the two odd subcases
    TreeLabeling odd = tree_2lp_partition_tagged(star_graph(4));
    bool any_odd_case = false;
    for (LabelCase c : odd.case_tag)
        any_odd_case = any_odd_case || c == LabelCase::Subcase21 || c == LabelCase::Subcase22;
    CHECK(any_odd_case);
    CHECK(odd.partition.classes == 2);

    CHECK_THROWS_AS(tree_2lp_partition(cycle_graph(6)), std::invalid_argument);
}
