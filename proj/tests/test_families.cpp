#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "limpack/families.hpp"
#include "limpack/graph.hpp"
#include "limpack/harness.hpp"
#include "limpack/solve.hpp"
#include "limpack/tree.hpp"
#include "limpack/verify.hpp"

using namespace limpack;

TEST_CASE("canonical block decompositions for small parameters") {
    CHECK(build_canonical_omega(2, 4, 0) == complete_graph(8));
    CHECK(build_canonical_omega(1, 2, 0) == complete_graph(2));
    CHECK(build_canonical_omega(2, 1, 1) == complete_graph(3));

    // (k,t,r) = (2,2,1): two triangles, every vertex of degree q = 4
    Graph g = build_canonical_omega(2, 2, 1);
    CHECK(g.order() == 6);
    DegreeStats ds = degree_stats(g);
    CHECK(ds.min_degree == 4);
    CHECK(ds.max_degree == 4);
}

TEST_CASE("canonical specs validate and their blocks witness the domatic value") {
    for (auto [k, t, r] : {std::tuple<int, int, int>{2, 4, 0},
                           {2, 2, 1},
                           {3, 2, 2},
                           {1, 3, 0},
                           {2, 3, 1}}) {
        OmegaSpec spec = canonical_omega_spec(k, t, r);
        OmegaValidation val = validate_omega(spec);
        REQUIRE_MESSAGE(val.ok, "k=" << k << " t=" << t << " r=" << r);
        CHECK(val.diagnostics.empty());
        CHECK(val.t == t);
        CHECK(val.r == r);
        CHECK(degree_stats(val.assembled).min_degree == t * k + r - 1);
        CHECK(is_ktd_partition(val.assembled, val.block_partition, k).ok);

        // the witnessed class count is the true optimum
        InvariantResult d = d_xk(val.assembled, k);
        REQUIRE(d.exact());
        CHECK(d.value == t);
    }
}

TEST_CASE("validate_omega rejects broken specs with diagnostics") {
    // wrong q: the degree accounting no longer lands on tk+r
    OmegaSpec wrong_q = canonical_omega_spec(2, 2, 1);
    wrong_q.target_q += 1;
    OmegaValidation v1 = validate_omega(wrong_q);
    CHECK(!v1.ok);
    CHECK(!v1.diagnostics.empty());

    // cross edges removed: blocks stop dominating each other
    OmegaSpec no_cross = canonical_omega_spec(2, 2, 1);
    no_cross.cross_edges.clear();
    OmegaValidation v2 = validate_omega(no_cross);
    CHECK(!v2.ok);
    CHECK(!v2.diagnostics.empty());

    // a block violating the internal degree floor k-1
    OmegaSpec thin_block = canonical_omega_spec(2, 2, 1);
    thin_block.blocks[0] = Graph::from_edges(3, {{0, 1}});  // vertex 2 isolated inside
    OmegaValidation v3 = validate_omega(thin_block);
    CHECK(!v3.ok);
    CHECK(!v3.diagnostics.empty());

    CHECK_THROWS_AS(canonical_omega_spec(2, 1, 2), std::invalid_argument);  // r > k-1
    CHECK_THROWS_AS(canonical_omega_spec(0, 1, 0), std::invalid_argument);
}

TEST_CASE("regular multipartite family: structure of the canonical build") {
    Graph g = build_lambda({3, 4});
    CHECK(g.order() == 12);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 5);  // 2r-1 regular

    for (int i = 0; i < 3; ++i) {
        // inside part i: a perfect matching on {4i..4i+3}
        for (int a = 0; a < 4; ++a) {
            int inside = 0;
            for (int b = 0; b < 4; ++b)
                if (a != b && g.adjacent(4 * i + a, 4 * i + b)) ++inside;
            CHECK(inside == 1);
        }
        // towards every other part: exactly two neighbors
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int a = 0; a < 4; ++a) {
                int across = 0;
                for (int b = 0; b < 4; ++b)
                    if (g.adjacent(4 * i + a, 4 * j + b)) ++across;
                CHECK(across == 2);
            }
        }
    }

    CHECK_THROWS_AS(build_lambda({1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(build_lambda({3, 3}), std::invalid_argument);  // odd part size
    CHECK_THROWS_AS(build_lambda({3, 0}), std::invalid_argument);
}

TEST_CASE("smallest member is the complete graph on 4 vertices") {
    CHECK(build_lambda({2, 2}) == complete_graph(4));
    CHECK(chi_xk(build_lambda({2, 2}), 2).value == 2);
}

TEST_CASE("randomized multipartite family keeps the structure") {
    LambdaSpec spec{3, 4};
    Graph a = build_lambda_random(spec, 7);
    CHECK(a == build_lambda_random(spec, 7));
    CHECK(a.order() == 12);
    for (int v = 0; v < 12; ++v) CHECK(a.degree(v) == 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int x = 0; x < 4; ++x) {
                int across = 0;
                for (int y = 0; y < 4; ++y)
                    if (a.adjacent(4 * i + x, 4 * j + y)) ++across;
                CHECK(across == 2);
            }
        }

    // the partition lower bound is attained by the parts, whatever the seed
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Graph g = build_lambda_random({2, 4}, seed);
        InvariantResult chi = chi_xk(g, 2);
        REQUIRE(chi.exact());
        CHECK(chi.value == 2);
    }
}

TEST_CASE("triple-common-neighbor membership") {
    CHECK(is_triple_common_neighbor_family(complete_graph(4)));
    CHECK(is_triple_common_neighbor_family(complete_graph(5)));
    CHECK(!is_triple_common_neighbor_family(cycle_graph(4)));
    CHECK(!is_triple_common_neighbor_family(star_graph(4)));
    CHECK(!is_triple_common_neighbor_family(complete_graph(3)));  // no fourth vertex
    CHECK_THROWS_AS(is_triple_common_neighbor_family(complete_graph(2)),
                    std::invalid_argument);
}

TEST_CASE("triple common neighbors characterize total value 2 exhaustively") {
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate_labeled_graphs(n))
            CHECK(is_triple_common_neighbor_family(g) == (l_kt(g, 2).value == 2));
}

TEST_CASE("packing-deficiency family membership and its guarantee") {
    CHECK(is_in_gamma(star_graph(5)));
    CHECK(is_in_gamma(complete_graph(4)));
    CHECK(is_in_gamma(path_graph(4)));
    CHECK(is_in_gamma(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}})));  // K3 + isolated
    CHECK(!is_in_gamma(cycle_graph(4)));
    CHECK(!is_in_gamma(cycle_graph(5)));

    // membership forces packing number n - max degree (one direction only)
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_labeled_graphs(n))
            if (is_in_gamma(g))
                CHECK(rho(g).value == n - degree_stats(g).max_degree);
}

TEST_CASE("complementary partition-sum instance") {
    SharpnessInstance inst = build_ng_cocktail(3);
    CHECK(inst.family == "ng_cocktail");
    CHECK(inst.graph == complete_minus_perfect_matching(6));
    CHECK(inst.expected.at("chi_x2") == 3);
    CHECK(inst.expected.at("chi_x2_complement") == 1);

    // witnesses must verify before any solver touches them
    CHECK(is_klp_partition(inst.graph, inst.witness_partitions.at("chi_x2"), 2).ok);
    CHECK(is_klp_partition(complement(inst.graph),
                           inst.witness_partitions.at("chi_x2_complement"), 2)
              .ok);
    CHECK(inst.witness_partitions.at("chi_x2").classes == 3);
    CHECK_THROWS_AS(build_ng_cocktail(2), std::invalid_argument);
}

TEST_CASE("girth-matching instance") {
    SharpnessInstance inst = build_girth_pendant_cycle(6, {0, 3});
    CHECK(inst.graph.order() == 8);
    CHECK(inst.expected.at("girth") == 6);
    CHECK(inst.expected.at("l2t") == 6);
    VertexSet w = make_vertex_set(inst.graph, inst.witness_sets.at("l2t"));
    CHECK(is_k_total_limited_packing(inst.graph, w, 2).ok);
    CHECK(l_kt(inst.graph, 2).value == 6);

    CHECK_THROWS_AS(build_girth_pendant_cycle(6, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_girth_pendant_cycle(2, {}), std::invalid_argument);
}

TEST_CASE("tree instance separating total from plain") {
    SharpnessInstance inst = build_tree_diff_sharp(1);
    CHECK(inst.graph.order() == 6);
    CHECK(inst.expected.at("l2t") == 6);
    CHECK(inst.expected.at("l2") == 4);
    VertexSet total = make_vertex_set(inst.graph, inst.witness_sets.at("l2t"));
    VertexSet plain = make_vertex_set(inst.graph, inst.witness_sets.at("l2"));
    CHECK(is_k_total_limited_packing(inst.graph, total, 2).ok);
    CHECK(is_k_limited_packing(inst.graph, plain, 2).ok);
    CHECK(static_cast<int>(total.count()) == 6);
    CHECK(static_cast<int>(plain.count()) == 4);
    CHECK(is_tree(inst.graph));
    CHECK(l_kt(inst.graph, 2).value == 6);
    CHECK(l_k(inst.graph, 2).value == 4);
    CHECK_THROWS_AS(build_tree_diff_sharp(0), std::invalid_argument);
}

TEST_CASE("gap instance with the four-cycle gadgets") {
    SharpnessInstance inst = build_gap_graph(1);
    CHECK(inst.graph.order() == 27);
    CHECK(inst.expected.at("l2t") == 24);
    CHECK(inst.expected.at("l2") == 14);
    VertexSet total = make_vertex_set(inst.graph, inst.witness_sets.at("l2t"));
    VertexSet plain = make_vertex_set(inst.graph, inst.witness_sets.at("l2"));
    CHECK(is_k_total_limited_packing(inst.graph, total, 2).ok);
    CHECK(is_k_limited_packing(inst.graph, plain, 2).ok);
    CHECK(static_cast<int>(total.count()) == 24);
    CHECK(static_cast<int>(plain.count()) == 14);
    CHECK_THROWS_AS(build_gap_graph(0), std::invalid_argument);
}
