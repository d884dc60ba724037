#include <catch2/catch_amalgamated.hpp>

#include "girth4/construct.hpp"
#include "girth4/metrics.hpp"

#include "oracles.hpp"

using namespace girth4;
using testutil::cycle_graph;
using testutil::graph_on;

TEST_CASE("girth of standard graphs", "[metrics]") {
    CHECK(girth(cycle_graph(5)) == GirthValue::finite(5));
    CHECK(girth(testutil::graph_from_mask(4, 0b111111)) == GirthValue::finite(3));  // K_4
    CHECK(girth(testutil::petersen_graph()) == GirthValue::finite(5));
    CHECK(girth(testutil::complete_bipartite(3, 3)) == GirthValue::finite(4));
}

TEST_CASE("forests have infinite girth", "[metrics]") {
    CHECK_FALSE(girth(testutil::path_graph(6)).is_finite());
    CHECK_FALSE(girth(testutil::star_graph(5)).is_finite());
    CHECK_FALSE(girth(SimpleGraph({}, {})).is_finite());
    CHECK_FALSE(girth(graph_on(5, {{1, 2}, {2, 3}, {4, 5}})).is_finite());
}

TEST_CASE("girth agrees with the edge-removal oracle", "[metrics]") {
    for (int k = 3; k <= 12; ++k)
        CHECK(girth(cycle_graph(k)) == testutil::girth_by_edge_removal(cycle_graph(k)));

    std::mt19937 rng(7101);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 7;
        const SimpleGraph g = testutil::random_graph(n, 0.45, rng);
        INFO("trial " << trial << " on " << n << " vertices, " << g.edge_count() << " edges");
        CHECK(girth(g) == testutil::girth_by_edge_removal(g));
    }
}

TEST_CASE("girth never decreases when edges are removed", "[metrics]") {
    std::mt19937 rng(7102);
    for (int trial = 0; trial < 60; ++trial) {
        const SimpleGraph g = testutil::random_graph(7, 0.5, rng);
        if (g.edge_count() == 0)
            continue;
        const GirthValue before = girth(g);
        std::vector<Edge> fewer(g.edges().begin(), g.edges().end() - 1);
        const GirthValue after = girth(SimpleGraph(g.vertices(), fewer));
        if (before.is_finite() && after.is_finite())
            CHECK(*after.value >= *before.value);
        if (!before.is_finite())
            CHECK_FALSE(after.is_finite());
    }
}

TEST_CASE("girth_at_least thresholds", "[metrics]") {
    CHECK(girth_at_least(testutil::star_graph(5), 4));
    CHECK(girth_at_least(cycle_graph(4), 4));
    CHECK_FALSE(girth_at_least(cycle_graph(4), 5));
    CHECK_THROWS_AS(girth_at_least(cycle_graph(4), 2), std::invalid_argument);
}

TEST_CASE("girth_at_least 4 means triangle-free", "[metrics]") {
    std::mt19937 rng(7103);
    for (int trial = 0; trial < 200; ++trial) {
        const SimpleGraph g = testutil::random_graph(3 + trial % 5, 0.5, rng);
        CHECK(girth_at_least(g, 4) == !testutil::has_triangle_by_triples(g));
    }
}

TEST_CASE("the last even part is a forest", "[metrics]") {
    // Gbar_{p+1} for p=2: eight disjoint 2-edge stars, girth at least anything.
    const auto parts = construct_even(2).decomposition.parts;
    const SimpleGraph g(make_complete_tripartite(4).vertices(), parts.back());
    for (int t = 3; t <= 12; ++t)
        CHECK(girth_at_least(g, t));
}

TEST_CASE("max planar edge bound", "[metrics]") {
    CHECK(max_planar_edges(10, 4) == 16);
    CHECK(max_planar_edges(6, 4) == 8);
    CHECK(max_planar_edges(12, 3) == 30);
    CHECK(max_planar_edges(3, 4) == 2);
    CHECK_THROWS_AS(max_planar_edges(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(max_planar_edges(10, 2), std::invalid_argument);
}

TEST_CASE("lower bound formula", "[metrics]") {
    CHECK(lower_bound_theta4_knnn(2) == 2);
    CHECK(lower_bound_theta4_knnn(4) == 3);
    CHECK(lower_bound_theta4_knnn(9) == 5);
    CHECK_THROWS_AS(lower_bound_theta4_knnn(1), std::invalid_argument);
}

TEST_CASE("theta formula", "[metrics]") {
    CHECK(theta4_knnn(1) == 2);
    CHECK(theta4_knnn(2) == 2);
    CHECK(theta4_knnn(4) == 3);
    CHECK(theta4_knnn(5) == 3);
    CHECK(theta4_knnn(9) == 5);
    CHECK_THROWS_AS(theta4_knnn(0), std::invalid_argument);
}

TEST_CASE("lower bound equals theta on a sample", "[metrics]") {
    for (std::int64_t n = 2; n <= 5000; ++n)
        CHECK(lower_bound_theta4_knnn(n) == theta4_knnn(n));
    for (std::int64_t n : {100000LL, 999999LL, 1000000LL})
        CHECK(lower_bound_theta4_knnn(n) == theta4_knnn(n));
}
