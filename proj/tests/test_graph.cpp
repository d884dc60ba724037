#include <catch2/catch_amalgamated.hpp>

#include "girth4/graph.hpp"

#include "oracles.hpp"

using namespace girth4;

TEST_CASE("vertex ordering is part-major then index", "[graph]") {
    CHECK(Vertex::u(9) < Vertex::v(1));
    CHECK(Vertex::v(9) < Vertex::w(1));
    CHECK(Vertex::w(9) < Vertex::plain(1));
    CHECK(Vertex::u(1) < Vertex::u(2));
    CHECK(Vertex::u(3) == Vertex::u(3));
}

TEST_CASE("edges normalize endpoint order and reject loops", "[graph]") {
    const Edge e1(Vertex::v(1), Vertex::u(2));
    const Edge e2(Vertex::u(2), Vertex::v(1));
    CHECK(e1 == e2);
    CHECK(e1.a == Vertex::u(2));
    CHECK(e1.b == Vertex::v(1));
    CHECK_THROWS_AS(Edge(Vertex::u(1), Vertex::u(1)), std::invalid_argument);
}

TEST_CASE("simple graph canonicalizes and validates", "[graph]") {
    const SimpleGraph g({Vertex::u(2), Vertex::u(1), Vertex::v(1), Vertex::u(1)},
                        {Edge(Vertex::u(1), Vertex::v(1)), Edge(Vertex::v(1), Vertex::u(1))});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(Vertex::v(1), Vertex::u(1)));
    CHECK_FALSE(g.has_edge(Vertex::u(2), Vertex::v(1)));
    CHECK(g.degree(Vertex::u(1)) == 1);
    CHECK(g.degree(Vertex::u(2)) == 0);

    SECTION("edge endpoints must be vertices") {
        CHECK_THROWS_AS(SimpleGraph({Vertex::u(1)}, {Edge(Vertex::u(1), Vertex::v(1))}),
                        std::invalid_argument);
    }
    SECTION("plain and partite vertices cannot mix") {
        CHECK_THROWS_AS(SimpleGraph({Vertex::u(1), Vertex::plain(1)}, {}),
                        std::invalid_argument);
    }
}

TEST_CASE("graph equality is label-sensitive set equality", "[graph]") {
    const SimpleGraph a({Vertex::u(1), Vertex::v(1)}, {Edge(Vertex::u(1), Vertex::v(1))});
    const SimpleGraph b({Vertex::v(1), Vertex::u(1)}, {Edge(Vertex::v(1), Vertex::u(1))});
    CHECK(a == b);
    const SimpleGraph c({Vertex::u(2), Vertex::v(1)}, {Edge(Vertex::u(2), Vertex::v(1))});
    CHECK_FALSE(a == c);
}

TEST_CASE("complete tripartite graphs", "[graph]") {
    SECTION("n=1 is a triangle") {
        const SimpleGraph g = make_complete_tripartite(1);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
    }
    SECTION("n=2 has 12 edges") {
        const SimpleGraph g = make_complete_tripartite(2);
        CHECK(g.vertex_count() == 6);
        CHECK(g.edge_count() == 12);
    }
    SECTION("n=4 has 48 edges, all cross-part pairs, degree 8 everywhere") {
        const SimpleGraph g = make_complete_tripartite(4);
        std::size_t cross_pairs = 0;  // independent count over all vertex pairs
        const auto& vs = g.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const bool cross = vs[i].part != vs[j].part;
                if (cross)
                    ++cross_pairs;
                CHECK(g.has_edge(vs[i], vs[j]) == cross);
            }
        CHECK(g.edge_count() == 48);
        CHECK(cross_pairs == 48);
        for (const Vertex& x : vs)
            CHECK(g.degree(x) == 8);
    }
    SECTION("contains the triangle u1 v1 w1 for every n") {
        for (int n = 1; n <= 5; ++n) {
            const SimpleGraph g = make_complete_tripartite(n);
            CHECK(g.has_edge(Vertex::u(1), Vertex::v(1)));
            CHECK(g.has_edge(Vertex::v(1), Vertex::w(1)));
            CHECK(g.has_edge(Vertex::u(1), Vertex::w(1)));
        }
    }
    SECTION("rejects n=0") { CHECK_THROWS_AS(make_complete_tripartite(0), std::invalid_argument); }
}

TEST_CASE("complete graphs", "[graph]") {
    CHECK(make_complete(1).edge_count() == 0);
    CHECK(make_complete(4).edge_count() == 6);
    const SimpleGraph k10 = make_complete(10);
    std::size_t pairs = 0;
    for (int i = 1; i <= 10; ++i)
        for (int j = i + 1; j <= 10; ++j, ++pairs)
            CHECK(k10.has_edge(Vertex::plain(i), Vertex::plain(j)));
    CHECK(k10.edge_count() == pairs);
    for (const Vertex& x : k10.vertices())
        CHECK(k10.degree(x) == 9);
    CHECK_THROWS_AS(make_complete(0), std::invalid_argument);
}

TEST_CASE("host descriptors regenerate their graphs", "[graph]") {
    CHECK(Host::complete_tripartite(3).graph() == make_complete_tripartite(3));
    CHECK(Host::complete(5).graph() == make_complete(5));
    const SimpleGraph g = testutil::cycle_graph(4);
    CHECK(Host::explicit_host(g).graph() == g);
    CHECK_THROWS_AS(Host::complete_tripartite(0), std::invalid_argument);
    CHECK_THROWS_AS(Host::complete(0), std::invalid_argument);
}

TEST_CASE("decomposition canonicalizes parts and requires at least one", "[graph]") {
    const Edge e1(Vertex::u(1), Vertex::v(1));
    const Edge e2(Vertex::u(1), Vertex::w(1));
    const Decomposition d(Host::complete_tripartite(1), {{e2, e1, e1}});
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0] == std::vector<Edge>{e1, e2});
    CHECK_THROWS_AS(Decomposition(Host::complete_tripartite(1), {}), std::invalid_argument);
}

TEST_CASE("edge union multiset counts across parts", "[graph]") {
    const Edge e1(Vertex::u(1), Vertex::v(1));
    const Edge e2(Vertex::u(1), Vertex::w(1));
    const Edge e3(Vertex::v(1), Vertex::w(1));

    SECTION("two parts sharing one edge") {
        const Decomposition d(Host::complete_tripartite(1), {{e1, e2}, {e1, e3}});
        const auto counts = edge_union_multiset(d);
        CHECK(counts.at(e1) == 2);
        CHECK(counts.at(e2) == 1);
        CHECK(counts.at(e3) == 1);
    }
    SECTION("disjoint parts have all multiplicities one") {
        const Decomposition d(Host::complete_tripartite(1), {{e1}, {e2, e3}});
        for (const auto& [edge, count] : edge_union_multiset(d))
            CHECK(count == 1);
    }
    SECTION("empty parts give an empty mapping") {
        const Decomposition d(Host::complete_tripartite(1), {{}, {}});
        CHECK(edge_union_multiset(d).empty());
    }
}

TEST_CASE("construction stages have stable names", "[graph]") {
    CHECK(stage_name(Stage::G1) == "G1");
    CHECK(stage_name(Stage::G2) == "G2");
    CHECK(stage_name(Stage::Gbar) == "Gbar");
    CHECK(stage_name(Stage::Ghat) == "Ghat");
    CHECK(stage_name(Stage::Gtilde) == "Gtilde");
}
