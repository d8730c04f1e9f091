#include <doctest.h>

#include <cmath>
#include <numbers>

#include "borsuk/graph.hpp"
#include "borsuk/sphere.hpp"
#include "oracles.hpp"

using namespace borsuk;

namespace {

PointSet circle_points(std::initializer_list<double> degrees) {
    PointSet s(1);
    for (double a : degrees) {
        const double t = a * std::numbers::pi / 180.0;
        const double c[2] = {std::cos(t), std::sin(t)};
        s.push_back(std::span<const double>(c, 2));
    }
    return s;
}

PointSet poles(int d) {
    PointSet s(d);
    const SpherePoint n = SpherePoint::north_pole(d);
    s.push_back(n);
    s.push_back(-n);
    return s;
}

}  // namespace

TEST_CASE("graph from edges") {
    const Edge e[] = {{2, 0}, {0, 2}, {1, 2}};
    const Graph g = Graph::from_edges(4, e);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(3, 3));
    CHECK(g.degree(2) == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK_THROWS_AS(g.has_edge(0, 4), std::invalid_argument);
    const Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(2, loop), std::invalid_argument);
    const Edge far[] = {{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(2, far), std::invalid_argument);
}

TEST_CASE("build_graph examples") {
    const BorsukGraph g = build_graph(poles(2), 0.1);
    CHECK(g.graph.edge_count() == 1);
    CHECK(is_edge(g, 0, 1));
    CHECK_FALSE(is_edge(g, 0, 0));
    CHECK_THROWS_AS(is_edge(g, 0, 2), std::invalid_argument);

    PointSet ne(2);
    ne.push_back(SpherePoint::north_pole(2));
    ne.push_back(SpherePoint(std::vector<double>{1, 0, 0}));
    CHECK(build_graph(ne, 0.1).graph.edge_count() == 0);

    const BorsukGraph empty = build_graph(PointSet(3), 0.3);
    CHECK(empty.graph.vertex_count() == 0);
    CHECK_THROWS_AS(build_graph(poles(1), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(poles(1), 2.5), std::invalid_argument);
}

TEST_CASE("grid edges equal brute force edges") {
    std::uint64_t seed = 1;
    for (int d : {1, 2, 3, 4})
        for (double eps : {0.5, 0.05, 0.005}) {
            const PointSet pts = sample_uniform(d, 1200, seed++);
            const BorsukGraph g = build_graph(pts, eps);
            CHECK(g.graph.edges() == oracle::brute_edges(pts, eps));
        }
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    const BorsukGraph g = build_graph(sample_uniform(2, 2000, 4), 0.05);
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex w : g.graph.neighbors(v)) {
            CHECK(w != v);
            CHECK(g.graph.has_edge(w, v));
        }
}

TEST_CASE("strict inequality at the threshold") {
    // x=(1,0) and y at angle pi - a have distance 2cos(a/2); put eps exactly there.
    const PointSet pts = circle_points({0.0, 170.0});
    const double dist = distance(pts[0], pts[1]);
    const double eps = 2.0 - dist;
    REQUIRE(2.0 - eps == dist);
    CHECK_FALSE(is_edge(build_graph(pts, eps), 0, 1));
    CHECK(is_edge(build_graph(pts, eps + 1e-15), 0, 1));
}

TEST_CASE("odd girth examples") {
    CHECK_FALSE(odd_girth(build_graph(poles(1), 0.1)).has_value());
    const BorsukGraph five = build_graph(circle_points({0, 144, 288, 72, 216}), 0.5);
    CHECK(five.graph.edge_count() == 5);
    CHECK(odd_girth(five) == std::optional<std::size_t>(5));
    CHECK(5.0 > 1.0 / std::sqrt(0.5));
    CHECK_FALSE(is_bipartite(five));
    CHECK(is_bipartite(build_graph(PointSet(1), 0.5)));
    CHECK(is_bipartite(build_graph(poles(1), 0.1)));
}

TEST_CASE("odd girth agrees with the closed-walk oracle") {
    std::uint64_t seed = 100;
    for (int d : {1, 2})
        for (double eps : {0.3, 0.1})
            for (int rep = 0; rep < 4; ++rep) {
                const BorsukGraph g = build_graph(sample_uniform(d, 150, seed++), eps);
                const auto og = odd_girth(g);
                CHECK(og == oracle::odd_girth_by_walks(g.graph));
                CHECK(og.has_value() != is_bipartite(g));
            }
}

TEST_CASE("odd girth exceeds 1/sqrt(eps)") {
    std::uint64_t seed = 500;
    for (int d : {1, 2, 3})
        for (double eps : {0.25, 0.04, 0.01})
            for (int rep = 0; rep < 4; ++rep) {
                const BorsukGraph g = build_graph(sample_uniform(d, 800, seed++), eps);
                if (const auto og = odd_girth(g)) CHECK(static_cast<double>(*og) > 1.0 / std::sqrt(eps));
            }
}

TEST_CASE("two_coloring is a proper 2-coloring") {
    const BorsukGraph g = build_graph(sample_uniform(1, 3000, 21), 1e-6);
    const auto side = two_coloring(g.graph);
    REQUIRE(side.has_value());
    for (auto [u, v] : g.graph.edges()) CHECK((*side)[u] != (*side)[v]);
}
