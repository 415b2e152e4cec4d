#include "expdom/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace expdom;

TEST_CASE("vertex set basics")
{
    const VertexSet s = VertexSet::of({1, 4, 63});
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(0));
    CHECK(s.first() == 1);
    CHECK(s.last() == 63);
    CHECK(s.to_vector() == std::vector<int>{1, 4, 63});
    CHECK(s.without(4).with(0) == VertexSet::of({0, 1, 63}));
    CHECK((s - VertexSet::of({1})) == VertexSet::of({4, 63}));
    CHECK((s & VertexSet::range(5)) == VertexSet::of({1, 4}));
    CHECK((s | VertexSet::singleton(2)).size() == 4);
    CHECK(VertexSet::of({1, 4}).subset_of(s));
    CHECK_FALSE(s.intersects(VertexSet::of({2, 3})));
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet::range(0).empty());
}

TEST_CASE("graph construction validates input")
{
    CHECK_THROWS_AS(Graph(-1), GraphError);
    CHECK_THROWS_AS(Graph(65), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), GraphError);
    const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.size() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    const std::vector<std::uint64_t> bad{0b10, 0b00};
    CHECK_THROWS_AS(Graph::from_rows(bad), GraphError);
}

TEST_CASE("factories")
{
    CHECK(path_graph(5).size() == 4);
    CHECK(cycle_graph(6).size() == 6);
    CHECK(complete_graph(5).size() == 10);
    const Graph star = star_graph(4);
    CHECK(star.order() == 5);
    CHECK(star.degree(0) == 4);
    CHECK(girth(cycle_graph(7)) == 7);
    CHECK(girth(path_graph(7)) == kInfiniteDistance);
    CHECK(girth(complete_graph(4)) == 3);
}

TEST_CASE("relabel and induced subgraph")
{
    const Graph p = path_graph(4);
    const std::vector<int> label{3, 2, 1, 0};
    CHECK(p.relabeled(label) == p);
    const std::vector<int> swap{1, 0, 2, 3};
    const Graph q = p.relabeled(swap);
    CHECK(q.adjacent(0, 1));
    CHECK(q.adjacent(0, 2));
    CHECK(q.adjacent(2, 3));
    CHECK_FALSE(q.adjacent(1, 2));
    const Graph h = induced_subgraph(cycle_graph(6), VertexSet::of({0, 1, 2, 4}));
    CHECK(h.order() == 4);
    CHECK(h.size() == 2);
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(1, 2));
}

TEST_CASE("with_vertex and with_edge")
{
    const Graph g = path_graph(3).with_vertex(VertexSet::of({0, 2}));
    CHECK(g == cycle_graph(4));
    CHECK(path_graph(4).with_edge(0, 3) == cycle_graph(4));
}

TEST_CASE("components and connectivity")
{
    const Graph g = Graph::from_edge_list(6, {{0, 3}, {1, 2}, {4, 5}, {2, 5}});
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of({0, 3}));
    CHECK(comps[1] == VertexSet::of({1, 2, 4, 5}));
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(Graph(0)));
    CHECK(connected_components(Graph(0)).empty());
}

TEST_CASE("bfs distances agree with path enumeration")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const std::uint64_t blocked = rng() & ((std::uint64_t{1} << n) - 1);
        const int src = static_cast<int>(rng() % n);
        const VertexSet allowed = g.vertices() - VertexSet(blocked);
        const DistanceRow row = bfs_distances(g, src, allowed);
        for (int u = 0; u < n; ++u) {
            int expected;
            if (u == src)
                expected = 0;
            else if (!allowed.contains(u))
                expected = kInfiniteDistance;
            else
                expected = oracle::path_distance(g, blocked & ~(std::uint64_t{1} << src) & ~(std::uint64_t{1} << u),
                                                 u, src);
            CHECK(row[u] == expected);
        }
    }
}

TEST_CASE("set distance")
{
    const Graph p = path_graph(6);
    CHECK(set_distance(p, VertexSet::of({0}), VertexSet::of({5})) == 5);
    CHECK(set_distance(p, VertexSet::of({0, 4}), VertexSet::of({2})) == 2);
    CHECK(set_distance(p, VertexSet::of({3}), VertexSet::of({3})) == 0);
    CHECK(set_distance(Graph(2), VertexSet::of({0}), VertexSet::of({1})) == kInfiniteDistance);
    CHECK_THROWS_AS(set_distance(p, VertexSet(), VertexSet::of({1})), GraphError);
}
