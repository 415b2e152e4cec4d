#include "expdom/enumeration.hpp"
#include "expdom/graph6.hpp"
#include "expdom/patterns.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace expdom;

TEST_CASE("catalog orders and sizes")
{
    const std::vector<std::tuple<PatternName, int, int>> expected{
        {PatternName::k3, 3, 3},    {PatternName::k4, 4, 6},    {PatternName::diamond, 4, 5},
        {PatternName::bull, 5, 5},  {PatternName::k23, 5, 6},   {PatternName::p2xp3, 6, 7},
        {PatternName::p7, 7, 6},    {PatternName::c7, 7, 7},    {PatternName::f1, 6, 5},
        {PatternName::f2, 7, 7},    {PatternName::f3, 7, 8},    {PatternName::f4, 7, 8},
        {PatternName::f5, 7, 8},    {PatternName::p2xc3, 6, 9},
    };
    REQUIRE(catalog().size() == kPatternCount);
    for (const auto& [name, n, m] : expected) {
        CAPTURE(to_string(name));
        CHECK(pattern(name).name == name);
        CHECK(pattern(name).graph.order() == n);
        CHECK(pattern(name).graph.size() == m);
        CHECK(is_connected(pattern(name).graph));
    }
}

TEST_CASE("catalog graphs are pairwise non-isomorphic and degree ordered")
{
    for (const Pattern& p : catalog()) {
        const auto deg = p.graph.degree_sequence();
        for (int v = 1; v < p.graph.order(); ++v)
            CHECK(p.graph.degree(v - 1) >= p.graph.degree(v));
        (void)deg;
        for (const Pattern& q : catalog())
            if (p.name != q.name)
                CHECK(oracle::brute_canon(p.graph) != oracle::brute_canon(q.graph));
    }
}

TEST_CASE("catalog shapes")
{
    CHECK(oracle::brute_canon(pattern(PatternName::p7).graph) == oracle::brute_canon(path_graph(7)));
    CHECK(oracle::brute_canon(pattern(PatternName::c7).graph) == oracle::brute_canon(cycle_graph(7)));
    CHECK(oracle::brute_canon(pattern(PatternName::k4).graph) == oracle::brute_canon(complete_graph(4)));
    CHECK(girth(pattern(PatternName::f1).graph) == kInfiniteDistance);
    CHECK(girth(pattern(PatternName::f2).graph) == 4);
    CHECK(girth(pattern(PatternName::f4).graph) == 4);
    CHECK(girth(pattern(PatternName::p2xc3).graph) == 3);
    const auto f4 = pattern(PatternName::f4).graph.degree_sequence();
    CHECK(f4 == std::vector<int>{4, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("names")
{
    for (int i = 0; i < kPatternCount; ++i) {
        const auto n = static_cast<PatternName>(i);
        CHECK(parse_pattern_name(to_string(n)) == n);
    }
    CHECK(parse_pattern_name("b") == PatternName::bull);
    CHECK(parse_pattern_name("D") == PatternName::diamond);
    CHECK(parse_pattern_name("p2xp3") == PatternName::p2xp3);
    CHECK_THROWS_AS(parse_pattern_name("K5"), UnknownPatternError);
    const PatternSet s = parse_pattern_list("B, DIAMOND,K4,K23,P2xP3");
    CHECK(s == theorem1_restriction());
    CHECK(s.to_string() == "K4,DIAMOND,BULL,K23,P2xP3");
    CHECK(parse_pattern_list("").empty());
    CHECK_THROWS_AS(parse_pattern_list("K3,X"), UnknownPatternError);
    CHECK((corollary2_obstructions() | PatternSet{PatternName::c7}).names().size() == 3);
}

TEST_CASE("matcher returns the least embedding found by injection search")
{
    for (const GraphStream& level : connected_graph_levels(8)) {
        for (const Graph& host : level) {
            for (const Pattern& p : catalog()) {
                const auto got = find_induced(host, p.graph);
                const auto want = oracle::least_embedding(host, p.graph);
                REQUIRE(got.has_value() == want.has_value());
                if (got)
                    REQUIRE(got->map == *want);
            }
        }
    }
}

TEST_CASE("matcher on random hosts and patterns")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const Graph host = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.4);
        const Graph p = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.5);
        const auto got = find_induced(host, p);
        const auto want = oracle::least_embedding(host, p);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            for (int a = 0; a < p.order(); ++a)
                for (int b = 0; b < p.order(); ++b)
                    if (a != b)
                        CHECK(p.adjacent(a, b) == host.adjacent(got->map[a], got->map[b]));
            CHECK(got->image().size() == p.order());
        }
    }
}

TEST_CASE("anchored matching")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph host = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.45);
        const int anchor = static_cast<int>(rng() % host.order());
        for (const Pattern& p : catalog()) {
            if (p.graph.order() > host.order())
                continue;
            const auto e = find_induced_through(host, p.graph, anchor);
            const auto want = oracle::least_embedding(host, p.graph, anchor);
            CHECK(e.has_value() == want.has_value());
            CHECK(is_free_through(host, {p.name}, anchor) == !want.has_value());
            if (e) {
                CHECK(e->image().contains(anchor));
                for (int a = 0; a < p.graph.order(); ++a)
                    for (int b = 0; b < p.graph.order(); ++b)
                        if (a != b)
                            CHECK(p.graph.adjacent(a, b) == host.adjacent(e->map[a], e->map[b]));
            }
        }
    }
    CHECK_THROWS_AS(find_induced_through(path_graph(3), path_graph(2), 5), GraphError);
}

TEST_CASE("freeness")
{
    const Graph f5 = pattern(PatternName::f5).graph;
    const auto w = find_forbidden(f5, theorem1_obstructions());
    REQUIRE(w.has_value());
    CHECK(w->name == PatternName::f1);
    CHECK(is_free(cycle_graph(6), theorem1_obstructions()));
    CHECK_FALSE(is_free(path_graph(8), {PatternName::p7}));
    CHECK(is_free_through(path_graph(8), {PatternName::k3}, 0));
    CHECK_FALSE(is_free_through(path_graph(8), {PatternName::p7}, 0));
    CHECK(is_free(Graph(0), theorem1_obstructions()));
}

TEST_CASE("empty pattern embeds anywhere")
{
    const auto e = find_induced(path_graph(3), Graph(0));
    REQUIRE(e.has_value());
    CHECK(e->map.empty());
    CHECK_FALSE(find_induced(path_graph(3), path_graph(4)).has_value());
}
