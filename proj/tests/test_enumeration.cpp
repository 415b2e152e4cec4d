#include "expdom/enumeration.hpp"
#include "expdom/graph6.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <unordered_set>

using namespace expdom;

namespace {

const std::vector<std::size_t> kConnectedCounts{1, 1, 2, 6, 21, 112, 853, 11117, 261080};
const std::vector<std::size_t> kTreeCounts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};

bool is_tree(const Graph& g)
{
    return is_connected(g) && g.size() == g.order() - 1;
}

} // namespace

TEST_CASE("connected graph counts")
{
    const auto levels = connected_graph_levels(8);
    REQUIRE(levels.size() == 8);
    for (int i = 0; i < 8; ++i) {
        CAPTURE(i + 1);
        CHECK(levels[i].order() == i + 1);
        CHECK(levels[i].size() == kConnectedCounts[i]);
        CHECK(levels[i].mode() == StreamMode::connected_graphs);
    }
}

TEST_CASE("order 9 count")
{
    CHECK(connected_graphs(9).size() == kConnectedCounts[8]);
}

TEST_CASE("tree counts")
{
    const auto levels = tree_levels(kMaxTreeOrder);
    for (int i = 0; i < kMaxTreeOrder; ++i) {
        CAPTURE(i + 1);
        CHECK(levels[i].size() == kTreeCounts[i]);
    }
}

TEST_CASE("streams agree with brute-force isomorphism classes")
{
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        std::set<std::string> got;
        for (const Graph& g : connected_graphs(n)) {
            CHECK(oracle::connected(g));
            got.insert(oracle::brute_canon(g));
        }
        CHECK(got.size() == connected_graphs(n).size());
        CHECK(got == oracle::connected_classes(n));
    }
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        std::set<std::string> got;
        for (const Graph& g : trees(n)) {
            CHECK(is_tree(g));
            got.insert(oracle::tree_code(g));
        }
        CHECK(got.size() == trees(n).size());
        CHECK(got == oracle::tree_classes(n));
    }
}

TEST_CASE("streams hold canonical representatives in code order")
{
    const GraphStream s = connected_graphs(6);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(canonical_code(s[i]) == s.codes()[i]);
        if (i > 0)
            CHECK(s.codes()[i - 1] < s.codes()[i]);
    }
    std::size_t iterated = 0;
    for (auto it = s.begin(); it != s.end(); ++it)
        ++iterated;
    CHECK(iterated == s.size());
}

TEST_CASE("filtered growth equals post-hoc filtering")
{
    const PatternSet restriction = theorem1_restriction();
    for (int n = 1; n <= 8; ++n) {
        const GraphStream pruned = connected_graphs(n, {restriction, 1});
        const GraphStream post = filtered(connected_graphs(n), restriction);
        CHECK(pruned.codes() == post.codes());
        REQUIRE(pruned.filter().has_value());
        CHECK(*pruned.filter() == restriction);
        for (const Graph& g : pruned)
            CHECK(is_free(g, restriction));
    }
    const GraphStream twice = filtered(connected_graphs(5, {PatternSet{PatternName::k3}, 1}), {PatternName::p7});
    CHECK(*twice.filter() == PatternSet({PatternName::k3, PatternName::p7}));
}

TEST_CASE("obstructions removed by the combined filter at order 7")
{
    const PatternSet restriction = theorem1_restriction();
    const PatternSet both = restriction | theorem1_obstructions();
    const GraphStream base = connected_graphs(7, {restriction, 1});
    const GraphStream narrow = connected_graphs(7, {both, 1});
    std::unordered_set<CanonicalCode, CanonicalCodeHash> kept(narrow.codes().begin(), narrow.codes().end());
    std::vector<Graph> removed;
    for (const CanonicalCode& c : base.codes())
        if (!kept.count(c))
            removed.push_back(c.to_graph());
    // Every removed graph contains an obstruction; the removed graphs that are
    // themselves catalog obstructions are exactly the order-7 ones.
    std::set<std::string> obstruction_codes;
    for (PatternName n : theorem1_obstructions().names())
        if (pattern(n).graph.order() == 7)
            obstruction_codes.insert(canonical_code(pattern(n).graph).to_graph6());
    std::set<std::string> removed_obstructions;
    for (const Graph& g : removed) {
        CHECK_FALSE(is_free(g, theorem1_obstructions()));
        const std::string g6 = encode_graph6(g);
        if (obstruction_codes.count(g6))
            removed_obstructions.insert(g6);
    }
    CHECK(removed_obstructions == obstruction_codes);
}

TEST_CASE("workers do not change the output")
{
    CHECK(connected_graphs(7, {std::nullopt, 3}).codes() == connected_graphs(7).codes());
    CHECK(trees(12, {std::nullopt, 2}).codes() == trees(12).codes());
}

TEST_CASE("range checks")
{
    CHECK_THROWS_AS(connected_graphs(0), std::out_of_range);
    CHECK_THROWS_AS(connected_graphs(kMaxConnectedOrder + 1), std::out_of_range);
    CHECK_THROWS_AS(trees(kMaxTreeOrder + 1), std::out_of_range);
}
