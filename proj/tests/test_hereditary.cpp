#include "expdom/graph6.hpp"
#include "expdom/hereditary.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace expdom;

namespace {

std::set<std::string> codes_of(const std::vector<FoundGraph>& found)
{
    std::set<std::string> out;
    for (const FoundGraph& f : found)
        out.insert(f.graph6);
    return out;
}

std::set<std::string> codes_of(std::initializer_list<PatternName> names)
{
    std::set<std::string> out;
    for (PatternName n : names)
        out.insert(canonical_code(pattern(n).graph).to_graph6());
    return out;
}

} // namespace

TEST_CASE("equality")
{
    CHECK(equality_holds(cycle_graph(6)));
    CHECK_FALSE(equality_holds(path_graph(7)));
    CHECK(equality_holds(Graph(1)));
    CHECK(equality_holds(Graph(0)));
    CHECK_FALSE(equality_holds(path_graph(7), ClassKind::porous));
}

TEST_CASE("membership examples")
{
    const Graph f1 = pattern(PatternName::f1).graph;
    const MembershipResult r = in_class(f1);
    CHECK_FALSE(r.member);
    REQUIRE(r.witness.has_value());
    CHECK(isomorphic(*r.witness, f1));
    CHECK(r.witness_vertices == f1.vertices());

    CHECK(in_class(cycle_graph(6)).member);
    CHECK_FALSE(in_class(cycle_graph(6)).witness.has_value());

    const Graph host = path_graph(7).with_vertex(VertexSet::of({3})).with_vertex(VertexSet::of({7}));
    const MembershipResult p = in_class(host);
    CHECK_FALSE(p.member);
    CHECK(in_class(Graph(0)).member);
    CHECK_THROWS_AS(in_class(Graph(kMaxMembershipOrder + 1)), SizeLimitError);
}

TEST_CASE("witness sits in the query and violates equality")
{
    std::mt19937_64 rng(2);
    ClassOracle oracle;
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3);
        const MembershipResult r = oracle.in_class(g, ClassKind::exponential);
        if (r.member)
            continue;
        REQUIRE(r.witness.has_value());
        CHECK(is_connected(*r.witness));
        CHECK_FALSE(equality_holds(*r.witness));
        CHECK(isomorphic(induced_subgraph(g, r.witness_vertices), *r.witness));
    }
}

TEST_CASE("memoised recursion matches the all-subsets definition")
{
    ClassOracle memo;
    int checked = 0;
    for (const GraphStream& level : connected_graph_levels(6)) {
        for (const Graph& g : level) {
            for (ClassKind kind : {ClassKind::exponential, ClassKind::porous}) {
                const auto naive = oracle::naive_in_class(g, kind == ClassKind::porous);
                const MembershipResult r = memo.in_class(g, kind);
                CHECK(r.member == naive.member);
                if (!r.member)
                    CHECK(r.witness->order() == naive.witness_order);
            }
            ++checked;
        }
    }
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(rng, 7, 0.35 + 0.3 * (trial % 2));
        const auto naive = oracle::naive_in_class(g, false);
        const MembershipResult r = memo.in_class(g, ClassKind::exponential);
        CHECK(r.member == naive.member);
        if (!r.member)
            CHECK(r.witness->order() == naive.witness_order);
        ++checked;
    }
    CHECK(checked == 143 + 60);
}

TEST_CASE("membership is hereditary")
{
    std::mt19937_64 rng(5);
    ClassOracle oracle;
    int members = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 8), 0.3);
        if (!oracle.in_class(g, ClassKind::exponential).member)
            continue;
        ++members;
        for (int k = 0; k < 5; ++k) {
            const VertexSet s(rng() & g.vertices().bits());
            CHECK(oracle.in_class(induced_subgraph(g, s), ClassKind::exponential).member);
        }
    }
    CHECK(members > 20);
}

TEST_CASE("minimal forbidden")
{
    CHECK(is_minimal_forbidden(path_graph(7)));
    CHECK_FALSE(is_minimal_forbidden(path_graph(8)));
    CHECK_FALSE(is_minimal_forbidden(cycle_graph(6)));
    CHECK(is_minimal_forbidden(cycle_graph(7)));
    CHECK(is_minimal_forbidden(pattern(PatternName::f1).graph));
    for (int n = 1; n <= 6; ++n)
        CHECK(equality_holds(path_graph(n)));
}

TEST_CASE("catalog check")
{
    const auto checks = catalog_self_check();
    REQUIRE(checks.size() == 7);
    for (const CatalogCheck& c : checks) {
        CAPTURE(c.describe());
        CHECK(c.parameters.gamma == 3);
        CHECK(c.parameters.gamma_e == 2);
    }
    // The drawn F5 contains an induced F1, so it is not a minimal violator.
    for (const CatalogCheck& c : checks)
        CHECK(c.minimal == (c.name != PatternName::f5));
    CHECK(checks.back().inner_witness == canonical_code(pattern(PatternName::f1).graph).to_graph6());
    CHECK(oracle::least_embedding(pattern(PatternName::f5).graph, pattern(PatternName::f1).graph).has_value());
    CHECK(require_catalog_self_check().size() == 1);
}

TEST_CASE("minimal forbidden search")
{
    CHECK(find_minimal_forbidden(5, ClassKind::exponential, std::nullopt).found.empty());

    const auto six = find_minimal_forbidden(6, ClassKind::exponential, theorem1_restriction());
    CHECK(codes_of(six.found) == codes_of({PatternName::f1}));

    const auto seven = find_minimal_forbidden(7, ClassKind::exponential, theorem1_restriction());
    CHECK(codes_of(seven.found) ==
          codes_of({PatternName::p7, PatternName::c7, PatternName::f1, PatternName::f2, PatternName::f3,
                    PatternName::f4}));
    CHECK(codes_of(seven.found).size() == seven.found.size());
    for (const FoundGraph& f : seven.found) {
        CHECK(f.parameters.gamma == 3);
        CHECK(f.parameters.gamma_e == 2);
    }

    const auto open = find_minimal_forbidden(7, ClassKind::exponential, std::nullopt);
    CHECK(codes_of(open.found).size() == open.found.size());
    for (const FoundGraph& f : open.found)
        CHECK(is_minimal_forbidden(decode_graph6(f.graph6)));
    for (const FoundGraph& f : seven.found)
        CHECK(codes_of(open.found).count(f.graph6) == 1);
}

TEST_CASE("theorem sweeps")
{
    const auto t7 = verify_theorem1(7);
    CHECK(t7.verified());
    CHECK(t7.total_graphs() == 1 + 1 + 2 + 4 + 9 + 23 + 57);
    const auto t9 = verify_theorem1(9);
    CHECK(t9.verified());
    for (const auto& [order, count] : t9.graphs_per_order)
        CHECK(count == connected_graphs(order, {theorem1_restriction(), 1}).size());
    CHECK(verify_corollary1(9).verified());
    const auto c7 = verify_corollary2(7);
    CHECK(c7.verified());
    CHECK(c7.total_graphs() == 25);
    CHECK(verify_corollary2(12).verified());
}

TEST_CASE("sweeps over external input")
{
    SweepOptions options;
    options.input = std::vector<Graph>{path_graph(7), path_graph(7).relabeled(std::vector<int>{6, 5, 4, 3, 2, 1, 0}),
                                       cycle_graph(5), Graph(3)};
    const auto r = verify_corollary2(12, options);
    CHECK(r.source == "input");
    CHECK(r.total_graphs() == 1);
    CHECK(r.members_per_order.at(7) == 0);
    CHECK(r.verified());
}

TEST_CASE("conjecture probe")
{
    const auto a = probe_conjecture3(6);
    CHECK(a.divergences.empty());
    CHECK(a.counterexamples.empty());
    const auto b = probe_conjecture3(6, {3, nullptr, std::nullopt});
    CHECK(a.graphs_per_order == b.graphs_per_order);
    CHECK(a.members_per_order == b.members_per_order);
    CHECK(a.config_hash == b.config_hash);
}

TEST_CASE("shared table is filled once per class")
{
    auto table = std::make_shared<ParameterTable>();
    std::size_t notified = 0;
    table->set_sink([&](const CanonicalCode&, const ParameterTriple&) { ++notified; });
    SweepOptions options;
    options.table = table;
    verify_theorem1(6, options);
    const std::size_t first = table->size();
    CHECK(first == notified);
    verify_theorem1(6, options);
    CHECK(table->size() == first);
    CHECK(notified == first);
}
