#include "expdom/enumeration.hpp"
#include "expdom/graph6.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace expdom;

namespace {

struct Vector {
    int n;
    std::vector<std::pair<int, int>> edges;
    std::string graph6;
};

std::vector<Vector> frozen_vectors()
{
    std::ifstream in(EXPDOM_TEST_DATA_DIR "/graph6_vectors.txt");
    REQUIRE(in);
    std::vector<Vector> out;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        std::string n, edges, g6;
        std::getline(fields, n, '\t');
        std::getline(fields, edges, '\t');
        std::getline(fields, g6, '\t');
        Vector v{std::stoi(n), {}, g6};
        if (edges != "-") {
            std::istringstream es(edges);
            for (std::string e; es >> e;) {
                const auto dash = e.find('-');
                v.edges.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
            }
        }
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("known encodings")
{
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(complete_graph(2)) == "A_");
    CHECK(encode_graph6(path_graph(3)) == "Bg");
    CHECK(encode_graph6(cycle_graph(6)) == "EhEG");
    CHECK(encode_graph6(complete_graph(4)) == "C~");
}

TEST_CASE("frozen reference vectors")
{
    const auto vectors = frozen_vectors();
    CHECK(vectors.size() == 11);
    for (const auto& v : vectors) {
        CAPTURE(v.graph6);
        const Graph g = Graph::from_edge_list(v.n, v.edges);
        CHECK(encode_graph6(g) == v.graph6);
        CHECK(decode_graph6(v.graph6) == g);
    }
}

TEST_CASE("decode rejects malformed input")
{
    CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("B"), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("Bgg"), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("Bh"), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("B\x7f"), Graph6Error);
    CHECK_THROWS_AS(decode_graph6(" Bg"), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("~?"), Graph6Error);
}

TEST_CASE("orders beyond 64 hit the size cap")
{
    // order 65 in the long header form
    std::string text = "~?@@";
    text += std::string((65 * 64 / 2 + 5) / 6, '?');
    CHECK_THROWS_AS(decode_graph6(text), SizeLimitError);
}

TEST_CASE("stream reader")
{
    std::istringstream in(">>graph6<<A_\r\n\nBg\nC~\n");
    const auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == complete_graph(2));
    CHECK(graphs[1] == path_graph(3));
    CHECK(graphs[2] == complete_graph(4));

    std::istringstream bad("A_\nBg\nB?x\n");
    try {
        read_graph6_stream(bad);
        FAIL("expected an error");
    } catch (const Graph6Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("round trip on every enumerated graph up to order 8")
{
    std::size_t count = 0;
    for (const GraphStream& level : connected_graph_levels(8)) {
        for (const Graph& g : level) {
            const std::string s = encode_graph6(g);
            REQUIRE(decode_graph6(s) == g);
            REQUIRE(encode_graph6(decode_graph6(s)) == s);
            ++count;
        }
    }
    CHECK(count == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117);
}

TEST_CASE("round trip on random graphs up to order 64")
{
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = static_cast<int>(rng() % 65);
        const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const Graph g = oracle::random_graph(rng, n, p);
        const std::string s = encode_graph6(g);
        REQUIRE(decode_graph6(s) == g);
    }
}
