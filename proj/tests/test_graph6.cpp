#include <catch2/catch_amalgamated.hpp>

#include <minorkit/graph.hpp>
#include <minorkit/graph6.hpp>
#include <minorkit/json_io.hpp>

using namespace minorkit;

TEST_CASE("graph6 known encodings") {
    REQUIRE(to_graph6(complete_graph(2)) == "A_");
    REQUIRE(from_graph6("A_") == complete_graph(2));
    REQUIRE(to_graph6(Graph(0)) == "?");
    REQUIRE(to_graph6(Graph(1)) == "@");
    // K4 is "C~": 6 edges, all bits set
    REQUIRE(to_graph6(complete_graph(4)) == "C~");
    REQUIRE(from_graph6("C~") == complete_graph(4));
}

TEST_CASE("graph6 round trips") {
    std::vector<Graph> gs = {Graph(0), Graph(1), Graph(5), path_graph(7), cycle_graph(9),
                             petersen_graph(), complete_graph(8), complete_bipartite(3, 4),
                             grid_graph(4, 5), grid_graph(8, 9)};
    for (const auto& g : gs) REQUIRE(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 long form for 63 or more vertices") {
    Graph g = path_graph(63);
    std::string s = to_graph6(g);
    REQUIRE(static_cast<unsigned char>(s[0]) == 126);
    REQUIRE(from_graph6(s) == g);
    Graph big = grid_graph(10, 10);
    REQUIRE(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 header and whitespace tolerance") {
    REQUIRE(from_graph6(">>graph6<<A_") == complete_graph(2));
    REQUIRE(from_graph6("A_\n") == complete_graph(2));
}

TEST_CASE("graph6 rejects malformed input") {
    REQUIRE_THROWS_AS(from_graph6(""), parse_error);
    REQUIRE_THROWS_AS(from_graph6("D"), parse_error);        // truncated bits
    REQUIRE_THROWS_AS(from_graph6("A_x"), parse_error);      // trailing bytes
    REQUIRE_THROWS_AS(from_graph6("A\x05"), parse_error);    // byte out of range
}

TEST_CASE("json graph round trip and validation") {
    Graph g = petersen_graph();
    REQUIRE(graph_from_json(graph_to_json(g)) == g);
    REQUIRE_THROWS_AS(graph_from_json(parse_json_text("{\"n\":2}")), parse_error);
    REQUIRE_THROWS_AS(graph_from_json(parse_json_text("{\"n\":2,\"edges\":[[0,2]]}")), parse_error);
    REQUIRE_THROWS_AS(graph_from_json(parse_json_text("{\"n\":2,\"edges\":[[0,0]]}")), parse_error);
    REQUIRE_THROWS_AS(parse_json_text("{"), parse_error);
    Graph e = graph_from_json(parse_json_text("{\"n\":3,\"edges\":[[0,1],[1,2]]}"));
    REQUIRE(e == path_graph(3));
}
