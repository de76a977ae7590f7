#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <minorkit/graph.hpp>
#include <minorkit/planarity.hpp>

#include "oracles.hpp"

using namespace minorkit;

TEST_CASE("planarity verdicts on named graphs") {
    REQUIRE(is_planar(Graph(0)));
    REQUIRE(is_planar(Graph(5)));
    REQUIRE(is_planar(path_graph(9)));
    REQUIRE(is_planar(cycle_graph(12)));
    REQUIRE(is_planar(complete_graph(4)));
    REQUIRE(is_planar(grid_graph(7, 9)));
    REQUIRE(is_planar(complete_bipartite(2, 7)));
    REQUIRE_FALSE(is_planar(complete_graph(5)));
    REQUIRE_FALSE(is_planar(complete_bipartite(3, 3)));
    REQUIRE_FALSE(is_planar(complete_graph(6)));
    REQUIRE_FALSE(is_planar(petersen_graph()));
}

TEST_CASE("planarity of subdivisions and unions") {
    // subdividing edges never changes planarity; original ids are stable
    Graph k5sub = complete_graph(5);
    for (auto [u, v] : complete_graph(5).edges()) k5sub = subdivide_edge(k5sub, u, v);
    REQUIRE(k5sub.vertex_count() == 15);
    REQUIRE_FALSE(is_planar(k5sub));
    REQUIRE_FALSE(is_planar(disjoint_union(path_graph(3), complete_bipartite(3, 3))));
    REQUIRE(is_planar(disjoint_union(grid_graph(3, 3), cycle_graph(5))));
}

TEST_CASE("produced embeddings validate and satisfy Euler counts") {
    std::vector<Graph> gs = {complete_graph(4), grid_graph(4, 5), cycle_graph(8),
                             path_graph(6), complete_bipartite(2, 5)};
    // bowtie: two triangles at a cut vertex
    Graph bow(5);
    bow.add_edge(0, 1);
    bow.add_edge(1, 2);
    bow.add_edge(0, 2);
    bow.add_edge(2, 3);
    bow.add_edge(2, 4);
    bow.add_edge(3, 4);
    gs.push_back(bow);
    gs.push_back(disjoint_union(bow, cycle_graph(4)));
    for (const auto& g : gs) {
        auto emb = planar_embedding(g);
        REQUIRE(emb.has_value());
        REQUIRE(validate_embedding(g, *emb));
    }
    auto gemb = planar_embedding(grid_graph(4, 5));
    REQUIRE(face_count(grid_graph(4, 5), *gemb) == 3 * 4 + 1);
    REQUIRE(face_count(bow, *planar_embedding(bow)) == 3);
}

TEST_CASE("planarity agrees with the Wagner-criterion oracle on random graphs") {
    std::mt19937_64 rng(20260816);
    int nonplanar_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6;
        Graph g(n);
        double p = 0.35 + 0.1 * static_cast<double>(trial % 4);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uniform_real_distribution<>(0, 1)(rng) < p) g.add_edge(u, v);
        bool expect = oracles::planar_by_wagner(g);
        if (!expect) ++nonplanar_seen;
        REQUIRE(is_planar(g) == expect);
    }
    REQUIRE(nonplanar_seen > 0);
}

TEST_CASE("biconnected components") {
    REQUIRE(biconnected_components(path_graph(4)).size() == 3);
    REQUIRE(biconnected_components(cycle_graph(5)).size() == 1);
    // cycle with a pendant edge: two blocks
    Graph g = cycle_graph(4);
    int p = g.add_vertex();
    g.add_edge(0, p);
    auto blocks = biconnected_components(g);
    REQUIRE(blocks.size() == 2);
    REQUIRE(biconnected_components(Graph(3)).empty());
}

TEST_CASE("apex numbers by subset search") {
    REQUIRE(apex_number(grid_graph(5, 5)) == 0);
    REQUIRE(apex_number(path_graph(3)) == 0);
    REQUIRE(apex_number(complete_graph(5)) == 1);
    REQUIRE(apex_number(complete_bipartite(3, 3)) == 1);
    REQUIRE(apex_number(complete_graph(6)) == 2);
    REQUIRE(apex_number(complete_graph(7)) == 3);
    // Petersen minus one vertex has girth 5, 9 vertices, 12 edges;
    // 12 > 5*(9-2)/3 rules out planarity, so the apex number exceeds 1.
    REQUIRE(apex_number(petersen_graph()) == 2);
    REQUIRE_THROWS_AS(apex_number(complete_graph(7), 3), resource_limit_error);
}
