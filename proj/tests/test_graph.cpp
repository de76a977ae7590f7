#include <catch2/catch_amalgamated.hpp>

#include <minorkit/graph.hpp>

using namespace minorkit;

TEST_CASE("basic construction and edge operations") {
    Graph g(4);
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edge_count() == 0);
    REQUIRE(g.add_edge(0, 1));
    REQUIRE(g.add_edge(2, 1));
    REQUIRE_FALSE(g.add_edge(1, 0));  // duplicate
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.has_edge(1, 2));
    REQUIRE_FALSE(g.has_edge(0, 2));
    REQUIRE(g.neighbors(1) == std::vector<int>{0, 2});
    REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
    REQUIRE(g.remove_edge(0, 1));
    REQUIRE_FALSE(g.remove_edge(0, 1));
    REQUIRE(g.edge_count() == 1);
}

TEST_CASE("named graphs have the right sizes") {
    REQUIRE(complete_graph(5).edge_count() == 10);
    REQUIRE(complete_bipartite(3, 3).edge_count() == 9);
    REQUIRE(path_graph(6).edge_count() == 5);
    REQUIRE(cycle_graph(6).edge_count() == 6);
    Graph pet = petersen_graph();
    REQUIRE(pet.vertex_count() == 10);
    REQUIRE(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) REQUIRE(pet.degree(v) == 3);
    Graph gr = grid_graph(3, 4);
    REQUIRE(gr.vertex_count() == 12);
    REQUIRE(gr.edge_count() == 2 * 12 - 3 - 4);
    REQUIRE(detail(complete_graph(4)) == 6);
    REQUIRE(detail(path_graph(5)) == 5);
}

TEST_CASE("components and connectivity") {
    Graph g = disjoint_union(path_graph(3), cycle_graph(3));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0] == std::vector<int>{0, 1, 2});
    REQUIRE(comps[1] == std::vector<int>{3, 4, 5});
    REQUIRE_FALSE(is_connected(g));
    REQUIRE(is_connected(petersen_graph()));
    REQUIRE(is_connected_set(g, {0, 1}));
    REQUIRE_FALSE(is_connected_set(g, {0, 2}));
    REQUIRE_FALSE(is_connected_set(g, {2, 3}));
    REQUIRE(is_connected(Graph(1)));
    REQUIRE(is_connected(Graph(0)));
}

TEST_CASE("vertex deletion compacts ids in order") {
    Graph g = path_graph(5);  // 0-1-2-3-4
    Graph h = delete_vertex(g, 2);
    REQUIRE(h.vertex_count() == 4);
    // old 3,4 become 2,3
    REQUIRE(h.has_edge(0, 1));
    REQUIRE(h.has_edge(2, 3));
    REQUIRE_FALSE(h.has_edge(1, 2));
    Graph h2 = delete_vertices(g, {0, 4});
    REQUIRE(h2.vertex_count() == 3);
    REQUIRE(h2.edge_count() == 2);
}

TEST_CASE("contract, dissolve, subdivide") {
    Graph c4 = cycle_graph(4);
    Graph t = contract_edge(c4, 0, 1);  // triangle
    REQUIRE(t.vertex_count() == 3);
    REQUIRE(t.edge_count() == 3);

    Graph p = subdivide_edge(path_graph(2), 0, 1);
    REQUIRE(p.vertex_count() == 3);
    REQUIRE(p.has_edge(0, 2));
    REQUIRE(p.has_edge(1, 2));
    REQUIRE_FALSE(p.has_edge(0, 1));

    Graph back = dissolve_vertex(p, 2);
    REQUIRE(back.vertex_count() == 2);
    REQUIRE(back.has_edge(0, 1));
    REQUIRE_THROWS_AS(dissolve_vertex(complete_graph(4), 0), std::invalid_argument);

    // contracting a chord of K4 keeps it complete
    Graph k = contract_edge(complete_graph(4), 1, 3);
    REQUIRE(k == complete_graph(3));
}

TEST_CASE("induced subgraph and complement") {
    Graph k5 = complete_graph(5);
    REQUIRE(induced_subgraph(k5, {0, 2, 4}) == complete_graph(3));
    REQUIRE(complement_graph(complete_graph(4)) == Graph(4));
    REQUIRE(complement_graph(Graph(3)) == complete_graph(3));
}

TEST_CASE("witness verification in minor mode") {
    // C4 as a minor of C5: branch sets {0,1},{2},{3},{4}
    ContractionWitness w{cycle_graph(4), {{0, 1}, {2}, {3}, {4}}};
    REQUIRE(verify_witness(cycle_graph(5), w).ok);

    // disconnected branch set
    ContractionWitness bad1{cycle_graph(4), {{0, 2}, {1}, {3}, {4}}};
    REQUIRE_FALSE(verify_witness(cycle_graph(5), bad1).ok);

    // overlapping branch sets
    ContractionWitness bad2{cycle_graph(4), {{0, 1}, {1}, {3}, {4}}};
    REQUIRE_FALSE(verify_witness(cycle_graph(5), bad2).ok);

    // unrealized target edge: K4 is not a minor of C5
    ContractionWitness bad3{complete_graph(4), {{0, 1}, {2}, {3}, {4}}};
    REQUIRE_FALSE(verify_witness(cycle_graph(5), bad3).ok);

    // fixed vertices must be singletons
    REQUIRE(verify_witness(cycle_graph(5), w, {1, 2}).ok);
    REQUIRE_FALSE(verify_witness(cycle_graph(5), w, {0}).ok);
}

TEST_CASE("witness verification in contraction mode") {
    // C5 -> C4 by one contraction covers all vertices and matches exactly
    ContractionWitness w{cycle_graph(4), {{0, 1}, {2}, {3}, {4}}};
    REQUIRE(verify_witness(cycle_graph(5), w, {}, WitnessMode::Contraction).ok);

    // uncovered vertex fails in contraction mode but passes as a minor
    ContractionWitness part{path_graph(2), {{0}, {1}}};
    REQUIRE(verify_witness(path_graph(3), part).ok);
    REQUIRE_FALSE(verify_witness(path_graph(3), part, {}, WitnessMode::Contraction).ok);

    // quotient must not have extra edges: P3 -> two singletons and the middle
    ContractionWitness sq{path_graph(3), {{0}, {1}, {2}}};
    REQUIRE(verify_witness(path_graph(3), sq, {}, WitnessMode::Contraction).ok);
    ContractionWitness wrongtarget{Graph(3), {{0}, {1}, {2}}};
    REQUIRE_FALSE(verify_witness(path_graph(3), wrongtarget, {}, WitnessMode::Contraction).ok);
}
