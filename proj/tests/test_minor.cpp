#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <minorkit/graph.hpp>
#include <minorkit/minor.hpp>

#include "oracles.hpp"

using namespace minorkit;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<>(0, 1)(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("minor containment on known pairs") {
    REQUIRE(is_minor(complete_graph(1), complete_graph(2)).has_value());
    REQUIRE(is_minor(complete_graph(5), petersen_graph()).has_value());
    REQUIRE_FALSE(is_minor(complete_graph(5), grid_graph(10, 10)).has_value());
    REQUIRE(is_minor(complete_graph(4), complete_graph(6)).has_value());
    REQUIRE_FALSE(is_minor(complete_graph(4), cycle_graph(9)).has_value());
    REQUIRE(is_minor(cycle_graph(3), cycle_graph(9)).has_value());
    REQUIRE(is_minor(complete_bipartite(3, 3), petersen_graph()).has_value());
    REQUIRE_FALSE(is_minor(complete_graph(3), path_graph(7)).has_value());
}

TEST_CASE("witnesses are valid and inclusion-minimal") {
    auto w = is_minor(complete_graph(5), petersen_graph());
    REQUIRE(w.has_value());
    REQUIRE(verify_witness(petersen_graph(), *w).ok);
    // dropping any branch-set vertex breaks the witness
    for (size_t i = 0; i < w->branch_sets.size(); ++i) {
        for (size_t j = 0; j < w->branch_sets[i].size(); ++j) {
            ContractionWitness broken = *w;
            broken.branch_sets[i].erase(broken.branch_sets[i].begin() + static_cast<long>(j));
            REQUIRE_FALSE(verify_witness(petersen_graph(), broken).ok);
        }
    }
}

TEST_CASE("minor search agrees with assignment-enumeration oracle") {
    std::mt19937_64 rng(414243);
    std::vector<Graph> patterns = {complete_graph(3), complete_graph(4), cycle_graph(4),
                                   path_graph(4), complete_bipartite(1, 3), complete_bipartite(2, 2)};
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 6, 0.4);
        for (const auto& h : patterns) {
            bool expect = oracles::minor_by_assignment(h, g);
            (expect ? positives : negatives)++;
            REQUIRE(is_minor(h, g).has_value() == expect);
        }
    }
    REQUIRE(positives > 0);
    REQUIRE(negatives > 0);
}

TEST_CASE("minor relation is transitive on sampled chains") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Graph f = random_graph(rng, 7, 0.5);
        // g: random one-step reductions of f, h: of g
        Graph g = f;
        for (int step = 0; step < 2 && g.vertex_count() > 2; ++step) {
            auto es = g.edges();
            if (es.empty()) break;
            auto [u, v] = es[std::uniform_int_distribution<size_t>(0, es.size() - 1)(rng)];
            g = (trial % 2 == 0) ? contract_edge(g, u, v) : delete_edge(g, u, v);
        }
        Graph h = g;
        if (h.vertex_count() > 1) h = delete_vertex(h, 0);
        REQUIRE(is_minor(g, f).has_value());
        REQUIRE(is_minor(h, g).has_value());
        REQUIRE(is_minor(h, f).has_value());
    }
}

TEST_CASE("family containment") {
    std::vector<Graph> kuratowski = {complete_graph(5), complete_bipartite(3, 3)};
    REQUIRE(family_minor(kuratowski, complete_graph(6)));
    REQUIRE_FALSE(family_minor(kuratowski, grid_graph(5, 5)));
    REQUIRE_FALSE(family_minor({complete_graph(3)}, path_graph(6)));
    REQUIRE_FALSE(family_minor({complete_graph(2)}, complete_graph(1)));
    REQUIRE_THROWS_AS(family_minor({}, complete_graph(2)), std::invalid_argument);
}

TEST_CASE("topological minors") {
    REQUIRE(is_topological_minor(complete_graph(3), cycle_graph(9)));
    Graph k4sub = complete_graph(4);
    for (auto [u, v] : complete_graph(4).edges()) k4sub = subdivide_edge(k4sub, u, v);
    REQUIRE(is_topological_minor(complete_graph(4), k4sub));
    // needs a degree-4 branch vertex, host is subcubic
    REQUIRE_FALSE(is_topological_minor(complete_bipartite(1, 4), petersen_graph()));
    // K5 is a minor but not a topological minor of a subcubic host
    REQUIRE(is_minor(complete_graph(5), petersen_graph()).has_value());
    REQUIRE_FALSE(is_topological_minor(complete_graph(5), petersen_graph()));
    REQUIRE(is_topological_minor(Graph(0), Graph(0)));
    REQUIRE(is_topological_minor(path_graph(2), complete_graph(2)));
}

TEST_CASE("hitting sets on known instances") {
    auto s1 = hitting_set(complete_graph(3), {complete_graph(2)}, 2);
    REQUIRE(s1.has_value());
    REQUIRE(s1->size() <= 2);
    REQUIRE_FALSE(hitting_set(complete_graph(5), {complete_graph(3)}, 2).has_value());
    auto s3 = hitting_set(complete_graph(5), {complete_graph(3)}, 3);
    REQUIRE(s3.has_value());
    REQUIRE(s3->size() == 3);
    REQUIRE_FALSE(family_minor({complete_graph(3)}, delete_vertices(complete_graph(5), *s3)));
}

TEST_CASE("hitting sets agree with exhaustive subset search") {
    std::mt19937_64 rng(777);
    std::vector<Graph> fam = {complete_graph(3)};
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 7, 0.45);
        for (int k = 0; k <= 3; ++k) {
            auto fast = hitting_set(g, fam, k);
            auto slow = hitting_set_bruteforce(g, fam, k);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) {
                REQUIRE(static_cast<int>(fast->size()) <= k);
                REQUIRE_FALSE(family_minor(fam, delete_vertices(g, *fast)));
            }
            // monotonicity: no set at k implies none at k-1
            if (k > 0 && !fast) REQUIRE_FALSE(hitting_set(g, fam, k - 1).has_value());
        }
    }
}

TEST_CASE("k-apex membership") {
    std::vector<Graph> kuratowski = {complete_graph(5), complete_bipartite(3, 3)};
    REQUIRE(is_in_Ak(grid_graph(4, 4), kuratowski, 0));
    // every single-vertex deletion of K6 leaves K5
    REQUIRE_FALSE(is_in_Ak(complete_graph(6), kuratowski, 1));
    REQUIRE(is_in_Ak(complete_graph(6), kuratowski, 2));
    REQUIRE_FALSE(is_in_Ak(disjoint_union(complete_graph(2), complete_graph(2)), {complete_graph(2)}, 1));
    REQUIRE(is_in_Ak(disjoint_union(complete_graph(2), complete_graph(2)), {complete_graph(2)}, 2));
}

TEST_CASE("budget exhaustion is a distinct outcome") {
    REQUIRE_THROWS_AS(is_minor(complete_graph(4), complete_graph(9), 10), resource_limit_error);
    REQUIRE_THROWS_AS(is_topological_minor(complete_graph(4), complete_graph(9), 5), resource_limit_error);
    REQUIRE_THROWS_AS(hitting_set(complete_graph(5), {complete_graph(3)}, 2, 5), resource_limit_error);
}

TEST_CASE("verdict cache accelerates repeats without changing answers") {
    MinorCache cache;
    Graph g = petersen_graph();
    REQUIRE(is_minor(complete_graph(5), g, 50000000, &cache).has_value());
    REQUIRE(is_minor(complete_graph(5), g, 50000000, &cache).has_value());
    REQUIRE_FALSE(is_minor(complete_graph(4), path_graph(9), 50000000, &cache).has_value());
    REQUIRE_FALSE(is_minor(complete_graph(4), path_graph(9), 50000000, &cache).has_value());
}
