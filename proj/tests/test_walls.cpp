#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "minorkit/canonical.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/planarity.hpp"
#include "minorkit/walls.hpp"

using minorkit::Edge;
using minorkit::Graph;
using minorkit::Wall;
using minorkit::make_edge;

namespace {

bool is_cycle_in(const Graph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 3) return false;
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size()) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    return true;
}

// Face vertex sets of an embedding, traced the same way Euler validation
// walks directed edges.
std::vector<std::set<int>> embedding_faces(const Graph& g, const minorkit::PlanarEmbedding& emb) {
    int n = g.vertex_count();
    std::vector<std::map<int, int>> succ(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < rot.size(); ++i)
            succ[static_cast<std::size_t>(v)][rot[i]] = rot[(i + 1) % rot.size()];
    }
    std::set<std::pair<int, int>> seen;
    std::vector<std::set<int>> faces;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (seen.count({u, v})) continue;
            std::set<int> face;
            int a = u, b = v;
            while (!seen.count({a, b})) {
                seen.insert({a, b});
                face.insert(a);
                int c = succ[static_cast<std::size_t>(b)].at(a);
                a = b;
                b = c;
            }
            faces.push_back(face);
        }
    return faces;
}

std::set<int> vset(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); }

void check_partition_shape(const minorkit::CanonicalPartition& cp, const Graph& host) {
    std::set<int> seen;
    std::size_t total = 0;
    for (const auto& [key, bag] : cp.internal_bags) {
        REQUIRE(!bag.empty());
        REQUIRE(minorkit::is_connected_set(host, bag));
        seen.insert(bag.begin(), bag.end());
        total += bag.size();
    }
    REQUIRE(!cp.external_bag.empty());
    REQUIRE(minorkit::is_connected_set(host, cp.external_bag));
    seen.insert(cp.external_bag.begin(), cp.external_bag.end());
    total += cp.external_bag.size();
    REQUIRE(total == seen.size());
    REQUIRE(static_cast<int>(seen.size()) == host.vertex_count());
}

}  // namespace

TEST_CASE("elementary wall construction and counts") {
    CHECK_THROWS_AS(minorkit::build_elementary_wall(2), std::invalid_argument);
    CHECK_THROWS_AS(minorkit::build_elementary_wall(4), std::invalid_argument);
    CHECK_THROWS_AS(minorkit::build_elementary_wall(1), std::invalid_argument);
    CHECK_THROWS_AS(minorkit::build_elementary_wall(-3), std::invalid_argument);

    for (int r : {3, 5, 7}) {
        Wall w = minorkit::build_elementary_wall(r);
        CAPTURE(r);
        CHECK(w.base.vertex_count() == 2 * r * r - 2);
        CHECK(w.base.edge_count() == 3 * r * r - 2 * r - 2);
        for (int v = 0; v < w.base.vertex_count(); ++v) CHECK(w.base.degree(v) <= 3);
        CHECK(minorkit::is_planar(w.base));
        auto emb = minorkit::planar_embedding(w.base);
        REQUIRE(emb.has_value());
        CHECK(minorkit::face_count(w.base, *emb) == (r - 1) * (r - 1) + 1);
    }
}

TEST_CASE("perimeter, pegs, corners") {
    for (int r : {3, 5, 7}) {
        Wall w = minorkit::build_elementary_wall(r);
        CAPTURE(r);
        auto per = minorkit::perimeter_cycle(w);
        CHECK(static_cast<int>(per.size()) == 8 * r - 10);
        CHECK(is_cycle_in(w.base, per));

        // Degree sum: 2E = 6r^2-4r-4 over 2r^2-2 vertices of degree 2 or 3,
        // so exactly 4r-2 vertices have degree 2.
        auto pg = minorkit::pegs(w);
        CHECK(static_cast<int>(pg.size()) == 4 * r - 2);
        std::set<int> per_set(per.begin(), per.end());
        for (int v : pg) {
            CHECK(w.base.degree(v) == 2);
            CHECK(per_set.count(v) == 1);
        }
        auto cs = minorkit::corners(w);
        REQUIRE(cs.size() == 4);
        std::set<int> cset(cs.begin(), cs.end());
        CHECK(cset.size() == 4);
        std::set<int> pset(pg.begin(), pg.end());
        for (int c : cs) CHECK(pset.count(c) == 1);
    }
}

TEST_CASE("bricks match the faces of the embedding") {
    for (int r : {3, 5, 7}) {
        Wall w = minorkit::build_elementary_wall(r);
        CAPTURE(r);
        auto bs = minorkit::bricks(w);
        CHECK(static_cast<int>(bs.size()) == (r - 1) * (r - 1));
        auto emb = minorkit::planar_embedding(w.base);
        REQUIRE(emb.has_value());
        auto faces = embedding_faces(w.base, *emb);
        std::set<std::set<int>> face_sets(faces.begin(), faces.end());
        std::set<std::set<int>> brick_sets;
        for (const auto& b : bs) {
            CHECK(b.size() == 6);
            CHECK(is_cycle_in(w.base, b));
            brick_sets.insert(vset(b));
            CHECK(face_sets.count(vset(b)) == 1);
        }
        CHECK(brick_sets.size() == bs.size());
    }
}

TEST_CASE("layers peel to the center") {
    CHECK(minorkit::layers(minorkit::build_elementary_wall(11)).size() == 5);
    CHECK(minorkit::layers(minorkit::build_elementary_wall(5)).size() == 2);
    CHECK(minorkit::layers(minorkit::build_elementary_wall(3)).size() == 1);

    Wall w = minorkit::build_elementary_wall(9);
    auto ls = minorkit::layers(w);
    REQUIRE(ls.size() == 4);
    CHECK(vset(ls[0]) == minorkit::perimeter_host_set(w));
    std::set<int> seen;
    for (const auto& l : ls) {
        CHECK(is_cycle_in(w.base, l));
        for (int v : l) {
            CHECK(seen.count(v) == 0);
            seen.insert(v);
        }
    }

    auto cv = minorkit::central_vertices(w);
    CHECK(seen.count(cv.first) == 0);
    CHECK(seen.count(cv.second) == 0);
    CHECK(w.base.has_edge(cv.first, cv.second));
}

TEST_CASE("central subwalls compose") {
    Wall w9 = minorkit::build_elementary_wall(9);

    Wall full = minorkit::central_subwall(w9, 9);
    CHECK(full.host_vertices() == w9.host_vertices());
    CHECK(full.host_edges() == w9.host_edges());

    Wall c5 = minorkit::central_subwall(w9, 5);
    CHECK(c5.r == 5);
    CHECK(minorkit::is_isomorphic(c5.base, minorkit::build_elementary_wall(5).base));

    Wall c3a = minorkit::central_subwall(minorkit::central_subwall(w9, 7), 3);
    Wall c3b = minorkit::central_subwall(w9, 3);
    CHECK(c3a.host_vertices() == c3b.host_vertices());
    CHECK(c3a.host_edges() == c3b.host_edges());

    CHECK_THROWS_AS(minorkit::central_subwall(w9, 11), std::invalid_argument);
    CHECK_THROWS_AS(minorkit::central_subwall(w9, 4), std::invalid_argument);
    CHECK_THROWS_AS(minorkit::subwall(w9, 8, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(minorkit::subwall(w9, 0, 1, 3), std::invalid_argument);

    // The reflected case: a subwall anchored at an even row equals the peel
    // of the same region.
    Wall w5 = minorkit::build_elementary_wall(5);
    Wall s = minorkit::subwall(w5, 2, 2, 3);
    CHECK(s.host_vertices() == minorkit::central_subwall(w5, 3).host_vertices());
    CHECK(minorkit::is_isomorphic(s.base, minorkit::build_elementary_wall(3).base));
}

TEST_CASE("canonical partition of elementary walls") {
    Wall w5 = minorkit::build_elementary_wall(5);
    auto cp = minorkit::canonical_partition(w5);
    CHECK(cp.internal_bags.size() == 9);
    for (const auto& [key, bag] : cp.internal_bags) CHECK(bag.size() == 2);
    CHECK(vset(cp.external_bag) == minorkit::perimeter_host_set(w5));
    check_partition_shape(cp, w5.base);

    Wall w3 = minorkit::build_elementary_wall(3);
    auto cp3 = minorkit::canonical_partition(w3);
    REQUIRE(cp3.internal_bags.size() == 1);
    auto cv = minorkit::central_vertices(w3);
    CHECK(vset(cp3.internal_bags.at({2, 2})) == std::set<int>{cv.first, cv.second});
}

TEST_CASE("every internal bag meets exactly four bricks") {
    for (int r : {5, 7, 9}) {
        Wall w = minorkit::build_elementary_wall(r);
        CAPTURE(r);
        auto cp = minorkit::canonical_partition(w);
        auto bs = minorkit::bricks(w);
        std::vector<std::set<int>> brick_sets;
        for (const auto& b : bs) brick_sets.push_back(vset(b));
        for (const auto& [key, bag] : cp.internal_bags) {
            int hits = 0;
            for (const auto& bset : brick_sets) {
                bool meet = false;
                for (int v : bag)
                    if (bset.count(v)) { meet = true; break; }
                if (meet) ++hits;
            }
            CAPTURE(key.first, key.second);
            CHECK(hits == 4);
        }
    }
}

TEST_CASE("canonical partition of a subdivided wall picks up stub interiors") {
    Wall probe = minorkit::build_elementary_wall(5);
    auto id = [&](int x, int y) { return probe.vertex_at(x, y); };
    std::map<Edge, int> lengths;
    lengths[make_edge(id(3, 2), id(4, 2))] = 2;  // crossing edge of bag (2,2)
    lengths[make_edge(id(4, 2), id(4, 3))] = 1;  // climb toward row 3
    lengths[make_edge(id(2, 2), id(3, 2))] = 3;  // reach toward vertical path 1
    lengths[make_edge(id(1, 1), id(2, 1))] = 2;  // perimeter edge
    Wall w = minorkit::build_wall(5, lengths);
    CHECK(w.base.vertex_count() == 48 + 8);

    auto per = minorkit::perimeter_cycle(w);
    CHECK(per.size() == 30 + 2);

    auto cp = minorkit::canonical_partition(w);
    CHECK(cp.internal_bags.at({2, 2}).size() == 2 + 2 + 1 + 3);
    CHECK(cp.internal_bags.at({2, 3}).size() == 2);
    CHECK(cp.internal_bags.at({3, 2}).size() == 2);
    check_partition_shape(cp, w.base);

    // Subdivision interiors of a bag's stubs must keep the bag connected.
    for (const auto& [key, bag] : cp.internal_bags)
        CHECK(minorkit::is_connected_set(w.base, bag));
}

TEST_CASE("tilts are walls with identical interiors") {
    Wall w1 = minorkit::build_elementary_wall(5);
    auto id = [&](int x, int y) { return w1.vertex_at(x, y); };

    // Host graph: the wall plus two extra vertices giving parallel routes to
    // two perimeter edges.
    Edge p1 = make_edge(id(4, 1), id(5, 1));
    Edge p2 = make_edge(id(6, 1), id(7, 1));
    Graph host = w1.base;
    int x1 = host.add_vertex();
    host.add_edge(p1.first, x1);
    host.add_edge(x1, p1.second);
    int x2 = host.add_vertex();
    host.add_edge(p2.first, x2);
    host.add_edge(x2, p2.second);

    Wall w2 = minorkit::build_wall(5, {{p1, 1}});
    w2.host[48] = x1;
    Wall w3 = minorkit::build_wall(5, {{p2, 1}});
    w3.host[48] = x2;

    CHECK(minorkit::is_tilt(w1, w1));
    CHECK(minorkit::is_tilt(w1, w2));
    CHECK(minorkit::is_tilt(w2, w1));
    CHECK(minorkit::is_tilt(w2, w3));
    CHECK(minorkit::is_tilt(w1, w3));

    CHECK_FALSE(minorkit::is_tilt(w1, minorkit::central_subwall(w1, 3)));

    // Rerouting an interior edge changes the interior.
    Edge inner = make_edge(id(5, 2), id(6, 2));
    Graph host2 = w1.base;
    int x3 = host2.add_vertex();
    host2.add_edge(inner.first, x3);
    host2.add_edge(x3, inner.second);
    Wall w4 = minorkit::build_wall(5, {{inner, 1}});
    w4.host[48] = x3;
    CHECK_FALSE(minorkit::is_tilt(w1, w4));
}

TEST_CASE("extend partition absorbs compass vertices") {
    Wall w = minorkit::build_elementary_wall(5);
    auto cp = minorkit::canonical_partition(w);

    auto same = minorkit::extend_partition(cp, w.base, w);
    CHECK(same.internal_bags == cp.internal_bags);
    CHECK(same.external_bag == cp.external_bag);

    // A pendant vertex on an internal bag joins that bag.
    Graph compass = w.base;
    int bag_vertex = cp.internal_bags.at({2, 2}).front();
    int pend = compass.add_vertex();
    compass.add_edge(bag_vertex, pend);
    auto ext = minorkit::extend_partition(cp, compass, w);
    CHECK(ext.internal_bags.at({2, 2}).size() == 3);
    CHECK(ext.external_bag == cp.external_bag);
    check_partition_shape(ext, compass);

    // A vertex adjacent to two internal bags goes to the lower (i,j) index.
    Graph compass2 = w.base;
    int v22 = cp.internal_bags.at({2, 2}).front();
    int v23 = cp.internal_bags.at({2, 3}).front();
    int shared = compass2.add_vertex();
    compass2.add_edge(v22, shared);
    compass2.add_edge(v23, shared);
    auto ext2 = minorkit::extend_partition(cp, compass2, w);
    CHECK(ext2.internal_bags.at({2, 2}).size() == 3);
    CHECK(ext2.internal_bags.at({2, 3}).size() == 2);

    // A chain hanging off a bag is absorbed link by link.
    Graph compass3 = w.base;
    int c1 = compass3.add_vertex();
    int c2 = compass3.add_vertex();
    compass3.add_edge(bag_vertex, c1);
    compass3.add_edge(c1, c2);
    auto ext3 = minorkit::extend_partition(cp, compass3, w);
    CHECK(ext3.internal_bags.at({2, 2}).size() == 4);
    check_partition_shape(ext3, compass3);

    Graph disconnected = w.base;
    disconnected.add_vertex();
    CHECK_THROWS_AS(minorkit::extend_partition(cp, disconnected, w), std::invalid_argument);

    Graph missing = w.base;
    auto some_edge = w.base.edges().front();
    missing.remove_edge(some_edge.first, some_edge.second);
    int patch = missing.add_vertex();
    missing.add_edge(some_edge.first, patch);
    missing.add_edge(patch, some_edge.second);
    CHECK_THROWS_AS(minorkit::extend_partition(cp, missing, w), std::invalid_argument);
}

TEST_CASE("partition survives a planar augmentation of the wall") {
    Wall w = minorkit::build_elementary_wall(7);
    auto cp = minorkit::canonical_partition(w);
    Graph compass = w.base;
    // Hang a vertex inside a few bricks, adjacent to two adjacent brick
    // vertices; this keeps the graph planar.
    auto bs = minorkit::bricks(w);
    for (std::size_t t = 0; t < bs.size(); t += 7) {
        int nv = compass.add_vertex();
        compass.add_edge(bs[t][0], nv);
        compass.add_edge(bs[t][1], nv);
    }
    REQUIRE(minorkit::is_planar(compass));
    auto ext = minorkit::extend_partition(cp, compass, w);
    check_partition_shape(ext, compass);
}

TEST_CASE("packing subwalls") {
    SECTION("single central subwall") {
        Wall w9 = minorkit::build_elementary_wall(9);
        auto cp = minorkit::canonical_partition(w9);
        auto packed = minorkit::pack_subwalls(w9, cp, 1, 3, 1);
        REQUIRE(packed.size() == 1);
        CHECK(packed[0].r == 3);
        CHECK(packed[0].host_vertices() == minorkit::central_subwall(w9, 3).host_vertices());
    }

    SECTION("undersized walls are rejected") {
        Wall w7 = minorkit::build_elementary_wall(7);
        auto cp = minorkit::canonical_partition(w7);
        CHECK_THROWS_AS(minorkit::pack_subwalls(w7, cp, 1, 3, 1), std::invalid_argument);
        Wall w13 = minorkit::build_elementary_wall(13);
        auto cp13 = minorkit::canonical_partition(w13);
        CHECK_THROWS_AS(minorkit::pack_subwalls(w13, cp13, 2, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(minorkit::pack_subwalls(w13, cp13, 4, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(minorkit::pack_subwalls(w13, cp13, 0, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(minorkit::pack_subwalls(w13, cp13, 1, 4, 1), std::invalid_argument);
        CHECK_THROWS_AS(minorkit::pack_subwalls(w13, cp13, 1, 3, 0), std::invalid_argument);
    }

    SECTION("four bag-disjoint subwalls") {
        Wall w15 = minorkit::build_elementary_wall(15);
        auto cp = minorkit::canonical_partition(w15);
        auto packed = minorkit::pack_subwalls(w15, cp, 4, 3, 1);
        REQUIRE(packed.size() == 4);
        std::vector<std::set<int>> sets;
        for (const auto& pw : packed) {
            CHECK(pw.r == 3);
            CHECK(minorkit::is_isomorphic(pw.base, minorkit::build_elementary_wall(3).base));
            sets.push_back(pw.host_vertices());
        }
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = a + 1; b < sets.size(); ++b)
                for (int v : sets[a]) CHECK(sets[b].count(v) == 0);
        // No internal bag reaches two packed subwalls.
        for (const auto& [key, bag] : cp.internal_bags) {
            int hits = 0;
            for (const auto& s : sets) {
                bool meet = false;
                for (int v : bag)
                    if (s.count(v)) { meet = true; break; }
                if (meet) ++hits;
            }
            CHECK(hits <= 1);
        }
        // Packed subwalls avoid the first p+1 layers.
        auto ls = minorkit::layers(w15);
        for (int li = 0; li < 2; ++li) {
            std::set<int> lay(ls[static_cast<std::size_t>(li)].begin(),
                              ls[static_cast<std::size_t>(li)].end());
            for (const auto& s : sets)
                for (int v : s) CHECK(lay.count(v) == 0);
        }
    }

    SECTION("two subwalls need the per-axis height") {
        Wall w15 = minorkit::build_elementary_wall(15);
        auto cp = minorkit::canonical_partition(w15);
        auto packed = minorkit::pack_subwalls(w15, cp, 2, 3, 1);
        REQUIRE(packed.size() == 2);
        auto sa = packed[0].host_vertices();
        auto sb = packed[1].host_vertices();
        for (int v : sa) CHECK(sb.count(v) == 0);
    }
}
