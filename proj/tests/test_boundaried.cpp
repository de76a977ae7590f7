#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include <minorkit/boundaried.hpp>
#include <minorkit/boundaried_io.hpp>
#include <minorkit/flatness.hpp>
#include <minorkit/walls.hpp>

using namespace minorkit;

namespace {

BoundariedGraph make_bg(int n, std::vector<Edge> es, std::vector<int> bd) {
    BoundariedGraph b;
    b.g = Graph(n);
    for (auto [u, v] : es) b.g.add_edge(u, v);
    b.boundary = std::move(bd);
    return b;
}

BoundariedGraph random_bg(std::mt19937_64& rng, int n, int t, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<>(0, 1)(rng) < p) g.add_edge(u, v);
    std::vector<int> ids(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(static_cast<size_t>(t));
    return BoundariedGraph{g, ids};
}

// independent route to the folio: enumerate every boundaried graph on at most
// |V| vertices and keep the ones embedding topologically
Folio folio_by_enumeration(const BoundariedGraph& b, int l) {
    Folio out;
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& cand : enumerate_boundaried(static_cast<int>(b.boundary.size()),
                                                 b.g.vertex_count())) {
        if (detail(cand) > l) continue;
        if (!boundaried_topological_minor(cand, b)) continue;
        auto code = boundaried_code(cand);
        if (seen.insert(code).second) {
            out.members.push_back(cand);
            out.codes.push_back(code);
        }
    }
    std::sort(out.codes.begin(), out.codes.end());
    return out;
}

// minor steps that leave the boundary-induced subgraph untouched: interior
// deletion, deletion of an edge with an interior endpoint, interior-interior
// contraction
std::vector<BoundariedGraph> faithful_steps(const BoundariedGraph& cur) {
    std::vector<BoundariedGraph> nexts;
    for (int v = 0; v < cur.g.vertex_count(); ++v)
        if (!on_boundary(cur, v)) nexts.push_back(remove_interior_vertex(cur, v));
    for (auto [u, v] : cur.g.edges()) {
        bool ub = on_boundary(cur, u), vb = on_boundary(cur, v);
        if (!(ub && vb)) nexts.push_back(remove_boundaried_edge(cur, u, v));
        if (!ub && !vb) nexts.push_back(contract_boundaried_edge(cur, u, v));
    }
    return nexts;
}

struct PendantWall {
    Wall w;
    Graph full;   // wall plus pendant plus apex
    Graph sub;    // apex removed
    int pendant;
    int apex;
    FlatnessCertificate cert;
};

// 5-wall with a pendant hung on a vertex whose bricks are all internal and an
// apex seeing only the pendant; the wall stays flat once the apex is removed
PendantWall pendant_wall() {
    PendantWall fx;
    fx.w = build_wall(5);
    auto internals = internal_bricks(fx.w);
    std::set<std::vector<int>> iset;
    for (auto c : internals) {
        std::sort(c.begin(), c.end());
        iset.insert(c);
    }
    int anchor = -1;
    std::map<int, std::pair<int, int>> tally;
    for (const auto& c : bricks(fx.w)) {
        auto host = fx.w.to_host(c);
        auto s = host;
        std::sort(s.begin(), s.end());
        bool internal = iset.count(s) > 0;
        for (int v : host) {
            tally[v].first++;
            if (internal) tally[v].second++;
        }
    }
    for (auto& [v, te] : tally)
        if (te.first >= 2 && te.first == te.second) {
            anchor = v;
            break;
        }
    REQUIRE(anchor == 23);
    fx.full = fx.w.base;
    fx.pendant = fx.full.add_vertex();
    fx.full.add_edge(anchor, fx.pendant);
    fx.apex = fx.full.add_vertex();
    fx.full.add_edge(fx.apex, fx.pendant);
    fx.sub = delete_vertex(fx.full, fx.apex);
    fx.cert = trivial_certificate(fx.sub, fx.w, {});
    REQUIRE(validate_flatness(fx.sub, fx.w, fx.cert).ok);
    return fx;
}

}  // namespace

TEST_CASE("boundaried surgery keeps labels aligned") {
    auto b = make_bg(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 3});
    REQUIRE(boundary_size(b) == 2);
    REQUIRE(detail(b) == 3);  // 3 edges, 2 interior vertices
    REQUIRE(on_boundary(b, 3));
    REQUIRE_FALSE(on_boundary(b, 1));

    auto r = remove_interior_vertex(b, 1);
    REQUIRE(r.g.vertex_count() == 3);
    REQUIRE(r.boundary == std::vector<int>{0, 2});
    REQUIRE_THROWS_AS(remove_interior_vertex(b, 0), std::invalid_argument);

    auto c = contract_boundaried_edge(b, 1, 2);
    REQUIRE(c.g.vertex_count() == 3);
    REQUIRE(c.boundary == std::vector<int>{0, 2});
    REQUIRE(c.g.has_edge(0, 1));
    REQUIRE(c.g.has_edge(1, 2));

    auto bb = make_bg(2, {{0, 1}}, {0, 1});
    REQUIRE_THROWS_AS(contract_boundaried_edge(bb, 0, 1), std::invalid_argument);

    // removing a mixed set drops the removed labels and keeps the survivors
    // in their old order
    auto s = remove_set(make_bg(5, {}, {0, 2, 4}), {2, 3});
    REQUIRE(s.g.vertex_count() == 3);
    REQUIRE(s.boundary == std::vector<int>{0, 2});
}

TEST_CASE("gluing identifies boundaries and nothing else") {
    auto k2 = make_bg(2, {{0, 1}}, {0, 1});
    Graph g = glue(k2, k2);
    REQUIRE(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 1);

    auto path = make_bg(3, {{0, 1}, {1, 2}}, {0, 2});
    Graph cyc = glue(path, path);
    REQUIRE(cyc.vertex_count() == 4);
    REQUIRE(cyc.edge_count() == 4);
    REQUIRE(is_isomorphic(cyc, cycle_graph(4)));

    // a bare boundary contributes nothing beyond the identification
    auto bare = make_bg(2, {}, {0, 1});
    auto any = make_bg(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 3});
    REQUIRE(is_isomorphic(glue(bare, any), any.g));

    REQUIRE_THROWS_AS(glue(k2, bare), std::invalid_argument);  // boundary edge mismatch
    REQUIRE_THROWS_AS(glue(k2, make_bg(1, {}, {0})), std::invalid_argument);

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_bg(rng, 5, 2, 0.5);
        auto b = random_bg(rng, 4, 2, 0.5);
        // rebuild b's boundary structure to match a's
        bool ae = a.g.has_edge(a.boundary[0], a.boundary[1]);
        if (ae) b.g.add_edge(b.boundary[0], b.boundary[1]);
        else b.g.remove_edge(b.boundary[0], b.boundary[1]);
        REQUIRE(compatible(a, b));
        Graph ab = glue(a, b);
        int shared = ae ? 1 : 0;
        REQUIRE(ab.vertex_count() == 5 + 4 - 2);
        REQUIRE(ab.edge_count() == a.g.edge_count() + b.g.edge_count() - shared);
        REQUIRE(is_isomorphic(ab, glue(b, a)));
    }
}

TEST_CASE("boundaried minors respect labels") {
    auto k2 = make_bg(2, {{0, 1}}, {0, 1});
    auto pair = make_bg(2, {}, {0, 1});
    auto path = make_bg(3, {{0, 1}, {1, 2}}, {0, 2});

    REQUIRE(boundaried_minor(k2, k2));
    REQUIRE(boundaried_minor(pair, k2));          // edge deletion
    REQUIRE(boundaried_minor(k2, path));          // contract through the interior
    REQUIRE_FALSE(boundaried_minor(k2, pair));
    REQUIRE_THROWS_AS(boundaried_minor(k2, make_bg(3, {}, {0})), std::invalid_argument);

    REQUIRE(boundaried_topological_minor(k2, path));
    REQUIRE_FALSE(boundaried_topological_minor(k2, pair));

    // a topological embedding is in particular a minor
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 30; ++trial) {
        auto host = random_bg(rng, 5, 2, 0.5);
        auto pat = random_bg(rng, 4, 2, 0.4);
        pat.boundary = {0, 1};
        host.boundary = {0, 1};
        if (boundaried_topological_minor(pat, host)) REQUIRE(boundaried_minor(pat, host));
    }
}

TEST_CASE("folio of a bare boundary vertex is itself alone") {
    auto single = make_bg(1, {}, {0});
    Folio f = folio(single, 1);
    REQUIRE(f.members.size() == 1);
    REQUIRE(boundaried_isomorphic(f.members[0], single));
}

TEST_CASE("folio of a boundaried triangle") {
    auto tri = make_bg(3, {{0, 1}, {1, 2}, {0, 2}}, {0});
    Folio f = folio(tri, 3);
    REQUIRE(f.members.size() == 9);
    std::multiset<std::array<int, 3>> got, want = {
        {1, 0, 0}, {2, 0, 0}, {2, 1, 1}, {3, 0, 0}, {3, 1, 1},
        {3, 2, 2}, {3, 1, 0}, {3, 2, 1}, {3, 3, 2}};
    for (const auto& m : f.members)
        got.insert({m.g.vertex_count(), m.g.edge_count(), m.g.degree(m.boundary[0])});
    REQUIRE(got == want);

    // every member's folio is contained in the original folio
    std::set<std::vector<std::uint8_t>> codes(f.codes.begin(), f.codes.end());
    for (const auto& m : f.members)
        for (const auto& code : folio(m, 3).codes) REQUIRE(codes.count(code) == 1);
}

TEST_CASE("folio agrees with the enumeration route") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        int t = 1 + static_cast<int>(rng() % 2);
        auto b = random_bg(rng, n, t, 0.5);
        Folio direct = folio(b, 3);
        Folio oracle = folio_by_enumeration(b, 3);
        auto sorted = direct.codes;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(sorted == oracle.codes);
    }
}

TEST_CASE("folio refuses desk-scale overruns") {
    auto single = make_bg(1, {}, {0});
    REQUIRE_THROWS_AS(folio(single, 5), resource_limit_error);
    REQUIRE_THROWS_AS(folio(single, -1), std::invalid_argument);
    REQUIRE_THROWS_AS(folio(make_bg(9, {}, {0}), 1), resource_limit_error);
    REQUIRE_THROWS_AS(enumerate_boundaried(1, 7), resource_limit_error);
}

TEST_CASE("context-bounded ordering separates and includes as the folio says") {
    auto single = make_bg(1, {}, {0});
    auto k2 = make_bg(2, {{0, 1}}, {0});
    REQUIRE(leq_h(single, single, 2, 3));
    REQUIRE(leq_h(single, k2, 2, 3));        // adding a pendant preserves everything
    REQUIRE_FALSE(leq_h(k2, single, 2, 3));  // K2 needs the pendant

    // different boundary structure is an immediate no
    REQUIRE_FALSE(leq_h(make_bg(2, {{0, 1}}, {0, 1}), make_bg(2, {}, {0, 1}), 1, 3));

    REQUIRE_THROWS_AS(leq_h(single, single, 5, 3), resource_limit_error);
    REQUIRE_THROWS_AS(leq_h(single, single, 1, 0), std::invalid_argument);

    std::mt19937_64 rng(64);
    MinorCache cache;
    int ascents = 0;
    for (int trial = 0; trial < 12; ++trial) {
        auto big = random_bg(rng, 5, 2, 0.5);
        big.boundary = {0, 1};
        auto steps = faithful_steps(big);
        if (steps.empty()) continue;
        auto small = steps[rng() % steps.size()];
        REQUIRE(compatible(small, big));
        REQUIRE(leq_h(small, big, 2, 4, 50000000, &cache));
        ++ascents;
    }
    REQUIRE(ascents >= 8);
}

TEST_CASE("ordering is transitive on sampled triples") {
    std::mt19937_64 rng(65);
    MinorCache cache;
    int checked = 0;
    while (checked < 10) {
        auto a = random_bg(rng, 3, 1, 0.5);
        auto b = random_bg(rng, 3, 1, 0.5);
        auto c = random_bg(rng, 3, 1, 0.5);
        if (leq_h(a, b, 2, 3, 50000000, &cache) && leq_h(b, c, 2, 3, 50000000, &cache)) {
            REQUIRE(leq_h(a, c, 2, 3, 50000000, &cache));
            ++checked;
        }
    }
}

TEST_CASE("representative sets have the expected class counts") {
    auto r1 = representatives(1, 1, 2, 3);
    REQUIRE(r1.members.size() == 1);

    auto r2 = representatives(2, 2, 4, 4);
    REQUIRE(r2.members.size() == 3);

    auto r3 = representatives(3, 1, 3, 3);
    REQUIRE(r3.members.size() == 8);

    MinorCache cache;
    for (size_t i = 0; i < r2.members.size(); ++i)
        for (size_t j = i + 1; j < r2.members.size(); ++j)
            REQUIRE_FALSE(equivalent_h(r2.members[i], r2.members[j], 2, 4, 200000000, &cache));

    // representatives are minimum-size members of their classes
    for (size_t i = 0; i + 1 < r2.members.size(); ++i)
        REQUIRE(r2.members[i].g.vertex_count() <= r2.members[i + 1].g.vertex_count());

    REQUIRE_THROWS_AS(representatives(4, 1, 4, 4), resource_limit_error);

    auto t1 = representative_table(1, 1, 3, 3);
    REQUIRE(t1.size() == 2);
    REQUIRE(t1[0].members.size() == 2);
    REQUIRE(t1[1].members.size() == 1);

    auto t2 = representative_table(2, 1, 3, 3);
    REQUIRE(t2.size() == 3);
    REQUIRE(t2[0].members.size() == 2);
    REQUIRE(t2[1].members.size() == 1);
    REQUIRE(t2[2].members.size() == 2);
}

TEST_CASE("characteristic of a bare boundary vertex") {
    auto table = representative_table(1, 1, 3, 3);
    auto chi = characteristic(make_bg(1, {}, {0}), 1, 1, table);
    REQUIRE(chi.keys.size() == 3);
    for (size_t i = 0; i < chi.keys.size(); ++i) {
        auto [mask, rep] = chi.keys[i];
        int want = (mask == 0) ? 0 : 1;
        REQUIRE(chi.entries[i] == want);
        // a hitting set carrying labels cannot be smaller than the label set
        if (chi.entries[i] <= chi.k)
            REQUIRE(chi.entries[i] >= __builtin_popcount(static_cast<unsigned>(mask)));
    }
    REQUIRE_THROWS_AS(characteristic(make_bg(1, {}, {0}), 5, 1, table), resource_limit_error);
    REQUIRE_THROWS_AS(characteristic(make_bg(2, {}, {0, 1}), 1, 1, table), std::invalid_argument);
}

TEST_CASE("characteristic csv round trip") {
    auto table = representative_table(1, 1, 3, 3);
    auto p3 = make_bg(3, {{0, 1}, {1, 2}}, {0});
    auto chi = characteristic(p3, 2, 1, table);
    std::string csv = characteristic_to_csv(chi, table);
    REQUIRE(csv == "I,rep_graph6,rep_boundary,entry\n.,@,0,0\n1,?,.,3\n1,@,.,1\n");
    REQUIRE(characteristic_from_csv(csv, 2, 1, 1, table) == chi);

    REQUIRE_THROWS_AS(characteristic_from_csv("bogus\n", 2, 1, 1, table), parse_error);
    REQUIRE_THROWS_AS(
        characteristic_from_csv("I,rep_graph6,rep_boundary,entry\n.,@,0,9\n", 2, 1, 1, table),
        parse_error);
}

TEST_CASE("characteristics are monotone along boundary-faithful descents") {
    auto table = representative_table(2, 1, 3, 3);
    std::mt19937_64 rng(20260816);
    int chains = 0;
    for (int trial = 0; trial < 6; ++trial) {
        BoundariedGraph g;
        g.g = Graph(6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (rng() % 100 < 45) g.g.add_edge(i, j);
        g.boundary = {0, 1};
        std::vector<BoundariedGraph> chain{g};
        while (chain.size() < 8) {
            auto nexts = faithful_steps(chain.back());
            if (nexts.empty()) break;
            chain.push_back(nexts[rng() % nexts.size()]);
        }
        std::reverse(chain.begin(), chain.end());
        ++chains;
        MinorCache cache;
        Characteristic prev = characteristic(chain[0], 1, 1, table, 200000000, &cache);
        for (size_t i = 1; i < chain.size(); ++i) {
            Characteristic cur = characteristic(chain[i], 1, 1, table, 200000000, &cache);
            REQUIRE(characteristic_leq(prev, cur));
            prev = cur;
        }
        REQUIRE(find_repeat(chain, 1, 1, table).has_value());
    }
    REQUIRE(chains == 6);
}

TEST_CASE("contracting into the boundary can raise an entry") {
    // the monotonicity guarantee needs the boundary structure left alone;
    // merging an interior vertex into the boundary breaks it
    auto table = representative_table(2, 2, 3, 3);
    auto g2 = make_bg(3, {{0, 1}, {1, 2}}, {0, 2});
    auto g1 = contract_boundaried_edge(g2, 0, 1);
    REQUIRE(boundaried_minor(g1, g2));

    auto edgeless = make_bg(2, {}, {0, 1});
    int ridx = -1;
    for (size_t r = 0; r < table[2].members.size(); ++r)
        if (boundaried_isomorphic(table[2].members[r], edgeless)) ridx = static_cast<int>(r);
    REQUIRE(ridx >= 0);

    auto c1 = characteristic(g1, 1, 2, table);
    auto c2 = characteristic(g2, 1, 2, table);
    bool found = false;
    for (size_t i = 0; i < c1.keys.size(); ++i)
        if (c1.keys[i] == std::make_pair(0, ridx)) {
            REQUIRE(c1.entries[i] == 2);
            REQUIRE(c2.entries[i] == 1);
            found = true;
        }
    REQUIRE(found);
    REQUIRE_FALSE(characteristic_leq(c1, c2));
}

TEST_CASE("repeat detection on ascending chains") {
    auto table = representative_table(2, 1, 3, 3);
    auto g = make_bg(3, {{0, 1}, {1, 2}}, {0, 2});
    std::vector<BoundariedGraph> constant{g, g, g};
    auto at = find_repeat(constant, 1, 1, table);
    REQUIRE(at.has_value());
    REQUIRE(*at == 0);

    // a chain longer than (k+2) times the key count must repeat
    auto start = make_bg(6, {{0, 2}, {2, 3}, {3, 1}, {2, 4}, {3, 5}, {4, 5}}, {0, 1});
    std::vector<BoundariedGraph> chain{start};
    while (true) {
        auto nexts = faithful_steps(chain.back());
        if (nexts.empty()) break;
        chain.push_back(nexts[0]);
    }
    std::reverse(chain.begin(), chain.end());
    size_t y = characteristic(chain[0], 1, 1, table).keys.size();
    REQUIRE(y == 6);
    while (chain.size() < 3 * y + 1) chain.push_back(chain.back());
    auto rep = find_repeat(chain, 1, 1, table);
    REQUIRE(rep.has_value());
    REQUIRE(characteristic(chain[*rep], 1, 1, table) ==
            characteristic(chain[*rep + 1], 1, 1, table));
}

TEST_CASE("boundaried and representative json round trips") {
    auto b = make_bg(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 3});
    auto back = boundaried_from_json(boundaried_to_json(b));
    REQUIRE(boundaried_code(back) == boundaried_code(b));
    REQUIRE(back.boundary == b.boundary);

    nlohmann::json bad = boundaried_to_json(b);
    bad["boundary"] = {0, 9};
    REQUIRE_THROWS_AS(boundaried_from_json(bad), parse_error);

    auto rs = representatives(2, 1, 3, 3);
    auto rs2 = repset_from_json(repset_to_json(rs));
    REQUIRE(rs2.codes == rs.codes);
    REQUIRE(rs2.h == rs.h);
    REQUIRE(rs2.size_bound == rs.size_bound);
}

TEST_CASE("augmented flaps carry apexes then the base") {
    PendantWall fx = pendant_wall();
    int jstar = -1;
    for (size_t j = 0; j < fx.cert.sigma.size(); ++j) {
        const auto& fv = fx.cert.sigma[j].vertices;
        if (std::find(fv.begin(), fv.end(), fx.pendant) != fv.end()) jstar = static_cast<int>(j);
    }
    REQUIRE(jstar >= 0);

    auto aug = augmented_flap(fx.full, fx.cert, jstar, {fx.apex});
    const auto& rim = fx.cert.painting.cells[static_cast<size_t>(jstar)].rim;
    REQUIRE(aug.boundary.size() == 1 + rim.size());

    // the apex has the largest host id, so it compacts to the last local id
    REQUIRE(aug.boundary[0] == aug.g.vertex_count() - 1);
    REQUIRE(aug.g.degree(aug.boundary[0]) == 1);  // sees only the pendant

    // default base rotation starts at the smallest host id on the rim
    std::vector<int> base_hosts;
    for (int node : rim) base_hosts.push_back(fx.cert.pi[static_cast<size_t>(node)]);
    int min_host = *std::min_element(base_hosts.begin(), base_hosts.end());
    auto local_of = [&](int host) {
        const auto& fv = fx.cert.sigma[static_cast<size_t>(jstar)].vertices;
        std::vector<int> keep(fv.begin(), fv.end());
        keep.push_back(fx.apex);
        std::sort(keep.begin(), keep.end());
        return static_cast<int>(std::lower_bound(keep.begin(), keep.end(), host) - keep.begin());
    };
    REQUIRE(aug.boundary[1] == local_of(min_host));

    int other = base_hosts[0] == min_host ? base_hosts[1] : base_hosts[0];
    auto turned = augmented_flap(fx.full, fx.cert, jstar, {fx.apex}, other);
    REQUIRE(turned.boundary[1] == local_of(other));

    REQUIRE_THROWS_AS(augmented_flap(fx.full, fx.cert, jstar, {fx.cert.y[0]}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(augmented_flap(fx.full, fx.cert, -1, {}), std::invalid_argument);
}

TEST_CASE("an apexed pendant shows up in exactly one palette") {
    PendantWall fx = pendant_wall();
    int jstar = -1;
    for (size_t j = 0; j < fx.cert.sigma.size(); ++j) {
        const auto& fv = fx.cert.sigma[j].vertices;
        if (std::find(fv.begin(), fv.end(), fx.pendant) != fv.end()) jstar = static_cast<int>(j);
    }
    auto internals = internal_bricks(fx.w);
    REQUIRE(internals.size() == 4);
    int with = -1, without = -1;
    for (size_t bi = 0; bi < internals.size(); ++bi) {
        auto infl = influence(fx.cert, internals[bi]);
        bool has = std::find(infl.begin(), infl.end(), jstar) != infl.end();
        if (has && with < 0) with = static_cast<int>(bi);
        if (!has && without < 0) without = static_cast<int>(bi);
    }
    REQUIRE(with >= 0);
    REQUIRE(without >= 0);

    // without the apex both bricks look alike; with it the pendant brick
    // gains a second folio
    auto pe = palette(fx.full, fx.cert, internals[static_cast<size_t>(with)], {}, 1);
    auto pw = palette(fx.full, fx.cert, internals[static_cast<size_t>(without)], {}, 1);
    REQUIRE(pe.size() == 1);
    REQUIRE(pe == pw);
    auto qe = palette(fx.full, fx.cert, internals[static_cast<size_t>(with)], {fx.apex}, 1);
    auto qw = palette(fx.full, fx.cert, internals[static_cast<size_t>(without)], {fx.apex}, 1);
    REQUIRE(qe.size() == 2);
    REQUIRE(qw.size() == 1);
    REQUIRE(qe != qw);

    REQUIRE(is_homogeneous(fx.full, fx.cert, fx.w, {{}}, 1));
    REQUIRE_FALSE(is_homogeneous(fx.full, fx.cert, fx.w, {{fx.apex}}, 1));
}

TEST_CASE("homogeneity survives tilting to a central subwall") {
    Wall w7 = build_wall(7);
    Graph g7 = w7.base;
    int a = g7.add_vertex();  // isolated apex keeps ids stable
    Graph gsub = delete_vertex(g7, a);
    auto cert7 = trivial_certificate(gsub, w7, {});
    REQUIRE(validate_flatness(gsub, w7, cert7).ok);

    Wall wsub = central_subwall(w7, 5);
    auto tcert = compute_tilt(gsub, cert7, wsub);
    REQUIRE(validate_tilt(gsub, cert7, wsub, wsub, tcert).ok);

    std::vector<std::vector<int>> apex_sets = {{}, {a}};
    REQUIRE(is_homogeneous(g7, cert7, w7, apex_sets, 1));
    REQUIRE(is_homogeneous(g7, tcert, wsub, apex_sets, 1));
}
