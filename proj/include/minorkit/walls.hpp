#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace minorkit {

// A wall is kept as a template (the branch-vertex skeleton on grid
// coordinates) plus a subdivision length per template edge. The realized
// graph lives in `base`; template vertices occupy ids [0, template_count),
// subdivision vertices follow. `host` maps base ids into the graph the wall
// is a subgraph of (identity for standalone walls).
struct Wall {
    int r = 0;
    Graph base;
    int template_count = 0;
    std::vector<std::pair<int, int>> coord;          // template id -> (x, y)
    std::map<std::pair<int, int>, int> at;           // (x, y) -> template id
    std::map<Edge, int> subdiv;                      // template edge -> length > 0
    std::map<Edge, std::vector<int>> interior_of;    // ordered from smaller endpoint id
    std::vector<int> host;                           // base id -> host id

    bool has_vertex_at(int x, int y) const { return at.count({x, y}) > 0; }

    int vertex_at(int x, int y) const {
        auto it = at.find({x, y});
        if (it == at.end())
            throw construction_bug("wall template vertex missing");
        return it->second;
    }

    // Base-id walk along consecutive template coordinates, expanding each
    // template edge through its subdivision interior.
    std::vector<int> expand(const std::vector<std::pair<int, int>>& walk) const {
        std::vector<int> out;
        if (walk.empty()) return out;
        out.push_back(vertex_at(walk[0].first, walk[0].second));
        for (std::size_t s = 1; s < walk.size(); ++s) {
            int u = vertex_at(walk[s - 1].first, walk[s - 1].second);
            int v = vertex_at(walk[s].first, walk[s].second);
            Edge key = make_edge(u, v);
            auto it = interior_of.find(key);
            if (it != interior_of.end()) {
                if (u == key.first) {
                    for (int w : it->second) out.push_back(w);
                } else {
                    for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
                        out.push_back(*rit);
                }
            }
            out.push_back(v);
        }
        return out;
    }

    std::vector<int> to_host(const std::vector<int>& base_ids) const {
        std::vector<int> out;
        out.reserve(base_ids.size());
        for (int b : base_ids) out.push_back(host.at(static_cast<std::size_t>(b)));
        return out;
    }

    std::set<int> host_vertices() const {
        return std::set<int>(host.begin(), host.end());
    }

    std::set<Edge> host_edges() const {
        std::set<Edge> out;
        for (const Edge& e : base.edges())
            out.insert(make_edge(host[static_cast<std::size_t>(e.first)],
                                 host[static_cast<std::size_t>(e.second)]));
        return out;
    }
};

namespace detail_wall {

// Template coordinate walk of the i'-th vertical path: starts at (i,1) with
// i = 2i'-1, jogs between columns i and i+1 at every interior row, ends at
// (i+1,r).
inline std::vector<std::pair<int, int>> vertical_path_coords(int r, int ip) {
    int i = 2 * ip - 1;
    std::vector<std::pair<int, int>> walk;
    walk.push_back({i, 1});
    for (int y = 2; y <= r - 1; ++y) {
        if (y % 2 == 0) {
            walk.push_back({i, y});
            walk.push_back({i + 1, y});
        } else {
            walk.push_back({i + 1, y});
            walk.push_back({i, y});
        }
    }
    walk.push_back({i + 1, r});
    return walk;
}

inline std::vector<std::pair<int, int>> horizontal_path_coords(int r, int j) {
    std::vector<std::pair<int, int>> walk;
    for (int x = 1; x <= 2 * r; ++x) walk.push_back({x, j});
    return walk;
}

// Perimeter as a closed template walk: bottom row left to right, up the
// last vertical path, top row right to left, down the first vertical path.
inline std::vector<std::pair<int, int>> perimeter_coords(int r) {
    std::vector<std::pair<int, int>> walk;
    for (int x = 1; x <= 2 * r - 1; ++x) walk.push_back({x, 1});
    auto right = vertical_path_coords(r, r);
    for (std::size_t s = 1; s < right.size(); ++s) walk.push_back(right[s]);
    for (int x = 2 * r - 1; x >= 2; --x) walk.push_back({x, r});
    auto left = vertical_path_coords(r, 1);
    for (std::size_t s = left.size() - 1; s >= 1; --s) walk.push_back(left[s - 1]);
    walk.pop_back();  // drop repeated (1,1)
    return walk;
}

inline int odd_up(int v) { return v % 2 == 1 ? v : v + 1; }

}  // namespace detail_wall

// Elementary r-wall with optional subdivision lengths: the (2r x r)-grid
// keeps the vertical edge {(x,y),(x,y+1)} iff x+y is even; the two grid
// corners (2r,1) and (1,r) end up with degree one and are dropped.
inline Wall build_wall(int r, const std::map<Edge, int>& lengths = {}) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("wall height must be an odd integer >= 3");
    Wall w;
    w.r = r;
    for (int y = 1; y <= r; ++y) {
        for (int x = 1; x <= 2 * r; ++x) {
            if ((x == 2 * r && y == 1) || (x == 1 && y == r)) continue;
            int id = w.base.add_vertex();
            w.coord.push_back({x, y});
            w.at[{x, y}] = id;
        }
    }
    w.template_count = w.base.vertex_count();
    std::vector<Edge> template_edges;
    for (int y = 1; y <= r; ++y)
        for (int x = 1; x < 2 * r; ++x)
            if (w.has_vertex_at(x, y) && w.has_vertex_at(x + 1, y))
                template_edges.push_back(make_edge(w.vertex_at(x, y), w.vertex_at(x + 1, y)));
    for (int y = 1; y < r; ++y)
        for (int x = 1; x <= 2 * r; ++x)
            if ((x + y) % 2 == 0 && w.has_vertex_at(x, y) && w.has_vertex_at(x, y + 1))
                template_edges.push_back(make_edge(w.vertex_at(x, y), w.vertex_at(x, y + 1)));
    std::set<Edge> known(template_edges.begin(), template_edges.end());
    for (const auto& [e, len] : lengths) {
        if (!known.count(e))
            throw std::invalid_argument("subdivision length given for a non-edge of the wall template");
        if (len < 1)
            throw std::invalid_argument("subdivision length must be positive");
    }
    for (const Edge& e : template_edges) {
        auto it = lengths.find(e);
        int len = it == lengths.end() ? 0 : it->second;
        if (len == 0) {
            w.base.add_edge(e.first, e.second);
        } else {
            std::vector<int> inner;
            int prev = e.first;
            for (int s = 0; s < len; ++s) {
                int nv = w.base.add_vertex();
                inner.push_back(nv);
                w.base.add_edge(prev, nv);
                prev = nv;
            }
            w.base.add_edge(prev, e.second);
            w.subdiv[e] = len;
            w.interior_of[e] = inner;
        }
    }
    w.host.resize(static_cast<std::size_t>(w.base.vertex_count()));
    for (int v = 0; v < w.base.vertex_count(); ++v) w.host[static_cast<std::size_t>(v)] = v;
    for (int v = 0; v < w.template_count; ++v) {
        int d = w.base.degree(v);
        if (d != 2 && d != 3)
            throw construction_bug("wall template vertex with degree outside {2,3}");
    }
    return w;
}

inline Wall build_elementary_wall(int r) { return build_wall(r); }

// Perimeter cycle in base ids, in walk order.
inline std::vector<int> perimeter_cycle(const Wall& w) {
    auto walk = detail_wall::perimeter_coords(w.r);
    walk.push_back(walk.front());
    std::vector<int> cyc = w.expand(walk);
    cyc.pop_back();
    return cyc;
}

inline std::set<int> perimeter_host_set(const Wall& w) {
    auto cyc = perimeter_cycle(w);
    auto h = w.to_host(cyc);
    return std::set<int>(h.begin(), h.end());
}

// Pegs: degree-two branch vertices, all of which sit on the perimeter.
inline std::vector<int> pegs(const Wall& w) {
    std::vector<int> out;
    for (int v = 0; v < w.template_count; ++v)
        if (w.base.degree(v) == 2) out.push_back(v);
    return out;
}

inline std::vector<int> corners(const Wall& w) {
    return {w.vertex_at(1, 1), w.vertex_at(2, w.r), w.vertex_at(2 * w.r - 1, 1),
            w.vertex_at(2 * w.r, w.r)};
}

// Brick cycles (finite hexagonal faces) in base ids. Brick (column c, row
// gap y) sits between the consecutive verticals x1 and x1+2 of that gap.
inline std::vector<std::vector<int>> bricks(const Wall& w) {
    std::vector<std::vector<int>> out;
    for (int y = 1; y < w.r; ++y) {
        int x1 = (y % 2 == 1) ? 1 : 2;
        for (; x1 + 2 <= 2 * w.r; x1 += 2) {
            int x2 = x1 + 2;
            std::vector<std::pair<int, int>> walk = {{x1, y},     {x1 + 1, y}, {x2, y},
                                                     {x2, y + 1}, {x1 + 1, y + 1}, {x1, y + 1},
                                                     {x1, y}};
            bool ok = true;
            for (auto& c : walk)
                if (!w.has_vertex_at(c.first, c.second)) ok = false;
            if (!ok) continue;
            auto cyc = w.expand(walk);
            cyc.pop_back();
            out.push_back(cyc);
        }
    }
    return out;
}

// Subwall spanning vertical paths [i0, i0+x-1] and rows [j0, j0+x-1]. For
// even j0 the sub-template is reflected horizontally so that its own rows
// keep the wall jog parity; either way the image is an exact x-wall
// subgraph whose vertical and horizontal paths are subpaths of the host's.
inline Wall subwall(const Wall& w, int i0, int j0, int x) {
    if (x < 3 || x % 2 == 0) throw std::invalid_argument("subwall height must be odd and >= 3");
    if (i0 < 1 || j0 < 1 || i0 + x - 1 > w.r || j0 + x - 1 > w.r)
        throw std::invalid_argument("subwall position out of range");
    const int c0 = 2 * i0 - 1;
    const bool reflect = (j0 % 2 == 0);
    auto to_parent = [&](int xl, int yl) -> std::pair<int, int> {
        int X = reflect ? (c0 - 1) + (2 * x + 1 - xl) : (c0 - 1) + xl;
        int Y = j0 - 1 + yl;
        return {X, Y};
    };
    // Inherit subdivision lengths for every sub-template edge from the
    // corresponding parent template edge.
    Wall probe = build_wall(x);
    std::map<Edge, int> lengths;
    std::map<Edge, Edge> parent_edge;
    for (const Edge& e : probe.base.edges()) {
        if (e.first >= probe.template_count || e.second >= probe.template_count) continue;
        auto ca = probe.coord[static_cast<std::size_t>(e.first)];
        auto cb = probe.coord[static_cast<std::size_t>(e.second)];
        auto pa = to_parent(ca.first, ca.second);
        auto pb = to_parent(cb.first, cb.second);
        Edge pe = make_edge(w.vertex_at(pa.first, pa.second), w.vertex_at(pb.first, pb.second));
        parent_edge[e] = pe;
        auto it = w.subdiv.find(pe);
        if (it != w.subdiv.end()) lengths[e] = it->second;
    }
    Wall sub = build_wall(x, lengths);
    sub.host.assign(static_cast<std::size_t>(sub.base.vertex_count()), -1);
    for (int v = 0; v < sub.template_count; ++v) {
        auto c = sub.coord[static_cast<std::size_t>(v)];
        auto p = to_parent(c.first, c.second);
        int pb = w.vertex_at(p.first, p.second);
        sub.host[static_cast<std::size_t>(v)] = w.host[static_cast<std::size_t>(pb)];
    }
    for (const auto& [e, inner] : sub.interior_of) {
        Edge pe = parent_edge.at(e);
        const auto& pinner = w.interior_of.at(pe);
        // Parent interiors run from pe.first; ours run from e.first. Match
        // the orientations through the coordinate transform.
        auto c = sub.coord[static_cast<std::size_t>(e.first)];
        auto p = to_parent(c.first, c.second);
        bool same = (w.vertex_at(p.first, p.second) == pe.first);
        for (std::size_t s = 0; s < inner.size(); ++s) {
            int pb = same ? pinner[s] : pinner[pinner.size() - 1 - s];
            sub.host[static_cast<std::size_t>(inner[s])] =
                w.host[static_cast<std::size_t>(pb)];
        }
    }
    return sub;
}

inline Wall central_subwall(const Wall& w, int q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("central subwall height must be odd and >= 3");
    if (q > w.r) throw std::invalid_argument("central subwall taller than the wall");
    int delta = (w.r - q) / 2;
    return subwall(w, delta + 1, delta + 1, q);
}

// Layers, outermost first: layer i is the perimeter of the central
// (r-2(i-1))-subwall, in host ids.
inline std::vector<std::vector<int>> layers(const Wall& w) {
    std::vector<std::vector<int>> out;
    for (int q = w.r; q >= 3; q -= 2) {
        Wall c = central_subwall(w, q);
        out.push_back(c.to_host(perimeter_cycle(c)));
    }
    return out;
}

// The two branch vertices inside the innermost layer, joined by a
// horizontal edge.
inline std::pair<int, int> central_vertices(const Wall& w) {
    Wall c = central_subwall(w, 3);
    int a = c.host[static_cast<std::size_t>(c.vertex_at(3, 2))];
    int b = c.host[static_cast<std::size_t>(c.vertex_at(4, 2))];
    return {std::min(a, b), std::max(a, b)};
}

struct WallInterior {
    std::set<int> vertices;
    std::set<Edge> edges;

    bool operator==(const WallInterior& o) const {
        return vertices == o.vertices && edges == o.edges;
    }
};

// Interior: drop the perimeter's edges, and drop perimeter vertices whose
// degree in the wall is two.
inline WallInterior wall_interior(const Wall& w) {
    WallInterior in;
    auto per_cycle = perimeter_cycle(w);
    std::set<int> per_base(per_cycle.begin(), per_cycle.end());
    std::set<Edge> per_edges;
    for (std::size_t s = 0; s < per_cycle.size(); ++s) {
        int u = per_cycle[s];
        int v = per_cycle[(s + 1) % per_cycle.size()];
        per_edges.insert(make_edge(u, v));
    }
    for (int v = 0; v < w.base.vertex_count(); ++v) {
        if (per_base.count(v) && w.base.degree(v) == 2) continue;
        in.vertices.insert(w.host[static_cast<std::size_t>(v)]);
    }
    for (const Edge& e : w.base.edges()) {
        if (per_edges.count(e)) continue;
        in.edges.insert(make_edge(w.host[static_cast<std::size_t>(e.first)],
                                  w.host[static_cast<std::size_t>(e.second)]));
    }
    return in;
}

// Two walls of a common host are tilts when their interiors coincide.
inline bool is_tilt(const Wall& a, const Wall& b) {
    return wall_interior(a) == wall_interior(b);
}

struct CanonicalPartition {
    std::map<std::pair<int, int>, std::vector<int>> internal_bags;  // (i,j) -> host ids
    std::vector<int> external_bag;                                  // host ids

    std::vector<const std::vector<int>*> all_bags() const {
        std::vector<const std::vector<int>*> out;
        for (const auto& [key, bag] : internal_bags) out.push_back(&bag);
        out.push_back(&external_bag);
        return out;
    }
};

// Internal bag (i,j): the crossing edge of vertical path i and horizontal
// path j, the stub of the vertical path reaching toward the next row (up
// for even i, down for odd i), and the stub of the row reaching left toward
// vertical path i-1. Both stubs stop one vertex short, so in an elementary
// wall each internal bag is exactly its crossing edge.
inline CanonicalPartition canonical_partition(const Wall& w) {
    CanonicalPartition cp;
    const int r = w.r;
    std::set<int> used;
    for (int i = 2; i <= r - 1; ++i) {
        for (int j = 2; j <= r - 1; ++j) {
            std::set<int> bag_base;
            int xl = 2 * i - 1;
            int xr = 2 * i;
            auto cross = w.expand({{xl, j}, {xr, j}});
            bag_base.insert(cross.begin(), cross.end());
            // Vertical stub: interiors of the climbing edge toward row j+1
            // (even i) or row j-1 (odd i).
            int target_row = (i % 2 == 0) ? j + 1 : j - 1;
            int ylo = std::min(j, target_row);
            int climb_col = ((xl + ylo) % 2 == 0) ? xl : xr;
            Edge ve = make_edge(w.vertex_at(climb_col, ylo), w.vertex_at(climb_col, ylo + 1));
            auto vit = w.interior_of.find(ve);
            if (vit != w.interior_of.end())
                bag_base.insert(vit->second.begin(), vit->second.end());
            // Horizontal stub: interiors of the row edge toward vertical
            // path i-1.
            Edge he = make_edge(w.vertex_at(xl - 1, j), w.vertex_at(xl, j));
            auto hit = w.interior_of.find(he);
            if (hit != w.interior_of.end())
                bag_base.insert(hit->second.begin(), hit->second.end());
            std::vector<int> bag;
            for (int b : bag_base) bag.push_back(w.host[static_cast<std::size_t>(b)]);
            std::sort(bag.begin(), bag.end());
            cp.internal_bags[{i, j}] = bag;
            used.insert(bag_base.begin(), bag_base.end());
        }
    }
    for (int v = 0; v < w.base.vertex_count(); ++v)
        if (!used.count(v)) cp.external_bag.push_back(w.host[static_cast<std::size_t>(v)]);
    std::sort(cp.external_bag.begin(), cp.external_bag.end());
    return cp;
}

// Absorb the compass vertices that are not yet in a bag: repeatedly take
// the smallest unassigned vertex adjacent to some bag and add it to the
// adjacent bag with the lowest index (internal bags in (i,j) order before
// the external bag).
inline CanonicalPartition extend_partition(const CanonicalPartition& cp, const Graph& compass,
                                           const Wall& w) {
    if (!is_connected(compass)) throw std::invalid_argument("compass must be connected");
    auto cverts = all_vertices(compass);
    std::set<int> cset(cverts.begin(), cverts.end());
    for (int hv : w.host_vertices())
        if (!cset.count(hv)) throw std::invalid_argument("compass does not contain the wall");
    for (const Edge& e : w.host_edges())
        if (!compass.has_edge(e.first, e.second))
            throw std::invalid_argument("compass does not contain the wall");

    CanonicalPartition out = cp;
    std::vector<std::vector<int>*> bags;
    for (auto& [key, bag] : out.internal_bags) bags.push_back(&bag);
    bags.push_back(&out.external_bag);
    std::map<int, int> owner;  // vertex -> bag index
    for (std::size_t bi = 0; bi < bags.size(); ++bi)
        for (int v : *bags[bi]) owner[v] = static_cast<int>(bi);
    std::set<int> pool;
    for (int v : cverts)
        if (!owner.count(v)) pool.insert(v);
    while (!pool.empty()) {
        int pick = -1;
        int bag_ix = -1;
        for (int v : pool) {
            int best = -1;
            for (int u : compass.neighbors(v)) {
                auto it = owner.find(u);
                if (it != owner.end() && (best == -1 || it->second < best)) best = it->second;
            }
            if (best != -1) {
                pick = v;
                bag_ix = best;
                break;
            }
        }
        if (pick == -1)
            throw construction_bug("absorption stalled on a connected compass");
        bags[static_cast<std::size_t>(bag_ix)]->push_back(pick);
        owner[pick] = bag_ix;
        pool.erase(pick);
    }
    for (auto* bag : bags) std::sort(bag->begin(), bag->end());
    return out;
}

// Pack z pairwise far-apart x-subwalls into the central part of the wall,
// leaving p+1 untouched outer layers. Slots of height x+2 are laid out in
// a ceil(sqrt(z))-column array and each contributes its central x-subwall,
// so no internal bag of the partition can reach two of them. The height
// requirement uses whole slots per axis; the cruder sqrt(z)*(x+2) estimate
// undershoots when z is not a perfect square.
inline std::vector<Wall> pack_subwalls(const Wall& w, const CanonicalPartition& cp, int z, int x,
                                       int p) {
    if (z < 1 || p < 1) throw std::invalid_argument("packing needs z >= 1 and p >= 1");
    if (x < 3 || x % 2 == 0) throw std::invalid_argument("packed subwall height must be odd and >= 3");
    int s_col = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(z))));
    int s_row = (z + s_col - 1) / s_col;
    int r_core = detail_wall::odd_up(std::max(s_col, s_row) * (x + 2));
    int required = r_core + 2 * (p + 1);
    if (w.r < required)
        throw std::invalid_argument("wall too short to pack the requested subwalls");
    Wall core = central_subwall(w, r_core);
    std::vector<Wall> packed;
    for (int t = 0; t < z; ++t) {
        int a = t % s_col;
        int b = t / s_col;
        Wall slot = subwall(core, 1 + a * (x + 2), 1 + b * (x + 2), x + 2);
        packed.push_back(central_subwall(slot, x));
    }
    // Verify at bag granularity: every internal bag touches at most one of
    // the packed subwalls, and no packed subwall meets the first p+1 layers.
    std::vector<std::set<int>> packed_sets;
    for (const Wall& pw : packed) packed_sets.push_back(pw.host_vertices());
    for (const auto& [key, bag] : cp.internal_bags) {
        int hits = 0;
        for (const auto& ps : packed_sets) {
            bool meet = false;
            for (int v : bag)
                if (ps.count(v)) { meet = true; break; }
            if (meet) ++hits;
        }
        if (hits > 1) throw construction_bug("packed subwalls share an internal bag");
    }
    auto lys = layers(w);
    int guard = std::min<int>(p + 1, static_cast<int>(lys.size()));
    for (int li = 0; li < guard; ++li) {
        std::set<int> lay(lys[static_cast<std::size_t>(li)].begin(),
                          lys[static_cast<std::size_t>(li)].end());
        for (const auto& ps : packed_sets)
            for (int v : ps)
                if (lay.count(v)) throw construction_bug("packed subwall touches a guarded layer");
    }
    return packed;
}

}  // namespace minorkit
