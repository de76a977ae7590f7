#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "planarity.hpp"
#include "walls.hpp"

// Flatness certificates: disk paintings, renditions, cell classification,
// influence, regularity, and tilts.
//
// The disk is combinatorial throughout. A painting is the plane embedding of
// the node/cell incidence hypergraph: every cell is a vertex joined to its at
// most three rim nodes, the disk boundary is a cycle of arc edges through the
// boundary nodes, and the embedding is a rotation system whose pure-arc face
// is the outside of the disk. All side-of-circle questions (internal versus
// external cells, marginality) reduce to face reachability in that embedding,
// so validation is bit-exact and needs no geometry.

namespace minorkit {

// ---------------------------------------------------------------------------
// verdicts

struct Verdict {
    bool ok = true;
    std::string code;    // "", "painting", "axiom-1".."axiom-5", or a flatness bullet id
    std::string detail;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string code, std::string detail) {
        Verdict v;
        v.ok = false;
        v.code = std::move(code);
        v.detail = std::move(detail);
        return v;
    }
};

// ---------------------------------------------------------------------------
// paintings

struct RotationEntry {
    bool is_cell = true;
    int index = 0;  // cell id, or the node on the far end of a boundary arc

    bool operator==(const RotationEntry& o) const {
        return is_cell == o.is_cell && index == o.index;
    }
    bool operator<(const RotationEntry& o) const {
        return std::tie(is_cell, index) < std::tie(o.is_cell, o.index);
    }
};

struct PaintingCell {
    std::vector<int> rim;  // distinct node ids, in cyclic order around the cell
};

struct Painting {
    int node_count = 0;
    std::vector<int> boundary;  // nodes on the disk boundary, cyclic, >= 3
    std::vector<PaintingCell> cells;
    std::vector<std::vector<RotationEntry>> rotations;  // one cyclic list per node
};

// subgraph assigned to one cell, in host vertex ids
struct Flap {
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

struct FlatnessCertificate {
    std::vector<int> x, y;              // separation sides
    std::vector<int> pegs, corners;     // host ids
    std::vector<int> omega;             // cyclic order on the interface
    Painting painting;
    std::vector<Flap> sigma;            // one flap per painting cell
    std::vector<int> pi;                // node id -> host vertex
};

namespace detail_flat {

// incidence graph of a painting with its traced faces; node i is H-vertex i,
// cell j is H-vertex node_count + j
struct PaintingDisk {
    Graph h;
    PlanarEmbedding emb;
    std::vector<std::vector<std::pair<int, int>>> faces;  // directed edges
    std::map<std::pair<int, int>, int> face_of;           // directed edge -> face
    int outer = -1;
    int nodes = 0;

    int cell_vertex(int cell) const { return nodes + cell; }
};

inline void trace_faces(PaintingDisk& d) {
    int n = d.h.vertex_count();
    std::vector<std::map<int, int>> succ(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& rot = d.emb.rotation[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < rot.size(); ++i)
            succ[static_cast<std::size_t>(v)][rot[i]] = rot[(i + 1) % rot.size()];
    }
    d.faces.clear();
    d.face_of.clear();
    for (int u = 0; u < n; ++u)
        for (int v : d.h.neighbors(u)) {
            if (d.face_of.count({u, v})) continue;
            std::vector<std::pair<int, int>> walk;
            int a = u, b = v;
            while (!d.face_of.count({a, b})) {
                d.face_of[{a, b}] = static_cast<int>(d.faces.size());
                walk.push_back({a, b});
                int c = succ[static_cast<std::size_t>(b)].at(a);
                a = b;
                b = c;
            }
            d.faces.push_back(std::move(walk));
        }
}

// Builds the embedded incidence structure, verifying every painting
// invariant. On failure the verdict carries code "painting".
inline Verdict build_disk(const Painting& p, PaintingDisk& out) {
    auto bad = [](const std::string& detail) { return Verdict::fail("painting", detail); };

    if (p.node_count < 0) return bad("negative node count");
    if (p.boundary.size() < 3) return bad("disk boundary needs at least three nodes");
    std::set<int> bset(p.boundary.begin(), p.boundary.end());
    if (bset.size() != p.boundary.size()) return bad("repeated node on the disk boundary");
    for (int v : p.boundary)
        if (v < 0 || v >= p.node_count) return bad("boundary node out of range");

    for (const auto& cell : p.cells) {
        if (cell.rim.empty() || cell.rim.size() > 3)
            return bad("cell rim must have one, two, or three nodes");
        std::set<int> rset(cell.rim.begin(), cell.rim.end());
        if (rset.size() != cell.rim.size()) return bad("cell rim repeats a node");
        for (int v : cell.rim)
            if (v < 0 || v >= p.node_count) return bad("cell rim node out of range");
    }

    // required incidence multiset per node
    std::vector<std::set<RotationEntry>> required(static_cast<std::size_t>(p.node_count));
    for (std::size_t j = 0; j < p.cells.size(); ++j)
        for (int v : p.cells[j].rim)
            required[static_cast<std::size_t>(v)].insert({true, static_cast<int>(j)});
    for (std::size_t i = 0; i < p.boundary.size(); ++i) {
        int v = p.boundary[i];
        int prev = p.boundary[(i + p.boundary.size() - 1) % p.boundary.size()];
        int next = p.boundary[(i + 1) % p.boundary.size()];
        required[static_cast<std::size_t>(v)].insert({false, prev});
        required[static_cast<std::size_t>(v)].insert({false, next});
    }

    if (static_cast<int>(p.rotations.size()) != p.node_count)
        return bad("rotation list count differs from the node count");
    for (int v = 0; v < p.node_count; ++v) {
        std::set<RotationEntry> got(p.rotations[static_cast<std::size_t>(v)].begin(),
                                    p.rotations[static_cast<std::size_t>(v)].end());
        if (got.size() != p.rotations[static_cast<std::size_t>(v)].size())
            return bad("rotation at a node repeats an entry");
        if (got != required[static_cast<std::size_t>(v)])
            return bad("rotation at node " + std::to_string(v) +
                       " does not list exactly its incident cells and arcs");
    }

    // incidence graph
    out.nodes = p.node_count;
    out.h = Graph(p.node_count + static_cast<int>(p.cells.size()));
    for (std::size_t j = 0; j < p.cells.size(); ++j)
        for (int v : p.cells[j].rim) out.h.add_edge(v, out.cell_vertex(static_cast<int>(j)));
    for (std::size_t i = 0; i < p.boundary.size(); ++i)
        out.h.add_edge(p.boundary[i], p.boundary[(i + 1) % p.boundary.size()]);

    if (components(out.h).size() != 1) return bad("painting is not connected");

    out.emb.rotation.assign(static_cast<std::size_t>(out.h.vertex_count()), {});
    for (int v = 0; v < p.node_count; ++v)
        for (const auto& e : p.rotations[static_cast<std::size_t>(v)])
            out.emb.rotation[static_cast<std::size_t>(v)].push_back(
                e.is_cell ? out.cell_vertex(e.index) : e.index);
    for (std::size_t j = 0; j < p.cells.size(); ++j)
        out.emb.rotation[static_cast<std::size_t>(out.cell_vertex(static_cast<int>(j)))] =
            p.cells[j].rim;

    trace_faces(out);
    int euler = out.h.vertex_count() - out.h.edge_count() + static_cast<int>(out.faces.size());
    if (euler != 2) return bad("rotation system is not a plane embedding");

    // the outside of the disk is the unique face made of boundary arcs alone
    out.outer = -1;
    for (std::size_t f = 0; f < out.faces.size(); ++f) {
        if (out.faces[f].size() != p.boundary.size()) continue;
        bool pure = true;
        for (auto [a, b] : out.faces[f])
            if (a >= p.node_count || b >= p.node_count || (!bset.count(a) || !bset.count(b)))
                pure = false;
        if (pure) {
            out.outer = static_cast<int>(f);
            break;
        }
    }
    if (out.outer < 0) return bad("disk boundary does not bound a face of the embedding");
    return Verdict::pass();
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// true when the cyclic sequences agree up to rotation and reflection
inline bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::size_t n = a.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t shift = 0; shift < n; ++shift) {
            bool match = true;
            for (std::size_t i = 0; i < n && match; ++i) {
                std::size_t bi = dir == 0 ? (shift + i) % n : (shift + n - i) % n;
                if (a[i] != b[bi]) match = false;
            }
            if (match) return true;
        }
    }
    return false;
}

}  // namespace detail_flat

inline Verdict validate_painting(const Painting& p) {
    detail_flat::PaintingDisk disk;
    return detail_flat::build_disk(p, disk);
}

// ---------------------------------------------------------------------------
// rendition validation

// Validates a rendition of the sub-structure of `g` induced by `domain`
// (vertex ids are global). The verdict names the first violated axiom.
inline Verdict validate_rendition(const Graph& g, const std::vector<int>& domain,
                                  const std::vector<int>& omega, const Painting& painting,
                                  const std::vector<Flap>& sigma, const std::vector<int>& pi) {
    if (sigma.size() != painting.cells.size())
        throw std::invalid_argument("validate_rendition: sigma must assign every cell a flap");
    if (static_cast<int>(pi.size()) != painting.node_count)
        throw std::invalid_argument("validate_rendition: pi must map every node");

    detail_flat::PaintingDisk disk;
    Verdict pv = detail_flat::build_disk(painting, disk);
    if (!pv.ok) return pv;

    std::set<int> dom(domain.begin(), domain.end());
    for (int v : pi)
        if (v < 0 || v >= g.vertex_count() || !dom.count(v))
            return Verdict::fail("painting", "pi maps a node outside the domain");
    std::set<int> pi_values(pi.begin(), pi.end());
    if (pi_values.size() != pi.size())
        return Verdict::fail("painting", "pi is not injective");

    // axiom 1: the flaps cover exactly the induced sub-structure
    std::set<int> covered_v;
    std::set<Edge> covered_e;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        std::set<int> fv(sigma[j].vertices.begin(), sigma[j].vertices.end());
        for (int v : sigma[j].vertices) {
            if (!dom.count(v))
                return Verdict::fail("axiom-1",
                                     "flap " + std::to_string(j) + " leaves the domain");
            covered_v.insert(v);
        }
        for (const Edge& e : sigma[j].edges) {
            if (!fv.count(e.first) || !fv.count(e.second))
                return Verdict::fail("axiom-1", "flap " + std::to_string(j) +
                                                    " lists an edge without its endpoints");
            if (!g.has_edge(e.first, e.second))
                return Verdict::fail("axiom-1", "flap " + std::to_string(j) +
                                                    " lists an edge the graph does not have");
            covered_e.insert(make_edge(e.first, e.second));
        }
    }
    for (int v : domain)
        if (!covered_v.count(v))
            return Verdict::fail("axiom-1", "vertex " + std::to_string(v) + " is uncovered");
    for (int u : domain)
        for (int v : g.neighbors(u)) {
            if (u > v || !dom.count(v)) continue;
            if (!covered_e.count(make_edge(u, v)))
                return Verdict::fail("axiom-1", "edge " + std::to_string(u) + "-" +
                                                    std::to_string(v) + " is uncovered");
        }

    // axiom 2: flaps are pairwise edge-disjoint
    std::map<Edge, int> edge_owner;
    for (std::size_t j = 0; j < sigma.size(); ++j)
        for (const Edge& e : sigma[j].edges) {
            Edge key = make_edge(e.first, e.second);
            auto it = edge_owner.find(key);
            if (it != edge_owner.end() && it->second != static_cast<int>(j))
                return Verdict::fail("axiom-2", "edge " + std::to_string(key.first) + "-" +
                                                    std::to_string(key.second) +
                                                    " belongs to flaps " +
                                                    std::to_string(it->second) + " and " +
                                                    std::to_string(j));
            edge_owner[key] = static_cast<int>(j);
        }

    // axiom 3: the images of a cell's rim lie in its flap
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        std::set<int> fv(sigma[j].vertices.begin(), sigma[j].vertices.end());
        for (int node : painting.cells[j].rim)
            if (!fv.count(pi[static_cast<std::size_t>(node)]))
                return Verdict::fail("axiom-3", "flap " + std::to_string(j) +
                                                    " misses the image of rim node " +
                                                    std::to_string(node));
    }

    // axiom 4: flaps share vertices only through rim images
    std::map<int, int> node_of;  // host vertex -> node
    for (std::size_t i = 0; i < pi.size(); ++i) node_of[pi[i]] = static_cast<int>(i);
    std::map<int, std::vector<int>> owners;
    for (std::size_t j = 0; j < sigma.size(); ++j)
        for (int v : sigma[j].vertices) owners[v].push_back(static_cast<int>(j));
    for (const auto& [v, cells] : owners) {
        if (cells.size() < 2) continue;
        auto nit = node_of.find(v);
        if (nit == node_of.end())
            return Verdict::fail("axiom-4", "vertex " + std::to_string(v) +
                                                " is shared but is no node image");
        for (int j : cells) {
            const auto& rim = painting.cells[static_cast<std::size_t>(j)].rim;
            if (std::find(rim.begin(), rim.end(), nit->second) == rim.end())
                return Verdict::fail("axiom-4", "vertex " + std::to_string(v) +
                                                    " is shared with flap " + std::to_string(j) +
                                                    " away from its rim");
        }
    }

    // axiom 5: boundary node images are the interface, in its cyclic order
    std::vector<int> bd_images;
    for (int node : painting.boundary) bd_images.push_back(pi[static_cast<std::size_t>(node)]);
    if (detail_flat::sorted_unique(bd_images) != detail_flat::sorted_unique(omega))
        return Verdict::fail("axiom-5", "boundary node images differ from the interface set");
    if (!detail_flat::cyclic_equal(bd_images, omega))
        return Verdict::fail("axiom-5", "boundary order disagrees with the interface order");

    return Verdict::pass();
}

inline Verdict validate_rendition(const Graph& gY, const std::vector<int>& omega,
                                  const Painting& painting, const std::vector<Flap>& sigma,
                                  const std::vector<int>& pi) {
    return validate_rendition(gY, all_vertices(gY), omega, painting, sigma, pi);
}

// ---------------------------------------------------------------------------
// flatness validation

inline Verdict validate_flatness(const Graph& g, const Wall& w, const FlatnessCertificate& cert) {
    std::set<int> xs(cert.x.begin(), cert.x.end());
    std::set<int> ys(cert.y.begin(), cert.y.end());

    for (int v : cert.x)
        if (v < 0 || v >= g.vertex_count())
            return Verdict::fail("separation", "X contains a vertex outside the graph");
    for (int v : cert.y)
        if (v < 0 || v >= g.vertex_count())
            return Verdict::fail("separation", "Y contains a vertex outside the graph");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!xs.count(v) && !ys.count(v))
            return Verdict::fail("separation", "vertex " + std::to_string(v) +
                                                   " is on neither separation side");
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!xs.count(u) || ys.count(u)) continue;  // u in X \ Y
        for (int v : g.neighbors(u))
            if (ys.count(v) && !xs.count(v))
                return Verdict::fail("separation", "edge " + std::to_string(u) + "-" +
                                                       std::to_string(v) +
                                                       " crosses the separation");
    }

    for (int v : w.host_vertices())
        if (!ys.count(v))
            return Verdict::fail("wall-cover", "wall vertex " + std::to_string(v) +
                                                   " is outside Y");

    std::vector<int> host_pegs = w.to_host(pegs(w));
    std::vector<int> host_corners = w.to_host(corners(w));
    if (detail_flat::sorted_unique(cert.pegs) != detail_flat::sorted_unique(host_pegs) ||
        detail_flat::sorted_unique(cert.corners) != detail_flat::sorted_unique(host_corners))
        return Verdict::fail("pegs", "pegs or corners differ from the wall's choice");

    std::vector<int> interface;
    for (int v : cert.x)
        if (ys.count(v)) interface.push_back(v);
    interface = detail_flat::sorted_unique(interface);
    std::vector<int> dcycle = w.to_host(perimeter_cycle(w));
    std::set<int> dset(dcycle.begin(), dcycle.end());
    for (int v : host_pegs)
        if (!std::binary_search(interface.begin(), interface.end(), v))
            return Verdict::fail("interface", "peg " + std::to_string(v) +
                                                  " is missing from the interface");
    for (int v : interface)
        if (!dset.count(v))
            return Verdict::fail("interface", "interface vertex " + std::to_string(v) +
                                                  " is off the wall perimeter");

    if (detail_flat::sorted_unique(cert.omega) != interface)
        return Verdict::fail("omega", "omega is not the interface set");
    std::vector<int> expected_order;
    std::set<int> iset(interface.begin(), interface.end());
    for (int v : dcycle)
        if (iset.count(v)) expected_order.push_back(v);
    if (!detail_flat::cyclic_equal(cert.omega, expected_order))
        return Verdict::fail("omega", "omega disagrees with the perimeter order");

    return validate_rendition(g, cert.y, cert.omega, cert.painting, cert.sigma, cert.pi);
}

// ---------------------------------------------------------------------------
// cell classification

enum class CellKind { perimetric, internal, external };

struct CellLabel {
    CellKind kind = CellKind::internal;
    bool tidy = true;
    bool marginal = false;
};

namespace detail_flat {

constexpr int kSideOn = 0, kSideIn = 1, kSideOut = 2;

struct ClassifyCore {
    PaintingDisk disk;
    std::vector<CellKind> kind;                    // per cell
    std::map<int, std::pair<int, int>> crossing;   // perimetric cell -> its two nodes
    std::map<int, std::set<int>> inner_vertices;   // perimetric cell -> interior path vertices
    std::vector<int> walk_nodes;                   // crossing nodes in circle order
    std::vector<int> walk_cells;                   // walk_cells[i] joins walk_nodes[i], [i+1]
    std::vector<int> side;                          // per incidence vertex
    std::vector<int> face_out;                      // per face: 1 outside the circle
};

inline ClassifyCore classify_core(const FlatnessCertificate& cert,
                                  const std::vector<int>& cycle) {
    ClassifyCore core;
    Verdict pv = build_disk(cert.painting, core.disk);
    if (!pv.ok)
        throw std::invalid_argument("classify: invalid painting: " + pv.detail);
    if (cert.sigma.size() != cert.painting.cells.size() ||
        static_cast<int>(cert.pi.size()) != cert.painting.node_count)
        throw std::invalid_argument("classify: certificate sigma/pi are incomplete");

    if (cycle.size() < 3) throw std::invalid_argument("classify: cycle needs >= 3 vertices");
    std::set<int> cyc_set(cycle.begin(), cycle.end());
    if (cyc_set.size() != cycle.size())
        throw std::invalid_argument("classify: cycle repeats a vertex");

    std::map<Edge, int> owner;
    for (std::size_t j = 0; j < cert.sigma.size(); ++j)
        for (const Edge& e : cert.sigma[j].edges) owner[make_edge(e.first, e.second)] = static_cast<int>(j);

    std::map<int, std::vector<Edge>> cell_cycle_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Edge e = make_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        auto it = owner.find(e);
        if (it == owner.end())
            throw std::invalid_argument("classify: cycle uses an edge outside the compass");
        cell_cycle_edges[it->second].push_back(e);
    }
    for (const auto& [cell, edges] : cell_cycle_edges)
        if (edges.size() == cycle.size())
            throw std::invalid_argument("classify: cycle is confined to a single flap");

    std::map<int, int> node_of;
    for (std::size_t i = 0; i < cert.pi.size(); ++i) node_of[cert.pi[i]] = static_cast<int>(i);

    // crossing nodes: per perimetric cell, the two endpoints of its cycle piece
    std::map<int, std::vector<int>> cells_at_node;
    for (const auto& [cell, edges] : cell_cycle_edges) {
        std::map<int, int> deg;
        for (const Edge& e : edges) {
            ++deg[e.first];
            ++deg[e.second];
        }
        std::vector<int> endpoints;
        for (const auto& [v, d] : deg) {
            if (d == 1) endpoints.push_back(v);
            else core.inner_vertices[cell].insert(v);
        }
        if (endpoints.size() != 2)
            throw std::invalid_argument(
                "classify: cycle does not cross flap " + std::to_string(cell) +
                " along a single path");
        std::pair<int, int> nodes;
        const auto& rim = cert.painting.cells[static_cast<std::size_t>(cell)].rim;
        for (int s = 0; s < 2; ++s) {
            auto nit = node_of.find(endpoints[static_cast<std::size_t>(s)]);
            if (nit == node_of.end() ||
                std::find(rim.begin(), rim.end(), nit->second) == rim.end())
                throw std::invalid_argument(
                    "classify: cycle leaves flap " + std::to_string(cell) +
                    " away from its rim");
            (s == 0 ? nodes.first : nodes.second) = nit->second;
        }
        core.crossing[cell] = nodes;
        cells_at_node[nodes.first].push_back(cell);
        cells_at_node[nodes.second].push_back(cell);
    }
    for (const auto& [node, cells] : cells_at_node)
        if (cells.size() != 2)
            throw std::invalid_argument("classify: circle is damaged at node " +
                                        std::to_string(node));

    // walk the circle: alternate crossing nodes and perimetric cells
    int first_cell = core.crossing.begin()->first;
    int start_node = core.crossing.begin()->second.first;
    int at_node = start_node, via_cell = first_cell;
    do {
        core.walk_nodes.push_back(at_node);
        core.walk_cells.push_back(via_cell);
        auto [p, q] = core.crossing.at(via_cell);
        int exit = (p == at_node) ? q : p;
        const auto& pair = cells_at_node.at(exit);
        int next_cell = (pair[0] == via_cell) ? pair[1] : pair[0];
        at_node = exit;
        via_cell = next_cell;
    } while (!(at_node == start_node && via_cell == first_cell));
    if (core.walk_cells.size() != core.crossing.size())
        throw std::invalid_argument("classify: perimetric flaps form more than one circle");

    // faces on the two sides of the circle
    std::set<Edge> circle_edges;
    for (std::size_t i = 0; i < core.walk_nodes.size(); ++i) {
        int cv = core.disk.cell_vertex(core.walk_cells[i]);
        circle_edges.insert(make_edge(core.walk_nodes[i], cv));
        circle_edges.insert(
            make_edge(core.walk_nodes[(i + 1) % core.walk_nodes.size()], cv));
    }
    core.face_out.assign(core.disk.faces.size(), 0);
    std::vector<int> stack = {core.disk.outer};
    core.face_out[static_cast<std::size_t>(core.disk.outer)] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (auto [a, b] : core.disk.faces[static_cast<std::size_t>(f)]) {
            if (circle_edges.count(make_edge(a, b))) continue;
            int g2 = core.disk.face_of.at({b, a});
            if (!core.face_out[static_cast<std::size_t>(g2)]) {
                core.face_out[static_cast<std::size_t>(g2)] = 1;
                stack.push_back(g2);
            }
        }
    }

    std::set<int> on_circle;
    for (int v : core.walk_nodes) on_circle.insert(v);
    for (int c : core.walk_cells) on_circle.insert(core.disk.cell_vertex(c));
    core.side.assign(static_cast<std::size_t>(core.disk.h.vertex_count()), kSideIn);
    for (int v = 0; v < core.disk.h.vertex_count(); ++v) {
        if (on_circle.count(v)) {
            core.side[static_cast<std::size_t>(v)] = kSideOn;
            continue;
        }
        int first = core.disk.emb.rotation[static_cast<std::size_t>(v)].front();
        int f = core.disk.face_of.at({v, first});
        core.side[static_cast<std::size_t>(v)] = core.face_out[static_cast<std::size_t>(f)]
                                                     ? kSideOut
                                                     : kSideIn;
    }

    core.kind.assign(cert.painting.cells.size(), CellKind::internal);
    for (std::size_t j = 0; j < cert.painting.cells.size(); ++j) {
        int cv = core.disk.cell_vertex(static_cast<int>(j));
        if (core.crossing.count(static_cast<int>(j)))
            core.kind[j] = CellKind::perimetric;
        else
            core.kind[j] = core.side[static_cast<std::size_t>(cv)] == kSideOut
                               ? CellKind::external
                               : CellKind::internal;
    }
    return core;
}

}  // namespace detail_flat

// Labels every cell against an R-normal cycle of the compass (vertices in
// cyclic order). Tidiness is relative to the wall; marginality follows the
// literal two-point criterion on the inner piece of a perimetric cell.
inline std::vector<CellLabel> classify_cells(const Wall& w, const FlatnessCertificate& cert,
                                             const std::vector<int>& cycle) {
    detail_flat::ClassifyCore core = detail_flat::classify_core(cert, cycle);

    std::set<Edge> wall_edges = w.host_edges();
    std::vector<CellLabel> labels(cert.painting.cells.size());
    for (std::size_t j = 0; j < labels.size(); ++j) {
        labels[j].kind = core.kind[j];

        // untidy: some rim image carries two wall edges inside this one flap
        for (int node : cert.painting.cells[j].rim) {
            int x = cert.pi[static_cast<std::size_t>(node)];
            int incident = 0;
            for (const Edge& e : cert.sigma[j].edges)
                if ((e.first == x || e.second == x) &&
                    wall_edges.count(make_edge(e.first, e.second)))
                    ++incident;
            if (incident >= 2) labels[j].tidy = false;
        }

        if (labels[j].kind != CellKind::perimetric || !labels[j].tidy) continue;
        if (cert.painting.cells[j].rim.size() != 3) continue;
        auto [p, q] = core.crossing.at(static_cast<int>(j));
        int z = -1;
        for (int node : cert.painting.cells[j].rim)
            if (node != p && node != q) z = node;
        int zimg = cert.pi[static_cast<std::size_t>(z)];
        if (core.inner_vertices.count(static_cast<int>(j)) &&
            core.inner_vertices.at(static_cast<int>(j)).count(zimg))
            continue;  // the third node rides the inner path, so it stays in the closure
        labels[j].marginal =
            core.side[static_cast<std::size_t>(z)] == detail_flat::kSideOut;
    }
    return labels;
}

// Flaps whose cells are not external to the cycle, as cell indices.
inline std::vector<int> influence(const FlatnessCertificate& cert,
                                  const std::vector<int>& cycle) {
    detail_flat::ClassifyCore core = detail_flat::classify_core(cert, cycle);
    std::vector<int> out;
    for (std::size_t j = 0; j < core.kind.size(); ++j)
        if (core.kind[j] != CellKind::external) out.push_back(static_cast<int>(j));
    return out;
}

inline Graph compass(const Graph& g, const FlatnessCertificate& cert) {
    return induced_subgraph(g, cert.y);
}

// base of each flap: its vertices that are node images
inline std::vector<std::vector<int>> flap_bases(const FlatnessCertificate& cert) {
    std::set<int> images(cert.pi.begin(), cert.pi.end());
    std::vector<std::vector<int>> out(cert.sigma.size());
    for (std::size_t j = 0; j < cert.sigma.size(); ++j) {
        for (int v : cert.sigma[j].vertices)
            if (images.count(v)) out[j].push_back(v);
        std::sort(out[j].begin(), out[j].end());
    }
    return out;
}

// no cell external or marginal for the wall's own perimeter, and none untidy
inline bool is_regular(const Wall& w, const FlatnessCertificate& cert) {
    std::vector<int> dcycle = w.to_host(perimeter_cycle(w));
    for (const CellLabel& l : classify_cells(w, cert, dcycle)) {
        if (l.kind == CellKind::external || l.marginal || !l.tidy) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// trivial certificates for plane compasses

namespace detail_flat {

// directed cycle of the face equal to `cycle` in the embedding, or empty
inline std::vector<std::pair<int, int>> find_cycle_face(const Graph& g,
                                                        const PlanarEmbedding& emb,
                                                        const std::vector<int>& cycle) {
    std::vector<std::map<int, int>> succ(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < rot.size(); ++i)
            succ[static_cast<std::size_t>(v)][rot[i]] = rot[(i + 1) % rot.size()];
    }
    std::set<Edge> wanted;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        wanted.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    for (int dir = 0; dir < 2; ++dir) {
        int a = dir == 0 ? cycle[0] : cycle[1];
        int b = dir == 0 ? cycle[1] : cycle[0];
        std::vector<std::pair<int, int>> walk;
        int u = a, v = b;
        bool good = true;
        do {
            if (!wanted.count(make_edge(u, v))) {
                good = false;
                break;
            }
            walk.push_back({u, v});
            int w2 = succ[static_cast<std::size_t>(v)].at(u);
            u = v;
            v = w2;
        } while (!(u == a && v == b) && walk.size() <= wanted.size());
        if (good && walk.size() == wanted.size()) return walk;
    }
    return {};
}

}  // namespace detail_flat

// Builds the one-cell-per-edge certificate of a plane compass: every compass
// vertex becomes a node and every edge its own flap. Y is V(g) minus
// `outside`; the interface is the full wall perimeter. Requires an embedding
// of the compass with the perimeter on a face.
inline FlatnessCertificate trivial_certificate(const Graph& g, const Wall& w,
                                               const std::vector<int>& outside = {}) {
    std::set<int> out_set(outside.begin(), outside.end());
    std::vector<int> y;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!out_set.count(v)) y.push_back(v);

    Graph gy = induced_subgraph(g, y);  // local ids follow positions in y
    std::map<int, int> local;
    for (std::size_t i = 0; i < y.size(); ++i) local[y[i]] = static_cast<int>(i);

    auto emb_opt = planar_embedding(gy);
    if (!emb_opt)
        throw unsupported_error("trivial_certificate: compass is not planar");
    PlanarEmbedding emb = *emb_opt;

    std::vector<int> dcycle_host = w.to_host(perimeter_cycle(w));
    std::vector<int> dcycle;
    for (int v : dcycle_host) dcycle.push_back(local.at(v));
    auto face = detail_flat::find_cycle_face(gy, emb, dcycle);
    if (face.empty()) {
        // the embedding may have flipped a piece across a perimeter 2-cut;
        // an apex wired to every perimeter vertex pins those pieces inside
        Graph pinned = gy;
        int apex = pinned.add_vertex();
        for (int v : dcycle) pinned.add_edge(apex, v);
        if (auto emb2 = planar_embedding(pinned)) {
            emb = *emb2;
            emb.rotation.pop_back();
            for (auto& rot : emb.rotation)
                rot.erase(std::remove(rot.begin(), rot.end(), apex), rot.end());
            face = detail_flat::find_cycle_face(gy, emb, dcycle);
        }
    }
    if (face.empty())
        throw unsupported_error(
            "trivial_certificate: no embedding found with the wall perimeter on a face");

    FlatnessCertificate cert;
    cert.y = y;
    std::vector<int> interface = dcycle_host;
    std::set<int> iset(interface.begin(), interface.end());
    cert.x = outside;
    for (int v : interface) cert.x.push_back(v);
    cert.x = detail_flat::sorted_unique(cert.x);
    cert.pegs = w.to_host(pegs(w));
    cert.corners = w.to_host(corners(w));

    // interface order along the traced perimeter face
    for (auto [a, b] : face) {
        (void)b;
        if (iset.count(y[static_cast<std::size_t>(a)]))
            cert.omega.push_back(y[static_cast<std::size_t>(a)]);
    }

    Painting& p = cert.painting;
    p.node_count = static_cast<int>(y.size());
    for (auto [a, b] : face) {
        (void)b;
        p.boundary.push_back(a);
    }
    std::map<Edge, int> cell_of;
    for (const Edge& e : gy.edges()) {
        int id = static_cast<int>(p.cells.size());
        p.cells.push_back({{e.first, e.second}});
        cell_of[e] = id;
        Flap f;
        f.vertices = {y[static_cast<std::size_t>(e.first)], y[static_cast<std::size_t>(e.second)]};
        f.edges = {make_edge(f.vertices[0], f.vertices[1])};
        std::sort(f.vertices.begin(), f.vertices.end());
        cert.sigma.push_back(std::move(f));
    }
    for (int v : y) cert.pi.push_back(v);

    // rotations: embedding order, with the two arcs inserted at the outer gap
    std::map<int, int> face_next;  // on the perimeter face: a -> next
    std::map<int, int> face_prev;
    for (auto [a, b] : face) {
        face_next[a] = b;
        face_prev[b] = a;
    }
    p.rotations.assign(static_cast<std::size_t>(p.node_count), {});
    for (int v = 0; v < p.node_count; ++v) {
        const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
        auto& out = p.rotations[static_cast<std::size_t>(v)];
        if (!face_next.count(v)) {
            for (int u : rot) out.push_back({true, cell_of.at(make_edge(v, u))});
            continue;
        }
        // the outer corner at v sits between the face edges (prev -> v -> next):
        // the trace convention makes `next` follow `prev` in v's rotation
        int after = face_next.at(v);
        std::size_t start = 0;
        while (rot[start] != after) ++start;
        for (std::size_t i = 0; i < rot.size(); ++i)
            out.push_back({true, cell_of.at(make_edge(v, rot[(start + i) % rot.size()]))});
        out.push_back({false, face_next.at(v)});  // arc alongside the edge toward prev side
        out.push_back({false, face_prev.at(v)});
    }

    // the arc insertion above fixes one orientation; accept the mirror if the
    // validator prefers it
    detail_flat::PaintingDisk probe;
    if (!detail_flat::build_disk(p, probe).ok) {
        for (int v = 0; v < p.node_count; ++v) {
            if (!face_next.count(v)) continue;
            auto& out2 = p.rotations[static_cast<std::size_t>(v)];
            std::swap(out2[out2.size() - 2], out2[out2.size() - 1]);
        }
        Verdict second = detail_flat::build_disk(p, probe);
        if (!second.ok)
            throw construction_bug("trivial_certificate: painting assembly failed: " +
                                   second.detail);
    }
    return cert;
}

// ---------------------------------------------------------------------------
// tilts

// Checks the five defining conditions of a subwall tilt, given the original
// certificate, the requested subwall, and the candidate pair (wtilt, tcert).
inline Verdict validate_tilt(const Graph& g, const FlatnessCertificate& cert,
                             const Wall& wsub, const Wall& wtilt,
                             const FlatnessCertificate& tcert) {
    Verdict base = validate_flatness(g, wtilt, tcert);
    if (!base.ok) return Verdict::fail("tilt-certificate", base.code + ": " + base.detail);

    std::vector<int> dsub = wsub.to_host(perimeter_cycle(wsub));
    std::vector<int> dtilt = wtilt.to_host(perimeter_cycle(wtilt));

    auto canon = [](const Flap& f) {
        std::pair<std::vector<int>, std::vector<Edge>> key;
        key.first = detail_flat::sorted_unique(f.vertices);
        key.second = f.edges;
        for (Edge& e : key.second) e = make_edge(e.first, e.second);
        std::sort(key.second.begin(), key.second.end());
        return key;
    };

    // (1) no external cells in the tilt rendition
    detail_flat::ClassifyCore tilt_core = detail_flat::classify_core(tcert, dtilt);
    for (CellKind k : tilt_core.kind)
        if (k == CellKind::external)
            return Verdict::fail("tilt-external", "tilt rendition has an external cell");

    // (2) identical interiors
    if (!is_tilt(wtilt, wsub))
        return Verdict::fail("tilt-interior", "walls do not share their interior");

    // (3) internal cells coincide, with the same flaps
    detail_flat::ClassifyCore base_core = detail_flat::classify_core(cert, dsub);
    std::set<std::pair<std::vector<int>, std::vector<Edge>>> base_internal, tilt_internal;
    for (std::size_t j = 0; j < base_core.kind.size(); ++j)
        if (base_core.kind[j] == CellKind::internal) base_internal.insert(canon(cert.sigma[j]));
    for (std::size_t j = 0; j < tilt_core.kind.size(); ++j)
        if (tilt_core.kind[j] == CellKind::internal) tilt_internal.insert(canon(tcert.sigma[j]));
    if (base_internal != tilt_internal)
        return Verdict::fail("tilt-internal", "internal flaps changed across the tilt");

    // (4) the tilt compass stays inside the influence of the subwall
    std::set<int> allowed_v;
    std::set<Edge> allowed_e;
    for (int j : influence(cert, dsub)) {
        for (int v : cert.sigma[static_cast<std::size_t>(j)].vertices) allowed_v.insert(v);
        for (const Edge& e : cert.sigma[static_cast<std::size_t>(j)].edges)
            allowed_e.insert(make_edge(e.first, e.second));
    }
    std::set<int> tys(tcert.y.begin(), tcert.y.end());
    for (int v : tcert.y)
        if (!allowed_v.count(v))
            return Verdict::fail("tilt-influence", "tilt compass vertex " + std::to_string(v) +
                                                       " escapes the influence");
    for (int u : tcert.y)
        for (int v : g.neighbors(u)) {
            if (u > v || !tys.count(v)) continue;
            if (!allowed_e.count(make_edge(u, v)))
                return Verdict::fail("tilt-influence", "tilt compass edge " + std::to_string(u) +
                                                           "-" + std::to_string(v) +
                                                           " escapes the influence");
        }

    // (5) cells absent from the original painting have small rims
    std::set<std::pair<std::vector<int>, std::vector<Edge>>> old_flaps;
    for (const Flap& f : cert.sigma) old_flaps.insert(canon(f));
    for (std::size_t j = 0; j < tcert.sigma.size(); ++j)
        if (!old_flaps.count(canon(tcert.sigma[j])) &&
            tcert.painting.cells[j].rim.size() > 2)
            return Verdict::fail("tilt-new-cells", "a new cell has three rim nodes");

    return Verdict::pass();
}

// Restriction tilt for plane compasses: keeps the subwall itself, restricts
// the rendition to the non-external cells, and rebuilds the disk with the
// crossing nodes as its boundary. Needs every cell the subwall perimeter
// crosses to have a two-node rim (one-cell-per-edge certificates always
// qualify); richer perimetric cells would require the general rerouting
// construction, which is out of scope here.
inline FlatnessCertificate compute_tilt(const Graph& g, const FlatnessCertificate& cert,
                                        const Wall& wsub) {
    std::vector<int> cycle = wsub.to_host(perimeter_cycle(wsub));
    detail_flat::ClassifyCore core = detail_flat::classify_core(cert, cycle);

    for (const auto& [cell, nodes] : core.crossing) {
        (void)nodes;
        if (cert.painting.cells[static_cast<std::size_t>(cell)].rim.size() > 2)
            throw unsupported_error(
                "compute_tilt: the subwall perimeter crosses a three-node cell");
    }

    std::vector<int> kept;  // old cell ids, original order
    std::vector<int> new_id(cert.painting.cells.size(), -1);
    for (std::size_t j = 0; j < core.kind.size(); ++j)
        if (core.kind[j] != CellKind::external) {
            new_id[j] = static_cast<int>(kept.size());
            kept.push_back(static_cast<int>(j));
        }

    // surviving nodes: rims of kept cells
    std::vector<int> node_map(static_cast<std::size_t>(cert.painting.node_count), -1);
    std::vector<int> kept_nodes;
    for (int j : kept)
        for (int v : cert.painting.cells[static_cast<std::size_t>(j)].rim)
            if (node_map[static_cast<std::size_t>(v)] < 0) {
                node_map[static_cast<std::size_t>(v)] = 0;  // mark
                kept_nodes.push_back(v);
            }
    std::sort(kept_nodes.begin(), kept_nodes.end());
    for (std::size_t i = 0; i < kept_nodes.size(); ++i)
        node_map[static_cast<std::size_t>(kept_nodes[i])] = static_cast<int>(i);

    FlatnessCertificate tilt;
    Painting& tp = tilt.painting;
    tp.node_count = static_cast<int>(kept_nodes.size());
    for (std::size_t i = 0; i < core.walk_nodes.size(); ++i)
        tp.boundary.push_back(node_map[static_cast<std::size_t>(core.walk_nodes[i])]);
    for (int j : kept) {
        PaintingCell cell;
        for (int v : cert.painting.cells[static_cast<std::size_t>(j)].rim)
            cell.rim.push_back(node_map[static_cast<std::size_t>(v)]);
        tp.cells.push_back(std::move(cell));
        tilt.sigma.push_back(cert.sigma[static_cast<std::size_t>(j)]);
    }
    tilt.pi.assign(kept_nodes.size(), -1);
    for (std::size_t i = 0; i < kept_nodes.size(); ++i)
        tilt.pi[i] = cert.pi[static_cast<std::size_t>(kept_nodes[i])];

    // boundary arc targets around the circle walk
    std::size_t wn = core.walk_nodes.size();
    std::map<int, std::pair<int, int>> arc_nbrs;  // old node -> (prev, next) old nodes
    std::map<int, std::pair<int, int>> flank;     // old node -> (cell before, cell after)
    for (std::size_t i = 0; i < wn; ++i) {
        int v = core.walk_nodes[i];
        arc_nbrs[v] = {core.walk_nodes[(i + wn - 1) % wn], core.walk_nodes[(i + 1) % wn]};
        flank[v] = {core.walk_cells[(i + wn - 1) % wn], core.walk_cells[i]};
    }

    tp.rotations.assign(static_cast<std::size_t>(tp.node_count), {});
    for (int old_node : kept_nodes) {
        auto& out = tp.rotations[static_cast<std::size_t>(node_map[static_cast<std::size_t>(old_node)])];
        const auto& rot = cert.painting.rotations[static_cast<std::size_t>(old_node)];
        auto entry_kept = [&](const RotationEntry& e) {
            return e.is_cell && new_id[static_cast<std::size_t>(e.index)] >= 0;
        };
        if (!arc_nbrs.count(old_node)) {
            // interior node: every incident cell survives
            for (const RotationEntry& e : rot) {
                if (!entry_kept(e))
                    throw construction_bug("compute_tilt: interior node touches a dropped cell");
                out.push_back({true, new_id[static_cast<std::size_t>(e.index)]});
            }
            continue;
        }
        // crossing node: kept entries form one cyclic run; the gap gets the arcs
        std::size_t m = rot.size();
        std::size_t start = m;
        for (std::size_t i = 0; i < m; ++i)
            if (entry_kept(rot[i]) && !entry_kept(rot[(i + m - 1) % m])) {
                if (start != m)
                    throw construction_bug("compute_tilt: kept cells split at a crossing node");
                start = i;
            }
        auto [cell_before, cell_after] = flank.at(old_node);
        auto [arc_prev, arc_next] = arc_nbrs.at(old_node);
        if (start == m) {
            // nothing was dropped here, so the circle only pinches this node:
            // the unique corner facing outward sits between the two circle
            // cells, and the run opens there
            for (std::size_t i = 0; i < m; ++i) {
                if (!rot[i].is_cell || !rot[(i + 1) % m].is_cell)
                    throw construction_bug("compute_tilt: stray arc entry at a crossing node");
                int corner_to = core.disk.cell_vertex(rot[(i + 1) % m].index);
                int f = core.disk.face_of.at({old_node, corner_to});
                if (core.face_out[static_cast<std::size_t>(f)]) {
                    if (start != m)
                        throw construction_bug("compute_tilt: two outward corners at a node");
                    start = (i + 1) % m;
                }
            }
            if (start == m)
                throw construction_bug("compute_tilt: no outward corner at a crossing node");
        }
        std::vector<RotationEntry> run;
        for (std::size_t i = 0; i < m; ++i) {
            const RotationEntry& e = rot[(start + i) % m];
            if (!entry_kept(e)) break;
            run.push_back({true, new_id[static_cast<std::size_t>(e.index)]});
        }
        // the run must start and end at the two circle cells
        int first_old = kept[static_cast<std::size_t>(run.front().index)];
        int last_old = kept[static_cast<std::size_t>(run.back().index)];
        if (!((first_old == cell_before && last_old == cell_after) ||
              (first_old == cell_after && last_old == cell_before)))
            throw construction_bug("compute_tilt: circle cells do not flank the kept run");
        bool forward = (last_old == cell_after);
        out = run;
        if (forward) {
            out.push_back({false, node_map[static_cast<std::size_t>(arc_next)]});
            out.push_back({false, node_map[static_cast<std::size_t>(arc_prev)]});
        } else {
            out.push_back({false, node_map[static_cast<std::size_t>(arc_prev)]});
            out.push_back({false, node_map[static_cast<std::size_t>(arc_next)]});
        }
    }

    // separation: the new compass is the influence, met at the crossing images
    std::set<int> yset;
    for (const Flap& f : tilt.sigma)
        for (int v : f.vertices) yset.insert(v);
    tilt.y.assign(yset.begin(), yset.end());
    std::set<int> interface;
    for (int v : core.walk_nodes) interface.insert(cert.pi[static_cast<std::size_t>(v)]);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!yset.count(v)) tilt.x.push_back(v);
    for (int v : interface) tilt.x.push_back(v);
    tilt.x = detail_flat::sorted_unique(tilt.x);

    // an edge of the new compass not covered by a kept flap would need the
    // general construction
    std::set<Edge> covered;
    for (const Flap& f : tilt.sigma)
        for (const Edge& e : f.edges) covered.insert(make_edge(e.first, e.second));
    for (int u : tilt.y)
        for (int v : g.neighbors(u)) {
            if (u > v || !yset.count(v)) continue;
            if (!covered.count(make_edge(u, v)))
                throw unsupported_error(
                    "compute_tilt: an external flap joins two interface vertices");
        }

    tilt.pegs = wsub.to_host(pegs(wsub));
    tilt.corners = wsub.to_host(corners(wsub));
    for (int v : cycle)
        if (interface.count(v)) tilt.omega.push_back(v);

    Verdict check = validate_flatness(g, wsub, tilt);
    if (!check.ok)
        throw construction_bug("compute_tilt: assembled certificate fails validation (" +
                               check.code + ": " + check.detail + ")");
    return tilt;
}

}  // namespace minorkit
