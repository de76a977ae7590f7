#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "errors.hpp"
#include "flatness.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "minor.hpp"
#include "walls.hpp"

namespace minorkit {

// ---------------------------------------------------------------------------
// boundaried graphs
//
// A t-boundaried graph is a graph together with an ordered list of t distinct
// vertices; the vertex at position i carries label i+1. Two boundaried graphs
// interact only through equal labels, so the list order is the entire
// labeling. Deleting vertices keeps the relative order of the surviving
// boundary, which is exactly the rank relabeling: the new label of v is the
// number of surviving boundary vertices with label <= label(v).

struct BoundariedGraph {
    Graph g;
    std::vector<int> boundary;  // boundary[i] carries label i+1
};

inline int boundary_size(const BoundariedGraph& b) { return static_cast<int>(b.boundary.size()); }

inline void check_boundaried(const BoundariedGraph& b, const std::string& who) {
    std::set<int> seen;
    for (int v : b.boundary) {
        if (!b.g.has_vertex(v)) throw std::invalid_argument(who + ": boundary vertex " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second) throw std::invalid_argument(who + ": duplicate boundary vertex " + std::to_string(v));
    }
}

// detail of a boundaried graph counts edges and non-boundary vertices
inline int detail(const BoundariedGraph& b) {
    return std::max(b.g.edge_count(), b.g.vertex_count() - boundary_size(b));
}

// one color class per label; interior vertices share color 0
inline std::vector<int> boundary_colors(const BoundariedGraph& b) {
    std::vector<int> colors(static_cast<size_t>(b.g.vertex_count()), 0);
    for (size_t i = 0; i < b.boundary.size(); ++i)
        colors[static_cast<size_t>(b.boundary[i])] = static_cast<int>(i) + 1;
    return colors;
}

inline std::vector<std::uint8_t> boundaried_code(const BoundariedGraph& b) {
    check_boundaried(b, "boundaried_code");
    return canonical_code(b.g, boundary_colors(b));
}

inline bool boundaried_isomorphic(const BoundariedGraph& a, const BoundariedGraph& b) {
    if (boundary_size(a) != boundary_size(b)) return false;
    return is_isomorphic_colored(a.g, boundary_colors(a), b.g, boundary_colors(b));
}

// equal boundary sizes and identical boundary-induced subgraphs under labels
inline bool compatible(const BoundariedGraph& a, const BoundariedGraph& b) {
    int t = boundary_size(a);
    if (boundary_size(b) != t) return false;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (a.g.has_edge(a.boundary[i], a.boundary[j]) != b.g.has_edge(b.boundary[i], b.boundary[j]))
                return false;
    return true;
}

// Identifies equal labels. The result has vertices 0..t-1 for the labels in
// order, then a's interior vertices in id order, then b's.
inline Graph glue(const BoundariedGraph& a, const BoundariedGraph& b) {
    check_boundaried(a, "glue");
    check_boundaried(b, "glue");
    if (!compatible(a, b)) throw std::invalid_argument("glue: incompatible boundaries");
    int t = boundary_size(a);
    std::vector<int> ma(static_cast<size_t>(a.g.vertex_count()), -1);
    std::vector<int> mb(static_cast<size_t>(b.g.vertex_count()), -1);
    for (int i = 0; i < t; ++i) {
        ma[static_cast<size_t>(a.boundary[i])] = i;
        mb[static_cast<size_t>(b.boundary[i])] = i;
    }
    int next = t;
    for (auto& x : ma)
        if (x < 0) x = next++;
    for (auto& x : mb)
        if (x < 0) x = next++;
    Graph out(next);
    for (auto [u, v] : a.g.edges()) out.add_edge(ma[static_cast<size_t>(u)], ma[static_cast<size_t>(v)]);
    for (auto [u, v] : b.g.edges()) out.add_edge(mb[static_cast<size_t>(u)], mb[static_cast<size_t>(v)]);
    return out;
}

// ---------------------------------------------------------------------------
// boundaried minor operations
//
// Legal single steps: delete an interior vertex, delete any edge, contract an
// edge with at most one boundary endpoint. The boundary endpoint survives a
// mixed contraction, so labels are never lost or merged.

inline bool on_boundary(const BoundariedGraph& b, int v) {
    return std::find(b.boundary.begin(), b.boundary.end(), v) != b.boundary.end();
}

inline BoundariedGraph remove_interior_vertex(const BoundariedGraph& b, int v) {
    if (!b.g.has_vertex(v)) throw std::invalid_argument("remove_interior_vertex: no such vertex");
    if (on_boundary(b, v)) throw std::invalid_argument("remove_interior_vertex: vertex is on the boundary");
    BoundariedGraph out;
    out.g = delete_vertex(b.g, v);
    for (int w : b.boundary) out.boundary.push_back(w > v ? w - 1 : w);
    return out;
}

inline BoundariedGraph remove_boundaried_edge(const BoundariedGraph& b, int u, int v) {
    BoundariedGraph out = b;
    if (!out.g.remove_edge(u, v)) throw std::invalid_argument("remove_boundaried_edge: no such edge");
    return out;
}

inline BoundariedGraph contract_boundaried_edge(const BoundariedGraph& b, int u, int v) {
    if (!b.g.has_edge(u, v)) throw std::invalid_argument("contract_boundaried_edge: no such edge");
    if (on_boundary(b, u) && on_boundary(b, v))
        throw std::invalid_argument("contract_boundaried_edge: both endpoints on the boundary");
    int lo = std::min(u, v), hi = std::max(u, v);
    BoundariedGraph out;
    out.g = contract_edge(b.g, u, v);
    for (int w : b.boundary) {
        int x = (w == hi) ? lo : w;
        out.boundary.push_back(x > hi ? x - 1 : x);
    }
    return out;
}

// Deletes a vertex set that may include boundary vertices; the surviving
// boundary is relabeled by rank. Used by characteristic functions, where the
// apex set is allowed to meet the boundary.
inline BoundariedGraph remove_set(const BoundariedGraph& b, const std::vector<int>& S) {
    std::set<int> drop(S.begin(), S.end());
    for (int v : drop)
        if (!b.g.has_vertex(v)) throw std::invalid_argument("remove_set: vertex " + std::to_string(v) + " out of range");
    std::vector<int> keep;
    std::vector<int> where(static_cast<size_t>(b.g.vertex_count()), -1);
    for (int v = 0; v < b.g.vertex_count(); ++v)
        if (!drop.count(v)) {
            where[static_cast<size_t>(v)] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    BoundariedGraph out;
    out.g = induced_subgraph(b.g, keep);
    for (int v : b.boundary)
        if (where[static_cast<size_t>(v)] >= 0) out.boundary.push_back(where[static_cast<size_t>(v)]);
    return out;
}

namespace detail_bnd {

inline void spend(long long* budget, const char* who) {
    if (--(*budget) < 0) throw resource_limit_error(std::string(who) + ": budget exhausted");
}

// Branch-set search with the boundary assignment forced: the host boundary
// vertex with label i always lies in the branch set of the pattern boundary
// vertex with label i, and interior branch sets never touch the host
// boundary. Only host interior vertices are branched on.
class BndMinorSearch {
public:
    BndMinorSearch(const BoundariedGraph& pattern, const BoundariedGraph& host, long long* budget)
        : p_(pattern), h_(host), budget_(budget),
          owner_(static_cast<size_t>(host.g.vertex_count()), kFree),
          part_size_(static_cast<size_t>(pattern.g.vertex_count()), 0) {
        for (size_t i = 0; i < host.boundary.size(); ++i) {
            owner_[static_cast<size_t>(host.boundary[i])] = pattern.boundary[i];
            ++part_size_[static_cast<size_t>(pattern.boundary[i])];
        }
        for (int v = 0; v < host.g.vertex_count(); ++v)
            if (owner_[static_cast<size_t>(v)] == kFree) interior_.push_back(v);
        empty_ = 0;
        for (int s : part_size_)
            if (s == 0) ++empty_;
    }

    bool run() { return place(0); }

private:
    static constexpr int kFree = -1;
    static constexpr int kDeleted = -2;

    bool place(size_t idx) {
        spend(budget_, "boundaried_minor");
        if (empty_ > static_cast<int>(interior_.size() - idx)) return false;
        if (idx == interior_.size()) return check();
        int v = interior_[idx];
        owner_[static_cast<size_t>(v)] = kDeleted;
        if (place(idx + 1)) return true;
        for (int p = 0; p < p_.g.vertex_count(); ++p) {
            owner_[static_cast<size_t>(v)] = p;
            if (++part_size_[static_cast<size_t>(p)] == 1) --empty_;
            if (place(idx + 1)) return true;
            if (--part_size_[static_cast<size_t>(p)] == 0) ++empty_;
        }
        owner_[static_cast<size_t>(v)] = kFree;
        return false;
    }

    bool check() const {
        std::vector<std::vector<int>> part(static_cast<size_t>(p_.g.vertex_count()));
        for (int v = 0; v < h_.g.vertex_count(); ++v)
            if (owner_[static_cast<size_t>(v)] >= 0) part[static_cast<size_t>(owner_[static_cast<size_t>(v)])].push_back(v);
        for (const auto& ps : part)
            if (ps.empty() || !is_connected_set(h_.g, ps)) return false;
        for (auto [a, b] : p_.g.edges()) {
            bool covered = false;
            for (int u : part[static_cast<size_t>(a)]) {
                for (int w : h_.g.neighbors(u))
                    if (owner_[static_cast<size_t>(w)] == b) {
                        covered = true;
                        break;
                    }
                if (covered) break;
            }
            if (!covered) return false;
        }
        return true;
    }

    const BoundariedGraph& p_;
    const BoundariedGraph& h_;
    long long* budget_;
    std::vector<int> owner_;
    std::vector<int> part_size_;
    std::vector<int> interior_;
    int empty_ = 0;
};

// Subdivision-image search with the boundary map forced. Pattern vertices map
// injectively into the host, pattern edges become paths that are internally
// disjoint, avoid every image, and pass through no host boundary vertex
// (boundary vertices may never be dissolved).
class BtmSearch {
public:
    BtmSearch(const BoundariedGraph& pattern, const BoundariedGraph& host, long long* budget)
        : p_(pattern), h_(host), budget_(budget),
          phi_(static_cast<size_t>(pattern.g.vertex_count()), -1),
          used_(static_cast<size_t>(host.g.vertex_count()), false),
          host_bd_(static_cast<size_t>(host.g.vertex_count()), false) {
        for (size_t i = 0; i < host.boundary.size(); ++i) {
            int pv = pattern.boundary[i], hv = host.boundary[i];
            phi_[static_cast<size_t>(pv)] = hv;
            used_[static_cast<size_t>(hv)] = true;
        }
        for (int v : host.boundary) host_bd_[static_cast<size_t>(v)] = true;
        for (int v = 0; v < pattern.g.vertex_count(); ++v)
            if (phi_[static_cast<size_t>(v)] < 0) free_.push_back(v);
        edges_ = pattern.g.edges();
    }

    bool run() {
        for (size_t i = 0; i < p_.boundary.size(); ++i)
            if (h_.g.degree(h_.boundary[i]) < p_.g.degree(p_.boundary[i])) return false;
        return assign(0);
    }

private:
    bool assign(size_t idx) {
        spend(budget_, "boundaried_topological_minor");
        if (idx == free_.size()) return route(0);
        int pv = free_[idx];
        for (int hv = 0; hv < h_.g.vertex_count(); ++hv) {
            if (used_[static_cast<size_t>(hv)] || host_bd_[static_cast<size_t>(hv)]) continue;
            if (h_.g.degree(hv) < p_.g.degree(pv)) continue;
            phi_[static_cast<size_t>(pv)] = hv;
            used_[static_cast<size_t>(hv)] = true;
            if (assign(idx + 1)) return true;
            used_[static_cast<size_t>(hv)] = false;
            phi_[static_cast<size_t>(pv)] = -1;
        }
        return false;
    }

    bool route(size_t e) {
        if (e == edges_.size()) return true;
        int from = phi_[static_cast<size_t>(edges_[e].first)];
        int to = phi_[static_cast<size_t>(edges_[e].second)];
        return dfs_path(e, from, to);
    }

    // extends the path for edge e from cur; interior vertices must be unused
    // host interior vertices
    bool dfs_path(size_t e, int cur, int to) {
        spend(budget_, "boundaried_topological_minor");
        for (int nb : h_.g.neighbors(cur)) {
            if (nb == to) {
                if (route(e + 1)) return true;
                continue;
            }
            if (used_[static_cast<size_t>(nb)] || host_bd_[static_cast<size_t>(nb)]) continue;
            used_[static_cast<size_t>(nb)] = true;
            if (dfs_path(e, nb, to)) return true;
            used_[static_cast<size_t>(nb)] = false;
        }
        return false;
    }

    const BoundariedGraph& p_;
    const BoundariedGraph& h_;
    long long* budget_;
    std::vector<int> phi_;
    std::vector<bool> used_;
    std::vector<bool> host_bd_;
    std::vector<int> free_;
    std::vector<Edge> edges_;
};

}  // namespace detail_bnd

// Boundaried minor containment. Boundary vertices are never deleted and two
// boundary vertices are never merged, so boundary sizes must agree.
inline bool boundaried_minor(const BoundariedGraph& pattern, const BoundariedGraph& host,
                             long long budget = 50000000) {
    check_boundaried(pattern, "boundaried_minor");
    check_boundaried(host, "boundaried_minor");
    if (boundary_size(pattern) != boundary_size(host))
        throw std::invalid_argument("boundaried_minor: boundary sizes differ");
    if (pattern.g.vertex_count() > host.g.vertex_count()) return false;
    if (pattern.g.edge_count() > host.g.edge_count()) return false;
    return detail_bnd::BndMinorSearch(pattern, host, &budget).run();
}

// Boundaried topological minor containment: host contains a subdivision of
// the pattern in which no boundary vertex is a subdivision point.
inline bool boundaried_topological_minor(const BoundariedGraph& pattern, const BoundariedGraph& host,
                                         long long budget = 50000000) {
    check_boundaried(pattern, "boundaried_topological_minor");
    check_boundaried(host, "boundaried_topological_minor");
    if (boundary_size(pattern) != boundary_size(host))
        throw std::invalid_argument("boundaried_topological_minor: boundary sizes differ");
    if (pattern.g.vertex_count() > host.g.vertex_count()) return false;
    if (pattern.g.edge_count() > host.g.edge_count()) return false;
    return detail_bnd::BtmSearch(pattern, host, &budget).run();
}

// Every t-boundaried graph on at most max_n vertices, one per boundaried
// isomorphism class. The boundary is always 0..t-1, which loses nothing up to
// isomorphism. Ordered by vertex count, then by first appearance.
inline std::vector<BoundariedGraph> enumerate_boundaried(int t, int max_n) {
    if (t < 0 || max_n < t) throw std::invalid_argument("enumerate_boundaried: need 0 <= t <= max_n");
    if (max_n > 6) throw resource_limit_error("enumerate_boundaried: desk budget is max_n <= 6");
    std::vector<BoundariedGraph> out;
    std::set<std::vector<std::uint8_t>> seen;
    for (int n = t; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            BoundariedGraph bg;
            bg.g = Graph(n);
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1u) bg.g.add_edge(pairs[i].first, pairs[i].second);
            for (int i = 0; i < t; ++i) bg.boundary.push_back(i);
            if (seen.insert(boundaried_code(bg)).second) out.push_back(std::move(bg));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// folios
//
// The l-folio of a boundaried graph collects, up to boundaried isomorphism,
// every boundaried graph of detail at most l obtainable from a subgraph
// containing the whole boundary by dissolving interior degree-2 vertices.

struct Folio {
    std::vector<BoundariedGraph> members;            // sorted by code
    std::vector<std::vector<std::uint8_t>> codes;    // aligned with members

    bool operator==(const Folio& o) const { return codes == o.codes; }
    bool operator!=(const Folio& o) const { return !(*this == o); }
};

namespace detail_bnd {

// Dissolves all of S at once in h; every vertex of S has degree exactly 2.
// Each component of h[S] is a path whose two outer neighbors become adjacent.
// Returns the surviving edge set, or nullopt when a component is a cycle or
// both outer neighbors coincide; such a set has no legal dissolution order.
inline std::optional<std::set<Edge>> dissolve_set(const Graph& h, const std::set<int>& S) {
    std::set<Edge> out;
    for (auto [u, v] : h.edges())
        if (!S.count(u) && !S.count(v)) out.insert(make_edge(u, v));
    std::set<int> done;
    for (int s : S) {
        if (done.count(s)) continue;
        done.insert(s);
        const auto& nb = h.neighbors(s);
        int ends[2] = {-1, -1};
        for (int d = 0; d < 2; ++d) {
            int prev = s, cur = nb[static_cast<size_t>(d)];
            while (S.count(cur)) {
                if (cur == s) return std::nullopt;  // cycle through S
                done.insert(cur);
                const auto& cn = h.neighbors(cur);
                int next = (cn[0] == prev) ? cn[1] : cn[0];
                prev = cur;
                cur = next;
            }
            ends[d] = cur;
        }
        if (ends[0] == ends[1]) return std::nullopt;  // chain pinned at one vertex
        out.insert(make_edge(ends[0], ends[1]));
    }
    return out;
}

}  // namespace detail_bnd

inline Folio folio(const BoundariedGraph& b, int l, long long budget = 50000000) {
    check_boundaried(b, "folio");
    if (l < 0) throw std::invalid_argument("folio: negative detail bound");
    if (b.g.vertex_count() > 8 || l > 4)
        throw resource_limit_error("folio: desk budget is |V| <= 8 and l <= 4");
    std::vector<int> interior;
    for (int v = 0; v < b.g.vertex_count(); ++v)
        if (!on_boundary(b, v)) interior.push_back(v);

    std::map<std::vector<std::uint8_t>, BoundariedGraph> found;
    for (std::uint32_t vmask = 0; vmask < (1u << interior.size()); ++vmask) {
        std::vector<int> keep = b.boundary;
        for (size_t i = 0; i < interior.size(); ++i)
            if (vmask >> i & 1u) keep.push_back(interior[i]);
        std::sort(keep.begin(), keep.end());
        std::vector<int> local(static_cast<size_t>(b.g.vertex_count()), -1);
        for (size_t i = 0; i < keep.size(); ++i) local[static_cast<size_t>(keep[i])] = static_cast<int>(i);

        std::vector<Edge> avail;
        for (auto [u, v] : b.g.edges())
            if (local[static_cast<size_t>(u)] >= 0 && local[static_cast<size_t>(v)] >= 0)
                avail.emplace_back(local[static_cast<size_t>(u)], local[static_cast<size_t>(v)]);

        std::vector<bool> is_bd(keep.size(), false);
        for (int v : b.boundary) is_bd[static_cast<size_t>(local[static_cast<size_t>(v)])] = true;

        for (std::uint32_t emask = 0; emask < (1u << avail.size()); ++emask) {
            detail_bnd::spend(&budget, "folio");
            Graph h(static_cast<int>(keep.size()));
            for (size_t i = 0; i < avail.size(); ++i)
                if (emask >> i & 1u) h.add_edge(avail[i].first, avail[i].second);

            std::vector<int> cand;  // dissolvable: interior, degree exactly 2
            for (int v = 0; v < h.vertex_count(); ++v)
                if (!is_bd[static_cast<size_t>(v)] && h.degree(v) == 2) cand.push_back(v);

            for (std::uint32_t smask = 0; smask < (1u << cand.size()); ++smask) {
                detail_bnd::spend(&budget, "folio");
                std::set<int> S;
                for (size_t i = 0; i < cand.size(); ++i)
                    if (smask >> i & 1u) S.insert(cand[i]);
                auto dissolved = detail_bnd::dissolve_set(h, S);
                if (!dissolved) continue;

                std::vector<int> rank(static_cast<size_t>(h.vertex_count()), -1);
                int kept = 0;
                for (int v = 0; v < h.vertex_count(); ++v)
                    if (!S.count(v)) rank[static_cast<size_t>(v)] = kept++;
                BoundariedGraph m;
                m.g = Graph(kept);
                for (auto [u, v] : *dissolved)
                    m.g.add_edge(rank[static_cast<size_t>(u)], rank[static_cast<size_t>(v)]);
                for (int v : b.boundary)
                    m.boundary.push_back(rank[static_cast<size_t>(local[static_cast<size_t>(v)])]);
                if (detail(m) > l) continue;
                auto code = boundaried_code(m);
                found.emplace(std::move(code), std::move(m));
            }
        }
    }

    Folio out;
    for (auto& [code, member] : found) {
        out.codes.push_back(code);
        out.members.push_back(std::move(member));
    }
    return out;
}

// ---------------------------------------------------------------------------
// bounded-context equivalence
//
// The exact relation quantifies over every compatible context F: g1 is below
// g2 when every H of detail at most h that is a minor of F + g1 is also a
// minor of F + g2. We quantify over contexts with at most c vertices only.
// This bounded surrogate can merge classes the exact relation separates; the
// bound is part of the contract and is recorded in every result that
// depends on it.

namespace detail_bnd {

// all graphs with at most h vertices and h edges, up to isomorphism
inline std::vector<Graph> small_graphs(int h) {
    std::vector<Graph> out;
    std::set<std::vector<std::uint8_t>> seen;
    for (int n = 0; n <= h; ++n) {
        std::vector<Edge> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            if (__builtin_popcount(mask) > h) continue;
            Graph g(n);
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1u) g.add_edge(pairs[i].first, pairs[i].second);
            if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

// every boundaried graph on at most c vertices whose boundary structure
// matches `like`, up to boundaried isomorphism
inline std::vector<BoundariedGraph> contexts(const BoundariedGraph& like, int c) {
    int t = boundary_size(like);
    std::vector<BoundariedGraph> out;
    std::set<std::vector<std::uint8_t>> seen;
    for (int m = 0; m + t <= c; ++m) {
        std::vector<Edge> pairs;  // optional edges: boundary-interior and interior-interior
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < m; ++j) pairs.emplace_back(i, t + j);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) pairs.emplace_back(t + i, t + j);
        if (pairs.size() > 16) throw resource_limit_error("leq_h: context enumeration too large");
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            BoundariedGraph f;
            f.g = Graph(t + m);
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j)
                    if (like.g.has_edge(like.boundary[i], like.boundary[j])) f.g.add_edge(i, j);
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1u) f.g.add_edge(pairs[i].first, pairs[i].second);
            for (int i = 0; i < t; ++i) f.boundary.push_back(i);
            if (seen.insert(boundaried_code(f)).second) out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace detail_bnd

inline bool leq_h(const BoundariedGraph& a, const BoundariedGraph& b, int h, int c,
                  long long budget = 50000000, MinorCache* cache = nullptr) {
    check_boundaried(a, "leq_h");
    check_boundaried(b, "leq_h");
    if (!compatible(a, b)) return false;  // incomparable, never equivalent
    if (h < 0 || c < boundary_size(a)) throw std::invalid_argument("leq_h: bounds below boundary size");
    if (h > 4 || c > 8) throw resource_limit_error("leq_h: desk budget is h <= 4 and c <= 8");
    std::vector<Graph> hs = detail_bnd::small_graphs(h);
    for (const BoundariedGraph& f : detail_bnd::contexts(a, c)) {
        Graph ga = glue(f, a);
        Graph gb = glue(f, b);
        for (const Graph& H : hs) {
            detail_bnd::spend(&budget, "leq_h");
            if (is_minor(H, ga, 50000000, cache) && !is_minor(H, gb, 50000000, cache)) return false;
        }
    }
    return true;
}

inline bool equivalent_h(const BoundariedGraph& a, const BoundariedGraph& b, int h, int c,
                         long long budget = 50000000, MinorCache* cache = nullptr) {
    return leq_h(a, b, h, c, budget, cache) && leq_h(b, a, h, c, budget, cache);
}

// ---------------------------------------------------------------------------
// representatives

struct RepresentativeSet {
    int t = 0;
    int h = 0;
    int size_bound = 0;
    int context_bound = 0;
    std::vector<BoundariedGraph> members;            // one per class, (size, code)-minimal
    std::vector<std::vector<std::uint8_t>> codes;    // aligned with members
};

// Quotient of all t-boundaried graphs on at most size_bound vertices under
// mutual leq_h with context bound c. Candidates are scanned by vertex count,
// then code, so each class keeps its smallest member with ties broken toward
// the least code.
inline RepresentativeSet representatives(int t, int h, int size_bound, int c,
                                         long long budget = 200000000, MinorCache* cache = nullptr) {
    if (t < 0 || h < 0 || size_bound < t || c < t)
        throw std::invalid_argument("representatives: need t >= 0, h >= 0, size_bound >= t, c >= t");
    if (t > 3 || h > 3 || size_bound > 5 || c > 6)
        throw resource_limit_error("representatives: desk budget is t <= 3, h <= 3, size_bound <= 5, c <= 6");
    std::vector<BoundariedGraph> all = enumerate_boundaried(t, size_bound);
    std::vector<std::vector<std::uint8_t>> codes;
    codes.reserve(all.size());
    for (const auto& g : all) codes.push_back(boundaried_code(g));
    std::vector<size_t> order(all.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        int nx = all[x].g.vertex_count(), ny = all[y].g.vertex_count();
        if (nx != ny) return nx < ny;
        return codes[x] < codes[y];
    });

    MinorCache local;
    if (!cache) cache = &local;
    RepresentativeSet out;
    out.t = t;
    out.h = h;
    out.size_bound = size_bound;
    out.context_bound = c;
    for (size_t idx : order) {
        bool matched = false;
        for (const auto& rep : out.members) {
            if (!compatible(all[idx], rep)) continue;
            if (equivalent_h(all[idx], rep, h, c, budget, cache)) {
                matched = true;
                break;
            }
        }
        if (!matched) {
            out.members.push_back(all[idx]);
            out.codes.push_back(codes[idx]);
        }
    }
    return out;
}

// representative sets for every boundary size 0..t, shared bounds
inline std::vector<RepresentativeSet> representative_table(int t, int h, int size_bound, int c,
                                                           long long budget = 200000000,
                                                           MinorCache* cache = nullptr) {
    MinorCache local;
    if (!cache) cache = &local;
    std::vector<RepresentativeSet> out;
    for (int t2 = 0; t2 <= t; ++t2) out.push_back(representatives(t2, h, size_bound, c, budget, cache));
    return out;
}

// ---------------------------------------------------------------------------
// characteristic functions
//
// For each pair (I, R) with I a label subset and R a representative on
// t - |I| labels, the entry is the least size of a vertex set S with at most
// k vertices whose boundary part realizes exactly I and whose removal leaves
// a graph below R under leq_h; k+1 means no such S exists. One-directional
// comparison is what makes the entries monotone along minor chains.

struct Characteristic {
    int k = 0;
    int h = 0;
    int t = 0;
    std::vector<std::pair<int, int>> keys;  // (label-position mask of I, index into table[t - |I|])
    std::vector<int> entries;               // aligned with keys, values in 0..k+1

    bool operator==(const Characteristic& o) const {
        return k == o.k && h == o.h && t == o.t && keys == o.keys && entries == o.entries;
    }
    bool operator!=(const Characteristic& o) const { return !(*this == o); }
};

// componentwise order on characteristics with identical key layouts
inline bool characteristic_leq(const Characteristic& a, const Characteristic& b) {
    if (a.k != b.k || a.h != b.h || a.t != b.t || a.keys != b.keys)
        throw std::invalid_argument("characteristic_leq: incomparable layouts");
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i] > b.entries[i]) return false;
    return true;
}

namespace detail_bnd {

// memoized one-directional comparison against one representative
inline bool leq_rep(const BoundariedGraph& g, const RepresentativeSet& reps, size_t ridx,
                    long long budget, MinorCache* cache,
                    std::map<std::pair<std::vector<std::uint8_t>, size_t>, bool>& memo) {
    auto key = std::make_pair(boundaried_code(g), ridx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool v = leq_h(g, reps.members[ridx], reps.h, reps.context_bound, budget, cache);
    memo.emplace(std::move(key), v);
    return v;
}

}  // namespace detail_bnd

inline Characteristic characteristic(const BoundariedGraph& b, int k, int h,
                                     const std::vector<RepresentativeSet>& table,
                                     long long budget = 200000000, MinorCache* cache = nullptr) {
    check_boundaried(b, "characteristic");
    int t = boundary_size(b);
    if (k < 0) throw std::invalid_argument("characteristic: negative k");
    if (static_cast<int>(table.size()) < t + 1)
        throw std::invalid_argument("characteristic: representative table misses a boundary size");
    for (int i = 0; i <= t; ++i)
        if (table[static_cast<size_t>(i)].t != i || table[static_cast<size_t>(i)].h != h)
            throw std::invalid_argument("characteristic: representative table does not match (t, h)");
    if (b.g.vertex_count() > 8 || k > 4)
        throw resource_limit_error("characteristic: desk budget is |V| <= 8 and k <= 4");

    MinorCache local;
    if (!cache) cache = &local;
    std::vector<int> interior;
    for (int v = 0; v < b.g.vertex_count(); ++v)
        if (!on_boundary(b, v)) interior.push_back(v);

    // every removal candidate is compared against each representative once;
    // one memo per boundary size, since indices live in that level's set
    std::vector<std::map<std::pair<std::vector<std::uint8_t>, size_t>, bool>> memo(table.size());

    Characteristic chi;
    chi.k = k;
    chi.h = h;
    chi.t = t;
    for (int mask = 0; mask < (1 << t); ++mask) {
        int isz = __builtin_popcount(static_cast<unsigned>(mask));
        int t2 = t - isz;
        const RepresentativeSet& reps = table[static_cast<size_t>(t2)];
        std::vector<int> best(reps.members.size(), k + 1);
        if (isz <= k) {
            std::vector<int> forced;
            for (int i = 0; i < t; ++i)
                if (mask >> i & 1) forced.push_back(b.boundary[i]);
            int room = std::min(k - isz, static_cast<int>(interior.size()));
            for (int extra = 0; extra <= room; ++extra) {
                std::vector<int> pick(static_cast<size_t>(extra));
                // fixed-size subsets of the interior, increasing size keeps minima exact
                auto run = [&](auto&& self, int start, int depth) -> void {
                    if (depth == extra) {
                        std::vector<int> S = forced;
                        S.insert(S.end(), pick.begin(), pick.end());
                        BoundariedGraph rest = remove_set(b, S);
                        for (size_t r = 0; r < reps.members.size(); ++r)
                            if (isz + extra < best[r] &&
                                detail_bnd::leq_rep(rest, reps, r, budget, cache,
                                                    memo[static_cast<size_t>(t2)]))
                                best[r] = isz + extra;
                        return;
                    }
                    for (int i = start; i < static_cast<int>(interior.size()); ++i) {
                        pick[static_cast<size_t>(depth)] = interior[static_cast<size_t>(i)];
                        self(self, i + 1, depth + 1);
                    }
                };
                run(run, 0, 0);
            }
        }
        for (size_t r = 0; r < reps.members.size(); ++r) {
            chi.keys.emplace_back(mask, static_cast<int>(r));
            chi.entries.push_back(best[r]);
        }
    }
    return chi;
}

// First position whose characteristic equals its successor's, 0-based; the
// guarantee is that any minor chain longer than (k+2) times the key count
// contains one.
inline std::optional<std::size_t> find_repeat(const std::vector<BoundariedGraph>& chain, int k, int h,
                                              const std::vector<RepresentativeSet>& table,
                                              long long budget = 200000000) {
    if (chain.empty()) return std::nullopt;
    MinorCache cache;
    Characteristic prev = characteristic(chain[0], k, h, table, budget, &cache);
    for (size_t i = 1; i < chain.size(); ++i) {
        Characteristic cur = characteristic(chain[i], k, h, table, budget, &cache);
        if (cur == prev) return i - 1;
        prev = std::move(cur);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// augmented flaps, palettes, homogeneity

// A flap of a certificate, induced together with an apex set, as a boundaried
// graph. The apexes get labels 1.. in ascending vertex order; the flap base
// continues the numbering in the rim's cyclic order, rotated to start at the
// smallest base vertex, or at base_start when given. The rotation start is
// the one free choice in the labeling; fixing it makes palettes comparable.
inline BoundariedGraph augmented_flap(const Graph& g, const FlatnessCertificate& cert, int flap_index,
                                      const std::vector<int>& apexes, int base_start = -1) {
    if (flap_index < 0 || flap_index >= static_cast<int>(cert.sigma.size()))
        throw std::invalid_argument("augmented_flap: flap index out of range");
    std::set<int> inside(cert.y.begin(), cert.y.end());
    std::set<int> aset;
    for (int a : apexes) {
        if (!g.has_vertex(a)) throw std::invalid_argument("augmented_flap: apex out of range");
        if (inside.count(a)) throw std::invalid_argument("augmented_flap: apex inside the compass");
        if (!aset.insert(a).second) throw std::invalid_argument("augmented_flap: duplicate apex");
    }

    const Flap& f = cert.sigma[static_cast<size_t>(flap_index)];
    const std::vector<int>& rim = cert.painting.cells[static_cast<size_t>(flap_index)].rim;
    std::vector<int> base;
    for (int node : rim) base.push_back(cert.pi[static_cast<size_t>(node)]);
    size_t start = 0;
    if (base_start >= 0) {
        auto it = std::find(base.begin(), base.end(), base_start);
        if (it == base.end()) throw std::invalid_argument("augmented_flap: base_start not on the flap base");
        start = static_cast<size_t>(it - base.begin());
    } else {
        for (size_t i = 1; i < base.size(); ++i)
            if (base[i] < base[start]) start = i;
    }
    std::rotate(base.begin(), base.begin() + static_cast<long>(start), base.end());

    std::vector<int> keep(aset.begin(), aset.end());
    keep.insert(keep.end(), f.vertices.begin(), f.vertices.end());
    std::sort(keep.begin(), keep.end());
    BoundariedGraph out;
    out.g = induced_subgraph(g, keep);
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin());
    };
    for (int a : aset) out.boundary.push_back(local(a));
    for (int v : base) out.boundary.push_back(local(v));
    return out;
}

using FolioCodes = std::vector<std::vector<std::uint8_t>>;

// the set of folios of the augmented flaps inside a cycle's influence
inline std::set<FolioCodes> palette(const Graph& g, const FlatnessCertificate& cert,
                                    const std::vector<int>& cycle, const std::vector<int>& apexes,
                                    int l, long long budget = 50000000) {
    std::set<FolioCodes> out;
    for (int j : influence(cert, cycle))
        out.insert(folio(augmented_flap(g, cert, j, apexes), l, budget).codes);
    return out;
}

// bricks sharing no vertex with the wall perimeter, as host cycles
inline std::vector<std::vector<int>> internal_bricks(const Wall& w) {
    std::set<int> rim = perimeter_host_set(w);
    std::vector<std::vector<int>> out;
    for (const auto& cycle : bricks(w)) {
        std::vector<int> host = w.to_host(cycle);
        bool touches = false;
        for (int v : host)
            if (rim.count(v)) {
                touches = true;
                break;
            }
        if (!touches) out.push_back(std::move(host));
    }
    return out;
}

// all internal bricks carry the same palette, for every apex set in the family
inline bool is_homogeneous(const Graph& g, const FlatnessCertificate& cert, const Wall& w,
                           const std::vector<std::vector<int>>& apex_sets, int l,
                           long long budget = 50000000) {
    std::vector<std::vector<int>> cycles = internal_bricks(w);
    if (cycles.size() <= 1) return true;
    for (const auto& apexes : apex_sets) {
        std::set<FolioCodes> first = palette(g, cert, cycles[0], apexes, l, budget);
        for (size_t i = 1; i < cycles.size(); ++i)
            if (palette(g, cert, cycles[i], apexes, l, budget) != first) return false;
    }
    return true;
}

}  // namespace minorkit
