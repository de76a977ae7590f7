#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "planarity.hpp"

namespace minorkit {

// The (k x r)-grid on vertices [k] x [r]; (i,j) and (i',j') are adjacent
// iff |i-i'| + |j-j'| = 1. Column i, row j.
struct Grid {
    int k = 0;
    int r = 0;
    Graph g;

    int vid(int i, int j) const {
        if (i < 1 || i > k || j < 1 || j > r)
            throw std::invalid_argument("grid coordinate out of range");
        return (i - 1) * r + (j - 1);
    }

    std::pair<int, int> coord(int v) const {
        if (v < 0 || v >= k * r) throw std::invalid_argument("grid vertex out of range");
        return {v / r + 1, v % r + 1};
    }
};

inline Grid build_grid(int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("grid dimensions must be positive");
    Grid gr;
    gr.k = k;
    gr.r = r;
    gr.g = grid_graph(k, r);
    return gr;
}

inline std::vector<int> vertical_path(const Grid& gr, int i) {
    std::vector<int> out;
    for (int j = 1; j <= gr.r; ++j) out.push_back(gr.vid(i, j));
    return out;
}

inline std::vector<int> horizontal_path(const Grid& gr, int j) {
    std::vector<int> out;
    for (int i = 1; i <= gr.k; ++i) out.push_back(gr.vid(i, j));
    return out;
}

// For an (n x (2m+1))-grid, the (m+1)-th horizontal path.
inline std::vector<int> middle_horizontal_path(const Grid& gr) {
    if (gr.r % 2 == 0)
        throw std::invalid_argument("middle horizontal path needs an odd number of rows");
    return horizontal_path(gr, (gr.r - 1) / 2 + 1);
}

// Subpath of the i-th vertical path from (i, m+1+j) to (i, m+1+j'), with
// j, j' counted as offsets in [-m, m] from the middle row.
inline std::vector<int> vertical_span(const Grid& gr, int i, int j, int jp) {
    if (gr.r % 2 == 0) throw std::invalid_argument("offset paths need an odd number of rows");
    int m = (gr.r - 1) / 2;
    if (i < 1 || i > gr.k) throw std::invalid_argument("column index out of range");
    if (j < -m || j > m || jp < -m || jp > m)
        throw std::invalid_argument("row offset out of range");
    if (j == jp) throw std::invalid_argument("offset path endpoints must differ");
    std::vector<int> out;
    int step = jp > j ? 1 : -1;
    for (int y = j; ; y += step) {
        out.push_back(gr.vid(i, m + 1 + y));
        if (y == jp) break;
    }
    return out;
}

// Subpath of the (m+1+j)-th horizontal path from (i, m+1+j) to (i', m+1+j).
inline std::vector<int> horizontal_span(const Grid& gr, int i, int ip, int j) {
    if (gr.r % 2 == 0) throw std::invalid_argument("offset paths need an odd number of rows");
    int m = (gr.r - 1) / 2;
    if (i < 1 || i > gr.k || ip < 1 || ip > gr.k)
        throw std::invalid_argument("column index out of range");
    if (j < -m || j > m) throw std::invalid_argument("row offset out of range");
    if (i == ip) throw std::invalid_argument("offset path endpoints must differ");
    std::vector<int> out;
    int step = ip > i ? 1 : -1;
    for (int x = i; ; x += step) {
        out.push_back(gr.vid(x, m + 1 + j));
        if (x == ip) break;
    }
    return out;
}

// Layers of a square r-grid, outermost ring first; the innermost entry is a
// single vertex when r is odd.
inline std::vector<std::vector<int>> grid_layers(const Grid& gr) {
    if (gr.k != gr.r) throw std::invalid_argument("layers are defined for square grids");
    if (gr.r < 2) throw std::invalid_argument("layers need r >= 2");
    std::vector<std::vector<int>> out;
    for (int lo = 1, hi = gr.r; lo <= hi; ++lo, --hi) {
        std::vector<int> ring;
        if (lo == hi) {
            ring.push_back(gr.vid(lo, lo));
        } else {
            for (int x = lo; x <= hi; ++x) ring.push_back(gr.vid(x, lo));
            for (int y = lo + 1; y <= hi; ++y) ring.push_back(gr.vid(hi, y));
            for (int x = hi - 1; x >= lo; --x) ring.push_back(gr.vid(x, hi));
            for (int y = hi - 1; y >= lo + 1; --y) ring.push_back(gr.vid(lo, y));
        }
        out.push_back(ring);
    }
    return out;
}

// Central q-grid of a square r-grid: what is left after peeling the first
// (r-q)/2 layers. Host ids refer to the source grid.
struct CentralGrid {
    Grid grid;
    std::vector<int> host;  // central-grid id -> source-grid id
};

inline CentralGrid central_q_grid(const Grid& gr, int q) {
    if (gr.k != gr.r) throw std::invalid_argument("central grid is defined for square grids");
    if (q < 3 || q % 2 == 0 || gr.r % 2 == 0 || q > gr.r)
        throw std::invalid_argument("central grid needs odd q <= odd r");
    int delta = (gr.r - q) / 2;
    CentralGrid out;
    out.grid = build_grid(q, q);
    out.host.assign(static_cast<std::size_t>(q * q), -1);
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
            out.host[static_cast<std::size_t>(out.grid.vid(i, j))] =
                gr.vid(delta + i, delta + j);
    return out;
}

// A square grid plus extra edges that keep it planar.
struct PartiallyTriangulatedGrid {
    int k = 0;
    int r = 0;
    std::vector<Edge> chords;
    Graph g;
};

inline PartiallyTriangulatedGrid build_partially_triangulated_grid(int k, int r,
                                                                   const std::vector<Edge>& chords) {
    PartiallyTriangulatedGrid pt;
    pt.k = k;
    pt.r = r;
    Grid gr = build_grid(k, r);
    pt.g = gr.g;
    for (const Edge& e : chords) {
        if (e.first < 0 || e.first >= k * r || e.second < 0 || e.second >= k * r)
            throw std::invalid_argument("chord endpoint out of range");
        pt.g.add_edge(e.first, e.second);
        pt.chords.push_back(make_edge(e.first, e.second));
    }
    std::sort(pt.chords.begin(), pt.chords.end());
    if (!is_planar(pt.g))
        throw std::invalid_argument("chords destroy planarity");
    return pt;
}

inline Graph central_q_subgraph(const PartiallyTriangulatedGrid& pt, int q,
                                std::vector<int>* host_out = nullptr) {
    Grid gr = build_grid(pt.k, pt.r);
    CentralGrid c = central_q_grid(gr, q);
    if (host_out) *host_out = c.host;
    return induced_subgraph(pt.g, c.host);
}

// A collection of `count` pairwise disjoint subsets of V(P), each of size
// `size_each`, with every two vertices of the union more than `gap` apart
// along P.
inline bool is_scattered(const std::vector<std::vector<int>>& collection,
                         const std::vector<int>& path, int size_each, int count, int gap) {
    if (size_each < 1 || count < 0 || gap < 0) return false;
    if (static_cast<int>(collection.size()) != count) return false;
    std::map<int, int> pos;
    for (std::size_t s = 0; s < path.size(); ++s) pos[path[s]] = static_cast<int>(s);
    std::vector<int> all;
    for (const auto& part : collection) {
        std::set<int> uniq(part.begin(), part.end());
        if (static_cast<int>(uniq.size()) != size_each ||
            uniq.size() != part.size())
            return false;
        for (int v : part) {
            if (!pos.count(v)) return false;
            all.push_back(v);
        }
    }
    std::set<int> uniq_all(all.begin(), all.end());
    if (uniq_all.size() != all.size()) return false;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            if (std::abs(pos[all[a]] - pos[all[b]]) <= gap) return false;
    return true;
}

}  // namespace minorkit
