#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace minorkit {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph with vertex ids 0..n-1.
// Adjacency is kept as sorted neighbor lists; loops and parallel edges are
// rejected on insertion. Deleting vertex v shifts every id above v down by
// one, so ids stay contiguous and order-preserving.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(check_size(n))) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    int edge_count() const {
        size_t twice = 0;
        for (const auto& nb : adj_) twice += nb.size();
        return static_cast<int>(twice / 2);
    }

    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    bool has_edge(int u, int v) const {
        if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
        const auto& nb = adj_[static_cast<size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Inserts {u,v}; returns false if it was already present.
    bool add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: loop edge " + std::to_string(u));
        if (has_edge(u, v)) return false;
        insert_sorted(adj_[static_cast<size_t>(u)], v);
        insert_sorted(adj_[static_cast<size_t>(v)], u);
        return true;
    }

    bool remove_edge(int u, int v) {
        if (!has_edge(u, v)) return false;
        erase_value(adj_[static_cast<size_t>(u)], v);
        erase_value(adj_[static_cast<size_t>(v)], u);
        return true;
    }

    int add_vertex() {
        check_size(vertex_count() + 1);
        adj_.emplace_back();
        return vertex_count() - 1;
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(edge_count()));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    static int check_size(int n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (!has_vertex(v)) throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
    }
    static void insert_sorted(std::vector<int>& xs, int v) {
        xs.insert(std::upper_bound(xs.begin(), xs.end(), v), v);
    }
    static void erase_value(std::vector<int>& xs, int v) {
        xs.erase(std::lower_bound(xs.begin(), xs.end(), v));
    }

    std::vector<std::vector<int>> adj_;
};

// max(|E(G)|, |V(G)|): the measure used when sizing pattern graphs.
inline int detail(const Graph& g) { return std::max(g.edge_count(), g.vertex_count()); }

// ---- vertex-set helpers -----------------------------------------------------

inline std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> vs(static_cast<size_t>(g.vertex_count()));
    std::iota(vs.begin(), vs.end(), 0);
    return vs;
}

// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{s}, members;
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

// Is `set` (non-empty) connected in g?
inline bool is_connected_set(const Graph& g, const std::vector<int>& set) {
    if (set.empty()) return false;
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : set) in[static_cast<size_t>(v)] = 1;
    std::vector<int> stack{set.front()};
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    seen[static_cast<size_t>(set.front())] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == set.size();
}

// ---- whole-graph operations (value semantics) -------------------------------

// Induced subgraph on `keep` (need not be sorted); ids are compacted in the
// order the vertices appear after sorting.
inline Graph induced_subgraph(const Graph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> pos(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        if (!g.has_vertex(keep[i])) throw std::invalid_argument("induced_subgraph: bad vertex");
        pos[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(keep.size()));
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v && pos[static_cast<size_t>(v)] >= 0)
                h.add_edge(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    return h;
}

// Deletes v; every id above v shifts down by one.
inline Graph delete_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertex: bad vertex");
    std::vector<int> keep;
    keep.reserve(static_cast<size_t>(g.vertex_count()) - 1);
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

inline Graph delete_vertices(const Graph& g, std::vector<int> del) {
    std::sort(del.begin(), del.end());
    del.erase(std::unique(del.begin(), del.end()), del.end());
    std::vector<int> keep;
    size_t j = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (j < del.size() && del[j] == u) {
            ++j;
            continue;
        }
        keep.push_back(u);
    }
    if (j != del.size()) throw std::invalid_argument("delete_vertices: bad vertex");
    return induced_subgraph(g, keep);
}

inline Graph delete_edge(const Graph& g, int u, int v) {
    Graph h = g;
    if (!h.remove_edge(u, v)) throw std::invalid_argument("delete_edge: no such edge");
    return h;
}

// Contracts {u,v} into min(u,v); parallel edges collapse, the loop vanishes.
// The survivor keeps id min(u,v) before compaction of max(u,v).
inline Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: no such edge");
    int keep = std::min(u, v), gone = std::max(u, v);
    Graph h = g;
    for (int w : g.neighbors(gone))
        if (w != keep) h.add_edge(keep, w);
    return delete_vertex(h, gone);
}

// Dissolves a degree-2 vertex: removes v and joins its two neighbors.
inline Graph dissolve_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v) || g.degree(v) != 2)
        throw std::invalid_argument("dissolve_vertex: vertex must have degree 2");
    int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
    Graph h = g;
    h.add_edge(a, b);
    return delete_vertex(h, v);
}

// Subdivides {u,v}: the new vertex gets the largest id.
inline Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("subdivide_edge: no such edge");
    Graph h = g;
    h.remove_edge(u, v);
    int w = h.add_vertex();
    h.add_edge(u, w);
    h.add_edge(v, w);
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) h.add_edge(u, v);
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) h.add_edge(u + off, v + off);
    return h;
}

inline Graph complement_graph(const Graph& g) {
    int n = g.vertex_count();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

// ---- named graphs ------------------------------------------------------------

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);      // outer 5-cycle
        g.add_edge(i, i + 5);            // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

// k columns by r rows; vertex (i,j) with i in [0,k), j in [0,r) has id i*r+j.
inline Graph grid_graph(int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("grid_graph: need positive dimensions");
    Graph g(k * r);
    auto id = [r](int i, int j) { return i * r + j; };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) {
            if (i + 1 < k) g.add_edge(id(i, j), id(i + 1, j));
            if (j + 1 < r) g.add_edge(id(i, j), id(i, j + 1));
        }
    return g;
}

// ---- contraction / minor witnesses -------------------------------------------

// A minor model: branch_sets[i] is the branch set of target vertex i.
// Vertices of the source outside every branch set are deleted (minor mode)
// or must not exist (contraction mode).
struct ContractionWitness {
    Graph target;
    std::vector<std::vector<int>> branch_sets;
};

enum class WitnessMode { Minor, Contraction };

struct WitnessReport {
    bool ok = true;
    std::string detail;
};

// Checks a witness against its source graph.
//  - branch sets are non-empty, disjoint, and connected in the source;
//  - every target edge is realized by a source edge between its branch sets;
//  - `fixed` target vertices have singleton branch sets;
//  - contraction mode: the branch sets cover V(source) and the quotient
//    adjacency equals the target adjacency exactly.
inline WitnessReport verify_witness(const Graph& source, const ContractionWitness& w,
                                    const std::vector<int>& fixed = {},
                                    WitnessMode mode = WitnessMode::Minor) {
    auto fail = [](std::string msg) { return WitnessReport{false, std::move(msg)}; };
    int t = w.target.vertex_count();
    if (static_cast<int>(w.branch_sets.size()) != t)
        return fail("branch set count differs from target vertex count");
    std::vector<int> owner(static_cast<size_t>(source.vertex_count()), -1);
    for (int i = 0; i < t; ++i) {
        const auto& bs = w.branch_sets[static_cast<size_t>(i)];
        if (bs.empty()) return fail("branch set " + std::to_string(i) + " is empty");
        for (int v : bs) {
            if (!source.has_vertex(v)) return fail("branch set " + std::to_string(i) + " has a bad vertex");
            if (owner[static_cast<size_t>(v)] >= 0)
                return fail("vertex " + std::to_string(v) + " lies in two branch sets");
            owner[static_cast<size_t>(v)] = i;
        }
        if (!is_connected_set(source, bs))
            return fail("branch set " + std::to_string(i) + " is disconnected");
    }
    for (int v : fixed) {
        if (v < 0 || v >= t) return fail("fixed vertex out of range");
        if (w.branch_sets[static_cast<size_t>(v)].size() != 1)
            return fail("fixed vertex " + std::to_string(v) + " has a non-singleton branch set");
    }
    // Quotient adjacency between branch sets.
    std::vector<std::vector<char>> quot(static_cast<size_t>(t), std::vector<char>(static_cast<size_t>(t), 0));
    for (auto [u, v] : source.edges()) {
        int a = owner[static_cast<size_t>(u)], b = owner[static_cast<size_t>(v)];
        if (a >= 0 && b >= 0 && a != b) quot[static_cast<size_t>(a)][static_cast<size_t>(b)] = quot[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
    }
    for (auto [a, b] : w.target.edges())
        if (!quot[static_cast<size_t>(a)][static_cast<size_t>(b)])
            return fail("target edge {" + std::to_string(a) + "," + std::to_string(b) + "} is not realized");
    if (mode == WitnessMode::Contraction) {
        for (int v = 0; v < source.vertex_count(); ++v)
            if (owner[static_cast<size_t>(v)] < 0)
                return fail("vertex " + std::to_string(v) + " is not covered (contraction mode)");
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b)
                if (quot[static_cast<size_t>(a)][static_cast<size_t>(b)] && !w.target.has_edge(a, b))
                    return fail("quotient edge {" + std::to_string(a) + "," + std::to_string(b) +
                                "} is missing from the target (contraction mode)");
    }
    return {};
}

}  // namespace minorkit
