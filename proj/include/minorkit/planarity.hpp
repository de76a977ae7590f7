#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace minorkit {

// Combinatorial embedding: rotation[v] lists the neighbors of v in cyclic
// order. Faces are traced by the rule next(u,v) = (v, w) where w follows u
// in rotation[v].
struct PlanarEmbedding {
    std::vector<std::vector<int>> rotation;
};

namespace detail_planar {

// Biconnected components as edge lists (Tarjan). Isolated vertices appear in
// no block.
class BlockFinder {
public:
    explicit BlockFinder(const Graph& g) : g_(g), disc_(static_cast<size_t>(g.vertex_count()), 0),
                                           low_(static_cast<size_t>(g.vertex_count()), 0) {}

    std::vector<std::vector<Edge>> run() {
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (!disc_[static_cast<size_t>(v)]) dfs(v, -1);
        return blocks_;
    }

private:
    void dfs(int u, int parent) {
        disc_[static_cast<size_t>(u)] = low_[static_cast<size_t>(u)] = ++timer_;
        for (int v : g_.neighbors(u)) {
            if (v == parent) continue;
            if (!disc_[static_cast<size_t>(v)]) {
                stack_.push_back(make_edge(u, v));
                dfs(v, u);
                low_[static_cast<size_t>(u)] = std::min(low_[static_cast<size_t>(u)], low_[static_cast<size_t>(v)]);
                if (low_[static_cast<size_t>(v)] >= disc_[static_cast<size_t>(u)]) {
                    std::vector<Edge> block;
                    Edge top = make_edge(u, v);
                    while (true) {
                        Edge e = stack_.back();
                        stack_.pop_back();
                        block.push_back(e);
                        if (e == top) break;
                    }
                    blocks_.push_back(std::move(block));
                }
            } else if (disc_[static_cast<size_t>(v)] < disc_[static_cast<size_t>(u)]) {
                stack_.push_back(make_edge(u, v));
                low_[static_cast<size_t>(u)] = std::min(low_[static_cast<size_t>(u)], disc_[static_cast<size_t>(v)]);
            }
        }
    }

    const Graph& g_;
    std::vector<int> disc_, low_;
    std::vector<Edge> stack_;
    std::vector<std::vector<Edge>> blocks_;
    int timer_ = 0;
};

// Incremental face-based planarity for one 2-connected graph (n >= 3).
// The partial embedding grows by ears, so every face stays a simple cycle;
// a fragment goes into a face only if the face holds all its attachments,
// and fragments with the fewest admissible faces are placed first.
class BlockEmbedder {
public:
    explicit BlockEmbedder(const Graph& h) : h_(h), n_(h.vertex_count()) {}

    std::optional<std::vector<std::vector<int>>> run() {
        if (3LL * n_ - 6 < h_.edge_count()) return std::nullopt;
        in_g_.assign(static_cast<size_t>(n_), 0);
        e_in_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
        std::vector<int> cyc = find_cycle();
        add_face(cyc);
        std::vector<int> rcyc(cyc.rbegin(), cyc.rend());
        add_face(rcyc);
        for (int v : cyc) in_g_[static_cast<size_t>(v)] = 1;
        for (size_t i = 0; i < cyc.size(); ++i) set_edge(cyc[i], cyc[(i + 1) % cyc.size()]);

        while (true) {
            auto frags = fragments();
            if (frags.empty()) break;
            // pick the fragment with the fewest admissible faces
            int best = -1;
            std::vector<int> best_adm;
            for (size_t fi = 0; fi < frags.size(); ++fi) {
                std::vector<int> adm = admissible(frags[fi].attach);
                if (best < 0 || adm.size() < best_adm.size()) {
                    best = static_cast<int>(fi);
                    best_adm = std::move(adm);
                }
                if (best_adm.empty()) break;
            }
            if (best_adm.empty()) return std::nullopt;
            const Fragment& f = frags[static_cast<size_t>(best)];
            std::vector<int> path = fragment_path(f);
            embed_path(path, best_adm[0]);
        }
        return rotations();
    }

private:
    struct Fragment {
        std::vector<int> attach;  // attachment vertices, in G'
        std::vector<int> comp;    // interior vertices, outside G' (empty for a chord)
    };

    size_t eidx(int u, int v) const { return static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v); }
    void set_edge(int u, int v) { e_in_[eidx(u, v)] = e_in_[eidx(v, u)] = 1; }
    bool has_gedge(int u, int v) const { return e_in_[eidx(u, v)] != 0; }

    // BFS tree plus any non-tree edge; the cycle runs through the endpoints'
    // lowest common ancestor, so both legs are vertex-disjoint tree paths.
    std::vector<int> find_cycle() const {
        std::vector<int> parent(static_cast<size_t>(n_), -1), depth(static_cast<size_t>(n_), -1), queue{0};
        depth[0] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : h_.neighbors(u))
                if (depth[static_cast<size_t>(v)] < 0) {
                    depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(v)] = u;
                    queue.push_back(v);
                }
        }
        for (auto [u, v] : h_.edges()) {
            if (parent[static_cast<size_t>(u)] == v || parent[static_cast<size_t>(v)] == u) continue;
            std::vector<char> anc(static_cast<size_t>(n_), 0);
            for (int x = u; x != -1; x = parent[static_cast<size_t>(x)]) anc[static_cast<size_t>(x)] = 1;
            int lca = v;
            while (!anc[static_cast<size_t>(lca)]) lca = parent[static_cast<size_t>(lca)];
            std::vector<int> cyc;
            for (int x = u; x != lca; x = parent[static_cast<size_t>(x)]) cyc.push_back(x);
            cyc.push_back(lca);
            std::vector<int> right;
            for (int x = v; x != lca; x = parent[static_cast<size_t>(x)]) right.push_back(x);
            cyc.insert(cyc.end(), right.rbegin(), right.rend());
            return cyc;
        }
        throw construction_bug("block embedder: no cycle in a 2-connected block");
    }

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        // chords
        for (auto [u, v] : h_.edges())
            if (in_g_[static_cast<size_t>(u)] && in_g_[static_cast<size_t>(v)] && !has_gedge(u, v))
                out.push_back(Fragment{{u, v}, {}});
        // components of h minus V(G')
        std::vector<int> comp_id(static_cast<size_t>(n_), -1);
        for (int s = 0; s < n_; ++s) {
            if (in_g_[static_cast<size_t>(s)] || comp_id[static_cast<size_t>(s)] >= 0) continue;
            Fragment f;
            std::set<int> attach;
            std::vector<int> stack{s};
            comp_id[static_cast<size_t>(s)] = s;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                f.comp.push_back(u);
                for (int v : h_.neighbors(u)) {
                    if (in_g_[static_cast<size_t>(v)]) {
                        attach.insert(v);
                    } else if (comp_id[static_cast<size_t>(v)] < 0) {
                        comp_id[static_cast<size_t>(v)] = s;
                        stack.push_back(v);
                    }
                }
            }
            f.attach.assign(attach.begin(), attach.end());
            if (f.attach.size() < 2)
                throw construction_bug("block embedder: fragment with fewer than 2 attachments");
            out.push_back(std::move(f));
        }
        return out;
    }

    std::vector<int> admissible(const std::vector<int>& attach) const {
        std::vector<int> out;
        for (size_t fi = 0; fi < faces_.size(); ++fi) {
            const auto& w = faces_[fi];
            bool ok = true;
            for (int a : attach)
                if (std::find(w.begin(), w.end(), a) == w.end()) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(static_cast<int>(fi));
        }
        return out;
    }

    // A path between two attachments whose interior lies in the fragment.
    std::vector<int> fragment_path(const Fragment& f) const {
        if (f.comp.empty()) return {f.attach[0], f.attach[1]};
        int a = f.attach[0], b = f.attach[1];
        std::vector<char> in_comp(static_cast<size_t>(n_), 0);
        for (int v : f.comp) in_comp[static_cast<size_t>(v)] = 1;
        std::vector<int> parent(static_cast<size_t>(n_), -1);
        std::vector<int> queue;
        for (int v : h_.neighbors(a))
            if (in_comp[static_cast<size_t>(v)] && parent[static_cast<size_t>(v)] < 0) {
                parent[static_cast<size_t>(v)] = a;
                queue.push_back(v);
            }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (h_.has_edge(u, b)) {
                std::vector<int> rev{b};
                for (int x = u; x != a; x = parent[static_cast<size_t>(x)]) rev.push_back(x);
                rev.push_back(a);
                return {rev.rbegin(), rev.rend()};
            }
            for (int v : h_.neighbors(u))
                if (in_comp[static_cast<size_t>(v)] && parent[static_cast<size_t>(v)] < 0) {
                    parent[static_cast<size_t>(v)] = u;
                    queue.push_back(v);
                }
        }
        throw construction_bug("block embedder: no path through fragment");
    }

    void add_face(std::vector<int> w) { faces_.push_back(std::move(w)); }

    void embed_path(const std::vector<int>& path, int face_index) {
        int a = path.front(), b = path.back();
        std::vector<int> w = faces_[static_cast<size_t>(face_index)];
        size_t k = w.size();
        size_t ia = static_cast<size_t>(std::find(w.begin(), w.end(), a) - w.begin());
        size_t ib = static_cast<size_t>(std::find(w.begin(), w.end(), b) - w.begin());
        std::vector<int> s1, s2;
        for (size_t t = ia;; t = (t + 1) % k) {
            s1.push_back(w[t]);
            if (t == ib) break;
        }
        for (size_t t = ib;; t = (t + 1) % k) {
            s2.push_back(w[t]);
            if (t == ia) break;
        }
        std::vector<int> f1 = s1, f2 = s2;
        for (size_t t = path.size() - 2; t >= 1; --t) f1.push_back(path[t]);
        for (size_t t = 1; t + 1 < path.size(); ++t) f2.push_back(path[t]);
        faces_[static_cast<size_t>(face_index)] = std::move(f1);
        add_face(std::move(f2));
        for (int v : path) in_g_[static_cast<size_t>(v)] = 1;
        for (size_t t = 0; t + 1 < path.size(); ++t) set_edge(path[t], path[t + 1]);
    }

    // Rotation at v: the face system defines, for each consecutive face triple
    // (u, v, w), that w follows u around v; chaining these gives the cycle.
    std::vector<std::vector<int>> rotations() const {
        std::vector<std::map<int, int>> succ(static_cast<size_t>(n_));
        for (const auto& w : faces_) {
            size_t k = w.size();
            for (size_t t = 0; t < k; ++t) {
                int u = w[t], v = w[(t + 1) % k], x = w[(t + 2) % k];
                auto [it, fresh] = succ[static_cast<size_t>(v)].emplace(u, x);
                if (!fresh) throw construction_bug("block embedder: duplicate face transition");
            }
        }
        std::vector<std::vector<int>> rot(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            const auto& nb = h_.neighbors(v);
            if (nb.empty()) continue;
            if (succ[static_cast<size_t>(v)].size() != nb.size())
                throw construction_bug("block embedder: incomplete rotation");
            int start = nb[0], cur = start;
            do {
                rot[static_cast<size_t>(v)].push_back(cur);
                cur = succ[static_cast<size_t>(v)].at(cur);
            } while (cur != start);
            if (rot[static_cast<size_t>(v)].size() != nb.size())
                throw construction_bug("block embedder: rotation is not a single cycle");
        }
        return rot;
    }

    const Graph& h_;
    int n_;
    std::vector<char> in_g_, e_in_;
    std::vector<std::vector<int>> faces_;
};

}  // namespace detail_planar

inline std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
    return detail_planar::BlockFinder(g).run();
}

// Embedding, or nullopt if g is not planar. Blocks are embedded separately
// and their rotations concatenated at cut vertices, which is always planar.
inline std::optional<PlanarEmbedding> planar_embedding(const Graph& g) {
    int n = g.vertex_count();
    PlanarEmbedding emb;
    emb.rotation.assign(static_cast<size_t>(n), {});
    for (const auto& block : biconnected_components(g)) {
        if (block.size() == 1) {
            auto [u, v] = block[0];
            emb.rotation[static_cast<size_t>(u)].push_back(v);
            emb.rotation[static_cast<size_t>(v)].push_back(u);
            continue;
        }
        std::set<int> vset;
        for (auto [u, v] : block) {
            vset.insert(u);
            vset.insert(v);
        }
        std::vector<int> verts(vset.begin(), vset.end());
        std::vector<int> local(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < verts.size(); ++i) local[static_cast<size_t>(verts[i])] = static_cast<int>(i);
        Graph h(static_cast<int>(verts.size()));
        for (auto [u, v] : block) h.add_edge(local[static_cast<size_t>(u)], local[static_cast<size_t>(v)]);
        auto rot = detail_planar::BlockEmbedder(h).run();
        if (!rot) return std::nullopt;
        for (size_t i = 0; i < verts.size(); ++i)
            for (int w : (*rot)[i])
                emb.rotation[static_cast<size_t>(verts[i])].push_back(verts[static_cast<size_t>(w)]);
    }
    return emb;
}

inline bool is_planar(const Graph& g) { return planar_embedding(g).has_value(); }

// Traced face count of an embedding (whole graph; every directed edge lies on
// exactly one traced face).
inline int face_count(const Graph& g, const PlanarEmbedding& emb) {
    int n = g.vertex_count();
    std::vector<std::map<int, int>> succ(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& rot = emb.rotation[static_cast<size_t>(v)];
        for (size_t i = 0; i < rot.size(); ++i)
            succ[static_cast<size_t>(v)][rot[i]] = rot[(i + 1) % rot.size()];
    }
    std::set<std::pair<int, int>> seen;
    int faces = 0;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (seen.count({u, v})) continue;
            ++faces;
            int a = u, b = v;
            while (!seen.count({a, b})) {
                seen.insert({a, b});
                int c = succ[static_cast<size_t>(b)].at(a);
                a = b;
                b = c;
            }
        }
    return faces;
}

// Rotation lists must be permutations of the neighbor sets, and tracing must
// satisfy V - E + F = 2 on every connected component with an edge.
inline bool validate_embedding(const Graph& g, const PlanarEmbedding& emb) {
    int n = g.vertex_count();
    if (static_cast<int>(emb.rotation.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        std::vector<int> r = emb.rotation[static_cast<size_t>(v)];
        std::sort(r.begin(), r.end());
        if (r != g.neighbors(v)) return false;
    }
    for (const auto& comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.edge_count() == 0) continue;
        std::vector<int> pos(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < comp.size(); ++i) pos[static_cast<size_t>(comp[i])] = static_cast<int>(i);
        PlanarEmbedding se;
        se.rotation.assign(comp.size(), {});
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : emb.rotation[static_cast<size_t>(comp[i])])
                se.rotation[i].push_back(pos[static_cast<size_t>(w)]);
        if (sub.vertex_count() - sub.edge_count() + face_count(sub, se) != 2) return false;
    }
    return true;
}

// Minimum number of vertex deletions leaving a planar graph, by subset search
// of increasing size. `budget` caps the number of planarity tests.
inline int apex_number(const Graph& g, long long budget = 2000000) {
    int n = g.vertex_count();
    for (int k = 0; k <= n; ++k) {
        std::vector<int> pick(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
        while (true) {
            if (--budget < 0) throw resource_limit_error("apex_number: budget exhausted");
            if (is_planar(delete_vertices(g, pick))) return k;
            // next k-combination of [0, n)
            int i = k - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
    }
    throw construction_bug("apex_number: exhausted all subsets");  // unreachable: empty graph is planar
}

}  // namespace minorkit
