#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace minorkit {

// Canonical labeling by individualization-refinement with automorphism
// pruning. The canonical code of a (vertex-colored) graph is a byte string
// equal for two graphs iff they are color-preservingly isomorphic; the
// automorphisms discovered along the way generate the full color-preserving
// automorphism group, which yields exact vertex orbits.

struct CanonicalResult {
    std::vector<int> labeling;                  // labeling[v] = canonical position of v
    std::vector<std::uint8_t> code;             // canonical byte string
    std::vector<std::vector<int>> generators;   // automorphism generators, gen[v] = image of v
    std::vector<int> orbit;                     // orbit[v] = smallest vertex in v's orbit
};

namespace detail_canon {

using Cells = std::vector<std::vector<int>>;

class Canonicalizer {
public:
    Canonicalizer(const Graph& g, const std::vector<int>& colors) : g_(g), n_(g.vertex_count()) {
        adj_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_ > 0 ? n_ : 1), 0);
        for (auto [u, v] : g.edges()) {
            adj_[idx(u, v)] = 1;
            adj_[idx(v, u)] = 1;
        }
        Cells init = initial_cells(colors);
        prefix_ = make_prefix(init);
        init_cells_ = std::move(init);
    }

    CanonicalResult run() {
        if (n_ == 0) {
            CanonicalResult r;
            r.code = prefix_;
            return r;
        }
        search(init_cells_);
        CanonicalResult r;
        r.labeling = best_labeling_;
        r.code = best_code_;
        r.generators = generators_;
        r.orbit = orbits_from_generators();
        return r;
    }

private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v); }

    Cells initial_cells(const std::vector<int>& colors) const {
        Cells cells;
        if (colors.empty()) {
            if (n_ > 0) cells.push_back(all_vertices(g_));
            return cells;
        }
        if (static_cast<int>(colors.size()) != n_)
            throw std::invalid_argument("canonicalize: color vector size mismatch");
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n_; ++v) by_color[colors[static_cast<size_t>(v)]].push_back(v);
        for (auto& [c, vs] : by_color) cells.push_back(std::move(vs));
        return cells;
    }

    // Code prefix: n, initial cell count, initial cell sizes. Including the
    // cell layout keeps codes from different colorings distinguishable.
    std::vector<std::uint8_t> make_prefix(const Cells& init) const {
        std::vector<std::uint8_t> out;
        auto put32 = [&out](int x) {
            for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>((x >> s) & 0xff));
        };
        put32(n_);
        put32(static_cast<int>(init.size()));
        for (const auto& cell : init) put32(static_cast<int>(cell.size()));
        return out;
    }

    // One refinement pass to a fixpoint: split the first cell that some cell's
    // neighbor counts distinguish, fragments ordered by count ascending.
    void refine(Cells& cells) const {
        std::vector<char> in_splitter(static_cast<size_t>(n_), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t ti = 0; ti < cells.size() && !changed; ++ti) {
                if (cells[ti].size() <= 1) continue;
                for (size_t si = 0; si < cells.size() && !changed; ++si) {
                    for (int v : cells[si]) in_splitter[static_cast<size_t>(v)] = 1;
                    std::map<int, std::vector<int>> frag;
                    for (int v : cells[ti]) {
                        int cnt = 0;
                        for (int w : g_.neighbors(v)) cnt += in_splitter[static_cast<size_t>(w)];
                        frag[cnt].push_back(v);
                    }
                    for (int v : cells[si]) in_splitter[static_cast<size_t>(v)] = 0;
                    if (frag.size() > 1) {
                        Cells pieces;
                        for (auto& [cnt, vs] : frag) pieces.push_back(std::move(vs));
                        cells.erase(cells.begin() + static_cast<long>(ti));
                        cells.insert(cells.begin() + static_cast<long>(ti),
                                     std::make_move_iterator(pieces.begin()),
                                     std::make_move_iterator(pieces.end()));
                        changed = true;
                    }
                }
            }
        }
    }

    static bool is_discrete(const Cells& cells) {
        for (const auto& c : cells)
            if (c.size() != 1) return false;
        return true;
    }

    std::vector<int> labeling_of(const Cells& cells) const {
        std::vector<int> lab(static_cast<size_t>(n_), -1);
        for (size_t p = 0; p < cells.size(); ++p) lab[static_cast<size_t>(cells[p][0])] = static_cast<int>(p);
        return lab;
    }

    std::vector<std::uint8_t> code_of(const std::vector<int>& lab) const {
        std::vector<int> pos_to_orig(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) pos_to_orig[static_cast<size_t>(lab[static_cast<size_t>(v)])] = v;
        std::vector<std::uint8_t> code = prefix_;
        std::uint8_t acc = 0;
        int nbits = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                acc = static_cast<std::uint8_t>((acc << 1) |
                      adj_[idx(pos_to_orig[static_cast<size_t>(i)], pos_to_orig[static_cast<size_t>(j)])]);
                if (++nbits == 8) {
                    code.push_back(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        if (nbits > 0) code.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
        return code;
    }

    void handle_leaf(const Cells& cells) {
        std::vector<int> lab = labeling_of(cells);
        std::vector<std::uint8_t> code = code_of(lab);
        if (best_code_.empty() || code < best_code_) {
            best_code_ = std::move(code);
            best_labeling_ = std::move(lab);
            best_path_ = path_;
            return;
        }
        if (code == best_code_) {
            // gamma = best_labeling^{-1} o lab is an automorphism.
            std::vector<int> best_inv(static_cast<size_t>(n_));
            for (int v = 0; v < n_; ++v) best_inv[static_cast<size_t>(best_labeling_[static_cast<size_t>(v)])] = v;
            std::vector<int> gamma(static_cast<size_t>(n_));
            bool identity = true;
            for (int v = 0; v < n_; ++v) {
                gamma[static_cast<size_t>(v)] = best_inv[static_cast<size_t>(lab[static_cast<size_t>(v)])];
                if (gamma[static_cast<size_t>(v)] != v) identity = false;
            }
            if (!identity) generators_.push_back(std::move(gamma));
            // Jump back to the longest common prefix with the best path.
            size_t lcp = 0;
            while (lcp < path_.size() && lcp < best_path_.size() && path_[lcp] == best_path_[lcp]) ++lcp;
            retreat_depth_ = static_cast<int>(lcp);
        }
    }

    // Union-find over vertices, merged along every known generator that fixes
    // the current individualization prefix pointwise.
    std::vector<int> node_orbits() const {
        std::vector<int> parent(static_cast<size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int>* pp = &parent;
        auto find = [pp](int x) {
            while ((*pp)[static_cast<size_t>(x)] != x) {
                (*pp)[static_cast<size_t>(x)] = (*pp)[static_cast<size_t>((*pp)[static_cast<size_t>(x)])];
                x = (*pp)[static_cast<size_t>(x)];
            }
            return x;
        };
        for (const auto& gamma : generators_) {
            bool fixes = true;
            for (int p : path_)
                if (gamma[static_cast<size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(gamma[static_cast<size_t>(v)]);
                if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v) parent[static_cast<size_t>(v)] = find(v);
        return parent;
    }

    void search(Cells cells) {
        refine(cells);
        if (is_discrete(cells)) {
            handle_leaf(cells);
            return;
        }
        // First smallest non-singleton cell.
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() <= 1) continue;
            if (target == cells.size() || cells[i].size() < cells[target].size()) target = i;
        }
        const std::vector<int> candidates = cells[target];
        const int depth = static_cast<int>(path_.size());
        std::vector<int> tried;
        for (int v : candidates) {
            std::vector<int> orb = node_orbits();
            bool skip = false;
            for (int u : tried)
                if (orb[static_cast<size_t>(u)] == orb[static_cast<size_t>(v)]) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            Cells child = cells;
            std::vector<int> rest;
            for (int w : child[target])
                if (w != v) rest.push_back(w);
            child[target] = {v};
            child.insert(child.begin() + static_cast<long>(target) + 1, std::move(rest));
            path_.push_back(v);
            search(std::move(child));
            path_.pop_back();
            if (retreat_depth_ != INT_MAX) {
                if (retreat_depth_ < depth) return;
                retreat_depth_ = INT_MAX;
            }
        }
    }

    std::vector<int> orbits_from_generators() const {
        std::vector<int> parent(static_cast<size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int>* pp = &parent;
        auto find = [pp](int x) {
            while ((*pp)[static_cast<size_t>(x)] != x) {
                (*pp)[static_cast<size_t>(x)] = (*pp)[static_cast<size_t>((*pp)[static_cast<size_t>(x)])];
                x = (*pp)[static_cast<size_t>(x)];
            }
            return x;
        };
        for (const auto& gamma : generators_)
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(gamma[static_cast<size_t>(v)]);
                if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
            }
        for (int v = 0; v < n_; ++v) parent[static_cast<size_t>(v)] = find(v);
        return parent;
    }

    const Graph& g_;
    int n_;
    std::vector<char> adj_;
    Cells init_cells_;
    std::vector<std::uint8_t> prefix_;

    std::vector<std::uint8_t> best_code_;
    std::vector<int> best_labeling_;
    std::vector<int> best_path_;
    std::vector<int> path_;
    std::vector<std::vector<int>> generators_;
    int retreat_depth_ = INT_MAX;
};

}  // namespace detail_canon

inline CanonicalResult canonicalize(const Graph& g, const std::vector<int>& colors = {}) {
    detail_canon::Canonicalizer c(g, colors);
    return c.run();
}

inline std::vector<std::uint8_t> canonical_code(const Graph& g, const std::vector<int>& colors = {}) {
    return canonicalize(g, colors).code;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto degs = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    return canonical_code(a) == canonical_code(b);
}

inline bool is_isomorphic_colored(const Graph& a, const std::vector<int>& ca,
                                  const Graph& b, const std::vector<int>& cb) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a, ca) == canonical_code(b, cb);
}

// Exact vertex orbits under the (color-preserving) automorphism group.
inline std::vector<int> vertex_orbits(const Graph& g, const std::vector<int>& colors = {}) {
    return canonicalize(g, colors).orbit;
}

inline int orbit_count(const Graph& g) {
    auto orb = vertex_orbits(g);
    std::vector<int> reps(orb);
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return static_cast<int>(reps.size());
}

// Isomorphism-invariant signature of an unordered vertex pair: the canonical
// code of g with {u,v} singled out as the first color class. Two pairs get
// the same signature iff some automorphism maps one pair onto the other.
inline std::vector<std::uint8_t> pair_signature(const Graph& g, int u, int v) {
    std::vector<int> colors(static_cast<size_t>(g.vertex_count()), 1);
    colors[static_cast<size_t>(u)] = 0;
    colors[static_cast<size_t>(v)] = 0;
    return canonical_code(g, colors);
}

}  // namespace minorkit
