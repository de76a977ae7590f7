#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "canonical.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "planarity.hpp"

namespace minorkit {

// Verdict cache keyed by canonical code pairs, shared across calls only when
// the caller passes one in; by default every call is self-contained.
class MinorCache {
public:
    const bool* lookup(const std::vector<std::uint8_t>& h, const std::vector<std::uint8_t>& g) const {
        auto it = verdicts_.find({h, g});
        return it == verdicts_.end() ? nullptr : &it->second;
    }
    void store(std::vector<std::uint8_t> h, std::vector<std::uint8_t> g, bool verdict) {
        verdicts_[{std::move(h), std::move(g)}] = verdict;
    }

private:
    std::map<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>, bool> verdicts_;
};

namespace detail_minor {

// Branch-and-bound model search. Host vertices are assigned in id order to a
// branch set or to "deleted"; a node is cut when some branch set can no
// longer become connected, some pattern edge can no longer be realized, or
// too few host vertices remain.
class MinorSearch {
public:
    MinorSearch(const Graph& h, const Graph& g, long long* budget)
        : h_(h), g_(g), t_(h.vertex_count()), n_(g.vertex_count()), budget_(budget),
          assign_(static_cast<size_t>(n_), UNASSIGNED) {}

    std::optional<ContractionWitness> run() {
        if (t_ == 0) return ContractionWitness{h_, {}};
        if (t_ > n_ || h_.edge_count() > g_.edge_count()) return std::nullopt;
        if (dfs()) {
            ContractionWitness w{h_, {}};
            w.branch_sets.assign(static_cast<size_t>(t_), {});
            for (int v = 0; v < n_; ++v)
                if (assign_[static_cast<size_t>(v)] >= 0)
                    w.branch_sets[static_cast<size_t>(assign_[static_cast<size_t>(v)])].push_back(v);
            return w;
        }
        return std::nullopt;
    }

private:
    static constexpr int UNASSIGNED = -2;
    static constexpr int DELETED = -1;

    bool dfs() {
        if (--(*budget_) < 0) throw resource_limit_error("minor search: node budget exhausted");
        int v = -1;
        for (int u = 0; u < n_; ++u)
            if (assign_[static_cast<size_t>(u)] == UNASSIGNED) {
                v = u;
                break;
            }
        if (v < 0) return final_check();
        if (!feasible()) return false;
        for (int i = 0; i < t_; ++i) {
            assign_[static_cast<size_t>(v)] = i;
            if (dfs()) return true;
        }
        assign_[static_cast<size_t>(v)] = DELETED;
        if (dfs()) return true;
        assign_[static_cast<size_t>(v)] = UNASSIGNED;
        return false;
    }

    // Sound cuts on a partial assignment. A branch set is "frozen" once no
    // unassigned host vertex borders it: it can never gain vertices, so a
    // disconnected frozen piece or an unrealizable frozen edge kills the node.
    bool feasible() const {
        int unassigned = 0;
        for (int u = 0; u < n_; ++u)
            if (assign_[static_cast<size_t>(u)] == UNASSIGNED) ++unassigned;

        std::vector<std::vector<int>> sets(static_cast<size_t>(t_));
        for (int u = 0; u < n_; ++u)
            if (assign_[static_cast<size_t>(u)] >= 0) sets[static_cast<size_t>(assign_[static_cast<size_t>(u)])].push_back(u);

        int empty = 0;
        for (const auto& s : sets)
            if (s.empty()) ++empty;
        if (empty > unassigned) return false;

        std::vector<char> frozen(static_cast<size_t>(t_), 0);
        for (int i = 0; i < t_; ++i) {
            const auto& s = sets[static_cast<size_t>(i)];
            if (s.empty()) continue;
            bool any_growth = false;
            for (int u : s) {
                for (int w : g_.neighbors(u))
                    if (assign_[static_cast<size_t>(w)] == UNASSIGNED) {
                        any_growth = true;
                        break;
                    }
                if (any_growth) break;
            }
            if (!any_growth) {
                frozen[static_cast<size_t>(i)] = 1;
                if (!is_connected_set(g_, s)) return false;
            } else if (s.size() > 1 && !is_connected_set(g_, s)) {
                // every component needs room to grow toward the others
                std::vector<char> in_set(static_cast<size_t>(n_), 0);
                for (int u : s) in_set[static_cast<size_t>(u)] = 1;
                std::vector<int> comp(static_cast<size_t>(n_), -1);
                for (int start : s) {
                    if (comp[static_cast<size_t>(start)] >= 0) continue;
                    std::vector<int> stack{start}, members;
                    comp[static_cast<size_t>(start)] = start;
                    while (!stack.empty()) {
                        int x = stack.back();
                        stack.pop_back();
                        members.push_back(x);
                        for (int w : g_.neighbors(x))
                            if (in_set[static_cast<size_t>(w)] && comp[static_cast<size_t>(w)] < 0) {
                                comp[static_cast<size_t>(w)] = start;
                                stack.push_back(w);
                            }
                    }
                    bool can_grow = false;
                    for (int x : members) {
                        for (int w : g_.neighbors(x))
                            if (assign_[static_cast<size_t>(w)] == UNASSIGNED) {
                                can_grow = true;
                                break;
                            }
                        if (can_grow) break;
                    }
                    if (!can_grow) return false;
                }
            }
        }

        for (auto [i, j] : h_.edges()) {
            if (sets[static_cast<size_t>(i)].empty() && sets[static_cast<size_t>(j)].empty()) continue;
            if (!frozen[static_cast<size_t>(i)] && !frozen[static_cast<size_t>(j)]) continue;
            bool realized = false;
            for (int u : sets[static_cast<size_t>(i)]) {
                for (int w : g_.neighbors(u))
                    if (assign_[static_cast<size_t>(w)] == j) {
                        realized = true;
                        break;
                    }
                if (realized) break;
            }
            if (realized) continue;
            // a frozen nonempty side can never be reached later
            if ((frozen[static_cast<size_t>(i)] && !sets[static_cast<size_t>(i)].empty()) ||
                (frozen[static_cast<size_t>(j)] && !sets[static_cast<size_t>(j)].empty()))
                return false;
        }
        return true;
    }

    bool final_check() const {
        std::vector<std::vector<int>> sets(static_cast<size_t>(t_));
        for (int u = 0; u < n_; ++u)
            if (assign_[static_cast<size_t>(u)] >= 0) sets[static_cast<size_t>(assign_[static_cast<size_t>(u)])].push_back(u);
        for (const auto& s : sets)
            if (s.empty() || !is_connected_set(g_, s)) return false;
        for (auto [i, j] : h_.edges()) {
            bool realized = false;
            for (int u : sets[static_cast<size_t>(i)]) {
                for (int w : g_.neighbors(u))
                    if (assign_[static_cast<size_t>(w)] == j) {
                        realized = true;
                        break;
                    }
                if (realized) break;
            }
            if (!realized) return false;
        }
        return true;
    }

    const Graph& h_;
    const Graph& g_;
    int t_, n_;
    long long* budget_;
    std::vector<int> assign_;
};

}  // namespace detail_minor

// Shrinks a valid witness to an inclusion-minimal one (no branch-set vertex
// can be dropped without breaking validity).
inline ContractionWitness minimalize_witness(const Graph& g, ContractionWitness w) {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (auto& bs : w.branch_sets) {
            if (bs.size() <= 1) continue;
            for (size_t i = bs.size(); i-- > 0;) {
                int v = bs[i];
                bs.erase(bs.begin() + static_cast<long>(i));
                if (verify_witness(g, w).ok) {
                    shrunk = true;
                } else {
                    bs.insert(bs.begin() + static_cast<long>(i), v);
                }
            }
        }
    }
    return w;
}

// Is h a minor of g? Returns an inclusion-minimal witness on success.
inline std::optional<ContractionWitness> is_minor(const Graph& h, const Graph& g,
                                                  long long budget = 50000000,
                                                  MinorCache* cache = nullptr) {
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) return std::nullopt;
    // a minor of a planar graph is planar; settles planar hosts against
    // nonplanar patterns without any search
    if (!is_planar(h) && is_planar(g)) return std::nullopt;
    std::vector<std::uint8_t> ch, cg;
    if (cache) {
        ch = canonical_code(h);
        cg = canonical_code(g);
        if (const bool* v = cache->lookup(ch, cg); v && !*v) return std::nullopt;
    }
    auto w = detail_minor::MinorSearch(h, g, &budget).run();
    if (cache) cache->store(std::move(ch), std::move(cg), w.has_value());
    if (!w) return std::nullopt;
    ContractionWitness out = minimalize_witness(g, std::move(*w));
    WitnessReport rep = verify_witness(g, out);
    if (!rep.ok) throw construction_bug("minor search: produced witness fails validation: " + rep.detail);
    return out;
}

// Does some member of F embed as a minor of g?
inline bool family_minor(const std::vector<Graph>& F, const Graph& g,
                         long long budget = 50000000, MinorCache* cache = nullptr) {
    if (F.empty()) throw std::invalid_argument("family_minor: empty family");
    for (const auto& f : F)
        if (is_minor(f, g, budget, cache)) return true;
    return false;
}

namespace detail_minor {

// Embeds h topologically: branch vertices map injectively, each h-edge
// becomes a path, and the paths are internally disjoint and avoid all branch
// images.
class TopoSearch {
public:
    TopoSearch(const Graph& h, const Graph& g, long long* budget)
        : h_(h), g_(g), budget_(budget), image_(static_cast<size_t>(h.vertex_count()), -1),
          used_(static_cast<size_t>(g.vertex_count()), 0) {}

    bool run() {
        if (h_.vertex_count() > g_.vertex_count() || h_.edge_count() > g_.edge_count()) return false;
        // threshold feasibility of degrees
        std::vector<int> hd, gd;
        for (int v = 0; v < h_.vertex_count(); ++v) hd.push_back(h_.degree(v));
        for (int v = 0; v < g_.vertex_count(); ++v) gd.push_back(g_.degree(v));
        std::sort(hd.rbegin(), hd.rend());
        std::sort(gd.rbegin(), gd.rend());
        for (size_t i = 0; i < hd.size(); ++i)
            if (gd[i] < hd[i]) return false;
        edges_ = h_.edges();
        return place(0);
    }

private:
    bool place(int i) {
        if (--(*budget_) < 0) throw resource_limit_error("topological minor search: node budget exhausted");
        if (i == h_.vertex_count()) return realize(0);
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (used_[static_cast<size_t>(v)] || g_.degree(v) < h_.degree(i)) continue;
            image_[static_cast<size_t>(i)] = v;
            used_[static_cast<size_t>(v)] = 1;
            if (place(i + 1)) return true;
            used_[static_cast<size_t>(v)] = 0;
            image_[static_cast<size_t>(i)] = -1;
        }
        return false;
    }

    bool realize(size_t ei) {
        if (ei == edges_.size()) return true;
        auto [a, b] = edges_[ei];
        return extend(image_[static_cast<size_t>(a)], image_[static_cast<size_t>(b)], ei);
    }

    // grow a path from cur to target through unused vertices
    bool extend(int cur, int target, size_t ei) {
        if (--(*budget_) < 0) throw resource_limit_error("topological minor search: node budget exhausted");
        if (g_.has_edge(cur, target)) {
            if (realize(ei + 1)) return true;
        }
        for (int w : g_.neighbors(cur)) {
            if (used_[static_cast<size_t>(w)] || w == target) continue;
            used_[static_cast<size_t>(w)] = 1;
            if (extend(w, target, ei)) return true;
            used_[static_cast<size_t>(w)] = 0;
        }
        return false;
    }

    const Graph& h_;
    const Graph& g_;
    long long* budget_;
    std::vector<int> image_;
    std::vector<char> used_;
    std::vector<Edge> edges_;
};

}  // namespace detail_minor

inline bool is_topological_minor(const Graph& h, const Graph& g, long long budget = 50000000) {
    if (h.vertex_count() == 0) return true;
    return detail_minor::TopoSearch(h, g, &budget).run();
}

// F-hitting set of size at most k: branch on the vertices of an
// inclusion-minimal F-model, which every hitting set must intersect.
namespace detail_minor {

inline std::optional<std::vector<int>> hit(const Graph& g, const std::vector<Graph>& F, int k,
                                           std::vector<int>& deleted, long long* budget,
                                           MinorCache* cache) {
    // g-ids surviving the current deletions, in order
    std::vector<int> alive;
    std::vector<char> gone(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : deleted) gone[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[static_cast<size_t>(v)]) alive.push_back(v);
    Graph sub = induced_subgraph(g, alive);

    std::optional<ContractionWitness> model;
    for (const auto& f : F) {
        model = is_minor(f, sub, *budget, cache);
        if (model) break;
    }
    if (!model) return deleted;
    if (static_cast<int>(deleted.size()) == k) return std::nullopt;
    std::vector<int> fan;
    for (const auto& bs : model->branch_sets)
        for (int v : bs) fan.push_back(alive[static_cast<size_t>(v)]);
    std::sort(fan.begin(), fan.end());
    for (int v : fan) {
        if (--(*budget) < 0) throw resource_limit_error("hitting set: budget exhausted");
        deleted.push_back(v);
        auto res = hit(g, F, k, deleted, budget, cache);
        deleted.pop_back();
        if (res) return res;
    }
    return std::nullopt;
}

}  // namespace detail_minor

inline std::optional<std::vector<int>> hitting_set(const Graph& g, const std::vector<Graph>& F, int k,
                                                   long long budget = 50000000,
                                                   MinorCache* cache = nullptr) {
    if (k < 0) throw std::invalid_argument("hitting_set: negative k");
    if (F.empty()) throw std::invalid_argument("hitting_set: empty family");
    std::vector<int> deleted;
    auto res = detail_minor::hit(g, F, k, deleted, &budget, cache);
    if (res) std::sort(res->begin(), res->end());
    return res;
}

// Exhaustive reference: try all vertex subsets of size 0..k.
inline std::optional<std::vector<int>> hitting_set_bruteforce(const Graph& g, const std::vector<Graph>& F,
                                                              int k, long long budget = 50000000) {
    int n = g.vertex_count();
    if (n > 20) throw unsupported_error("hitting_set_bruteforce: host too large");
    for (int size = 0; size <= k; ++size) {
        std::vector<int> pick(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<size_t>(i)] = i;
        while (true) {
            if (!family_minor(F, delete_vertices(g, pick), budget)) return pick;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

inline bool is_in_Ak(const Graph& g, const std::vector<Graph>& F, int k,
                     long long budget = 50000000, MinorCache* cache = nullptr) {
    return hitting_set(g, F, k, budget, cache).has_value();
}

}  // namespace minorkit
